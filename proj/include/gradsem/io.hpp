#ifndef GRADSEM_IO_HPP
#define GRADSEM_IO_HPP

#include <iosfwd>
#include <string>

#include "gradsem/framework.hpp"
#include "gradsem/ranking.hpp"

namespace gradsem {

/// Framework file: {"arguments": [...], "attacks": [["b","a"], ...],
/// "weights": {"a": 0.43, ...}}. Rejects unknown arguments, duplicates and
/// out-of-range weights; error messages name the offending element.
WeightedFramework framework_from_json_text(const std::string& text);
WeightedFramework framework_from_file(const std::string& path);
std::string framework_to_json_text(const WeightedFramework& f);
void framework_to_file(const WeightedFramework& f, const std::string& path);

/// Ranking file: {"levels": [["a"], ["b","c"], ...]}, most preferred first.
/// Validated against the framework's argument set.
Ranking ranking_from_json_text(const std::string& text, const WeightedFramework& f);
Ranking ranking_from_file(const std::string& path, const WeightedFramework& f);
std::string ranking_to_json_text(const Ranking& r, const WeightedFramework& f);
void ranking_to_file(const Ranking& r, const WeightedFramework& f, const std::string& path);

} // namespace gradsem

#endif // GRADSEM_IO_HPP
