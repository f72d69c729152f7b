#ifndef GRADSEM_FRAMEWORK_HPP
#define GRADSEM_FRAMEWORK_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gradsem {

using ArgIndex = std::uint32_t;

/// The five gradual semantics handled by this library.
enum class Semantics {
    TrustBased,      // tb
    IterativeSchema, // is
    MaxBased,        // mb
    CardBased,       // cb
    HCategorizer,    // hc
};

std::string_view to_string(Semantics s);
Semantics semantics_from_string(std::string_view name);

/// A weighted argumentation framework: a finite set of named arguments, a
/// binary attack relation over them, and an initial weight in [0,1] per
/// argument. Immutable after construction; argument indices follow
/// declaration order, which makes every downstream computation
/// deterministic.
class WeightedFramework {
public:
    /// Validates and builds a framework. Rejects duplicate argument names,
    /// duplicate attack pairs, attack endpoints or weight keys that are not
    /// declared arguments, missing weights, and weights outside [0,1].
    /// Self-attacks and cycles are allowed.
    static WeightedFramework create(std::vector<std::string> arguments,
                                    std::vector<std::pair<std::string, std::string>> attacks,
                                    const std::unordered_map<std::string, double>& weights);

    /// Convenience for tests and generators: all weights given positionally.
    static WeightedFramework create(std::vector<std::string> arguments,
                                    std::vector<std::pair<std::string, std::string>> attacks,
                                    std::vector<double> weights);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& argument_names() const { return names_; }
    const std::string& name_of(ArgIndex a) const { return names_[a]; }

    /// Throws UnknownArgumentError if the name is not declared.
    ArgIndex index_of(std::string_view name) const;
    bool has_argument(std::string_view name) const;

    /// Attackers of a, i.e. every b with (b,a) in the attack relation.
    const std::vector<ArgIndex>& attackers(ArgIndex a) const { return attackers_[a]; }
    const std::vector<ArgIndex>& attackers(std::string_view name) const;

    /// Attack pairs in declaration order.
    const std::vector<std::pair<ArgIndex, ArgIndex>>& attacks() const { return attacks_; }

    double weight(ArgIndex a) const { return weights_[a]; }
    const std::vector<double>& weights() const { return weights_; }

    /// Copy of this framework with the weight vector replaced (same checks).
    WeightedFramework with_weights(std::vector<double> weights) const;

private:
    WeightedFramework() = default;

    std::vector<std::string> names_;
    std::unordered_map<std::string, ArgIndex> index_;
    std::vector<std::pair<ArgIndex, ArgIndex>> attacks_;
    std::vector<std::vector<ArgIndex>> attackers_;
    std::vector<double> weights_;
};

/// A total map argument -> acceptability degree in [0,1], aligned with the
/// framework's argument order.
struct DegreeAssignment {
    std::vector<double> values;

    double operator[](ArgIndex a) const { return values[a]; }
    std::size_t size() const { return values.size(); }

    /// Throws ValidationError unless every value lies in [0,1].
    static DegreeAssignment checked(std::vector<double> values);
};

} // namespace gradsem

#endif // GRADSEM_FRAMEWORK_HPP
