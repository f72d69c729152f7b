#ifndef GRADSEM_RANKING_HPP
#define GRADSEM_RANKING_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "gradsem/framework.hpp"

namespace gradsem {

/// An ordered partition of the arguments 0..n-1 into non-empty preference
/// levels, most preferred first. Arguments within a level are equally
/// preferred; every argument appears in exactly one level.
class Ranking {
public:
    /// Validates disjointness, exhaustiveness over n_arguments, and that no
    /// level is empty.
    static Ranking create(std::vector<std::vector<ArgIndex>> levels, std::size_t n_arguments);

    std::size_t level_count() const { return levels_.size(); }
    std::size_t argument_count() const { return level_of_.size(); }
    const std::vector<ArgIndex>& level(std::size_t i) const { return levels_[i]; }
    const std::vector<std::vector<ArgIndex>>& levels() const { return levels_; }
    std::size_t level_of(ArgIndex a) const { return level_of_[a]; }

    bool operator==(const Ranking& other) const { return levels_ == other.levels_; }

private:
    Ranking() = default;

    std::vector<std::vector<ArgIndex>> levels_;
    std::vector<std::size_t> level_of_;
};

/// Groups arguments into preference levels by descending degree. Two
/// arguments land in the same level iff their degrees are within tol of the
/// level's top degree, so every level has diameter <= tol. Within a level,
/// arguments keep declaration order.
Ranking induced_ranking(std::span<const double> degrees, double tol);

/// True iff the degrees realize the target ranking: strictly higher level
/// implies degree greater by more than tol, same level implies degrees within
/// tol of each other. Throws ValidationError when the ranking does not cover
/// exactly the degree vector's arguments.
bool ranking_matches(const Ranking& target, std::span<const double> degrees, double tol);

/// Scale-aware variant: each level's degree spread must stay within rel_tol
/// of the level's largest degree, and each level's smallest degree must
/// exceed the next level's largest by more than rel_tol of itself. Use this
/// when level degrees span several orders of magnitude (deep rankings on
/// dense graphs), where no single absolute tol can both accept top-level
/// ties and separate bottom-level neighbours.
bool ranking_matches_rel(const Ranking& target, std::span<const double> degrees, double rel_tol);

} // namespace gradsem

#endif // GRADSEM_RANKING_HPP
