#include "gradsem/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gradsem/errors.hpp"

namespace gradsem {

Ranking Ranking::create(std::vector<std::vector<ArgIndex>> levels, std::size_t n_arguments) {
    Ranking r;
    r.level_of_.assign(n_arguments, std::numeric_limits<std::size_t>::max());
    std::size_t placed = 0;
    for (std::size_t li = 0; li < levels.size(); ++li) {
        if (levels[li].empty()) throw ValidationError("ranking level " + std::to_string(li) + " is empty");
        for (ArgIndex a : levels[li]) {
            if (a >= n_arguments)
                throw ValidationError("ranking refers to argument index " + std::to_string(a) +
                                      " out of range");
            if (r.level_of_[a] != std::numeric_limits<std::size_t>::max())
                throw ValidationError("argument index " + std::to_string(a) +
                                      " appears in more than one level");
            r.level_of_[a] = li;
            ++placed;
        }
    }
    if (placed != n_arguments)
        throw ValidationError("ranking covers " + std::to_string(placed) + " of " +
                              std::to_string(n_arguments) + " arguments");
    r.levels_ = std::move(levels);
    return r;
}

Ranking induced_ranking(std::span<const double> degrees, double tol) {
    if (tol < 0) throw ValidationError("tie tolerance must be >= 0");
    std::vector<ArgIndex> order(degrees.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](ArgIndex a, ArgIndex b) { return degrees[a] > degrees[b]; });

    std::vector<std::vector<ArgIndex>> levels;
    double anchor = 0;
    for (ArgIndex a : order) {
        if (levels.empty() || anchor - degrees[a] > tol) {
            levels.push_back({a});
            anchor = degrees[a];
        } else {
            levels.back().push_back(a);
        }
    }
    // keep declaration order inside a level
    for (auto& level : levels) std::sort(level.begin(), level.end());
    return Ranking::create(std::move(levels), degrees.size());
}

namespace {

struct LevelSpread {
    double min;
    double max;
};

std::vector<LevelSpread> level_spreads(const Ranking& target, std::span<const double> degrees) {
    if (target.argument_count() != degrees.size())
        throw ValidationError("ranking covers " + std::to_string(target.argument_count()) +
                              " arguments but " + std::to_string(degrees.size()) + " degrees given");
    std::vector<LevelSpread> spreads;
    spreads.reserve(target.level_count());
    for (std::size_t li = 0; li < target.level_count(); ++li) {
        LevelSpread s{std::numeric_limits<double>::infinity(),
                      -std::numeric_limits<double>::infinity()};
        for (ArgIndex a : target.level(li)) {
            s.min = std::min(s.min, degrees[a]);
            s.max = std::max(s.max, degrees[a]);
        }
        spreads.push_back(s);
    }
    return spreads;
}

} // namespace

bool ranking_matches(const Ranking& target, std::span<const double> degrees, double tol) {
    if (tol < 0) throw ValidationError("tie tolerance must be >= 0");
    const auto spreads = level_spreads(target, degrees);
    for (std::size_t li = 0; li < spreads.size(); ++li) {
        if (spreads[li].max - spreads[li].min > tol) return false;
        // adjacent separation implies separation from all deeper levels
        if (li + 1 < spreads.size() && !(spreads[li].min > spreads[li + 1].max + tol)) return false;
    }
    return true;
}

bool ranking_matches_rel(const Ranking& target, std::span<const double> degrees, double rel_tol) {
    if (rel_tol < 0) throw ValidationError("tie tolerance must be >= 0");
    const auto spreads = level_spreads(target, degrees);
    for (std::size_t li = 0; li < spreads.size(); ++li) {
        if (spreads[li].max - spreads[li].min > rel_tol * spreads[li].max) return false;
        if (li + 1 < spreads.size() &&
            !(spreads[li].min - spreads[li + 1].max > rel_tol * spreads[li].min))
            return false;
    }
    return true;
}

} // namespace gradsem
