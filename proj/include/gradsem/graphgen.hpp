#ifndef GRADSEM_GRAPHGEN_HPP
#define GRADSEM_GRAPHGEN_HPP

#include <cstdint>
#include <string_view>

#include "gradsem/framework.hpp"
#include "gradsem/ranking.hpp"

namespace gradsem {

enum class GraphFamily { ScaleFree, ErdosRenyi, Complete };

std::string_view to_string(GraphFamily f);
GraphFamily family_from_string(std::string_view name);

struct GraphSpec {
    GraphFamily family = GraphFamily::ErdosRenyi;
    int n = 1;            // argument count
    double p = 0.0;       // edge probability (Erdos-Renyi only)
    std::uint64_t seed = 0;
};

/// Deterministic, seeded attack-graph generation. Arguments are named
/// a0..a{n-1}; all weights default to 0.5.
///   ScaleFree:  growth process, each new node attacks 2 distinct existing
///               nodes picked with probability proportional to in-degree + 1.
///   ErdosRenyi: every ordered pair, self-loops included, is an attack
///               independently with probability p.
///   Complete:   all n^2 ordered pairs, self-attacks included.
WeightedFramework generate(const GraphSpec& spec);

/// Uniformly assigns each of n_arguments to one of n_levels levels, then
/// drops empty levels. Deterministic per seed.
Ranking random_ranking(std::size_t n_arguments, int n_levels, std::uint64_t seed);

} // namespace gradsem

#endif // GRADSEM_GRAPHGEN_HPP
