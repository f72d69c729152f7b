#include "gradsem/graphgen.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "gradsem/errors.hpp"

namespace gradsem {

std::string_view to_string(GraphFamily f) {
    switch (f) {
    case GraphFamily::ScaleFree: return "sf";
    case GraphFamily::ErdosRenyi: return "er";
    case GraphFamily::Complete: return "complete";
    }
    return "?";
}

GraphFamily family_from_string(std::string_view name) {
    if (name == "sf") return GraphFamily::ScaleFree;
    if (name == "er") return GraphFamily::ErdosRenyi;
    if (name == "complete") return GraphFamily::Complete;
    throw ValidationError("unknown graph family '" + std::string(name) +
                          "' (expected sf|er|complete)");
}

namespace {

// Draws from the raw generator rather than std distributions so output is
// identical across standard libraries.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

std::vector<std::string> make_names(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    return names;
}

using AttackList = std::vector<std::pair<std::string, std::string>>;

AttackList scale_free_attacks(const std::vector<std::string>& names, std::mt19937_64& rng) {
    constexpr int kOutEdges = 2;
    const std::size_t n = names.size();
    AttackList attacks;
    std::vector<std::size_t> in_degree(n, 0);
    for (std::size_t v = 1; v < n; ++v) {
        const int edges = std::min<int>(kOutEdges, static_cast<int>(v));
        std::vector<std::size_t> chosen;
        for (int e = 0; e < edges; ++e) {
            // preferential attachment over the existing nodes, weight in-degree + 1
            double total = 0;
            for (std::size_t u = 0; u < v; ++u)
                if (std::find(chosen.begin(), chosen.end(), u) == chosen.end())
                    total += static_cast<double>(in_degree[u] + 1);
            double r = uniform01(rng) * total;
            std::size_t picked = v; // sentinel
            for (std::size_t u = 0; u < v; ++u) {
                if (std::find(chosen.begin(), chosen.end(), u) != chosen.end()) continue;
                r -= static_cast<double>(in_degree[u] + 1);
                if (r <= 0) {
                    picked = u;
                    break;
                }
            }
            if (picked == v) { // numerical tail: take the last unchosen node
                for (std::size_t u = v; u-- > 0;) {
                    if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) {
                        picked = u;
                        break;
                    }
                }
            }
            chosen.push_back(picked);
            in_degree[picked] += 1;
            attacks.emplace_back(names[v], names[picked]);
        }
    }
    return attacks;
}

AttackList erdos_renyi_attacks(const std::vector<std::string>& names, double p,
                               std::mt19937_64& rng) {
    AttackList attacks;
    for (const auto& from : names)
        for (const auto& to : names)
            if (uniform01(rng) < p) attacks.emplace_back(from, to);
    return attacks;
}

AttackList complete_attacks(const std::vector<std::string>& names) {
    AttackList attacks;
    attacks.reserve(names.size() * names.size());
    for (const auto& from : names)
        for (const auto& to : names) attacks.emplace_back(from, to);
    return attacks;
}

} // namespace

WeightedFramework generate(const GraphSpec& spec) {
    if (spec.n < 1) throw ValidationError("graph size must be >= 1");
    if (spec.family == GraphFamily::ErdosRenyi && !(spec.p >= 0.0 && spec.p <= 1.0))
        throw ValidationError("edge probability must lie in [0,1]");

    std::mt19937_64 rng(spec.seed);
    std::vector<std::string> names = make_names(spec.n);
    AttackList attacks;
    switch (spec.family) {
    case GraphFamily::ScaleFree: attacks = scale_free_attacks(names, rng); break;
    case GraphFamily::ErdosRenyi: attacks = erdos_renyi_attacks(names, spec.p, rng); break;
    case GraphFamily::Complete: attacks = complete_attacks(names); break;
    }
    std::vector<double> weights(names.size(), 0.5);
    return WeightedFramework::create(std::move(names), std::move(attacks), std::move(weights));
}

Ranking random_ranking(std::size_t n_arguments, int n_levels, std::uint64_t seed) {
    if (n_arguments < 1) throw ValidationError("ranking needs at least one argument");
    if (n_levels < 1) throw ValidationError("level count must be >= 1");

    std::mt19937_64 rng(seed);
    std::vector<std::vector<ArgIndex>> levels(static_cast<std::size_t>(n_levels));
    for (ArgIndex a = 0; a < n_arguments; ++a)
        levels[uniform_index(rng, levels.size())].push_back(a);
    std::erase_if(levels, [](const auto& level) { return level.empty(); });
    return Ranking::create(std::move(levels), n_arguments);
}

} // namespace gradsem
