#ifndef GRADSEM_BENCH_HPP
#define GRADSEM_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "gradsem/graphgen.hpp"
#include "gradsem/inverse.hpp"

namespace gradsem {

/// Full experiment grid: every combination of family (Erdos-Renyi expands
/// over er_p), size, semantics, strategy, and iterations_per_pick runs
/// runs_per_size times with derived per-trial seeds.
struct ExperimentPlan {
    std::vector<GraphFamily> families{GraphFamily::ScaleFree, GraphFamily::ErdosRenyi,
                                      GraphFamily::Complete};
    std::vector<double> er_p{0.1, 0.3, 0.5, 0.7};
    std::vector<int> sizes;
    int runs_per_size = 15;
    std::uint64_t base_seed = 1;
    std::vector<Semantics> semantics{Semantics::MaxBased, Semantics::HCategorizer,
                                     Semantics::CardBased};
    std::vector<Strategy> strategies{Strategy::S3};
    std::vector<int> iterations_per_pick{2000};
    int ranking_levels = 5;
    double zeta = 1.0;
    double rel_eps = 1e-3;
    int max_bisect_calls = 1000;

    /// Throws ValidationError on an empty grid or non-positive sizes.
    void validate() const;
    std::size_t trial_count() const;
};

struct TrialRecord {
    GraphFamily family;
    int n = 0;
    double p = 0;       // meaningful only when has_p
    bool has_p = false; // Erdos-Renyi rows carry p, others leave the column blank
    std::uint64_t seed = 0;
    Semantics semantics;
    Strategy strategy;
    int iterations_per_pick = 0;
    int bisect_calls = 0;
    long long inner_iterations = 0;
    double runtime_ms = 0;
    Termination termination = Termination::Infeasible;
};

/// Runs every trial of the plan on up to `threads` workers. Records come
/// back in deterministic grid order regardless of scheduling; everything but
/// runtime_ms is reproducible for a fixed plan.
std::vector<TrialRecord> run_plan(const ExperimentPlan& plan, unsigned threads = 1);

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
};

/// Ordinary least squares of mean bisect_calls against n over the given
/// records (callers filter to one semantics/family/strategy first). Throws
/// ValidationError with fewer than 3 distinct sizes.
LinearFit fit_linear(std::span<const TrialRecord> records);

/// CSV with header family,n,p,seed,semantics,strategy,iters_per_pick,
/// bisect_calls,inner_iterations,runtime_ms,termination.
void write_csv(std::ostream& out, std::span<const TrialRecord> records);

/// Plan readers for the CLI (JSON object mirroring ExperimentPlan's fields).
ExperimentPlan plan_from_json_text(const std::string& text);
ExperimentPlan plan_from_file(const std::string& path);

} // namespace gradsem

#endif // GRADSEM_BENCH_HPP
