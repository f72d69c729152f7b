#include "gradsem/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gradsem/bisection.hpp"
#include "gradsem/errors.hpp"
#include "gradsem/semantics.hpp"

namespace gradsem {

std::string_view to_string(Strategy s) {
    switch (s) {
    case Strategy::S1: return "s1";
    case Strategy::S2: return "s2";
    case Strategy::S3: return "s3";
    case Strategy::S4: return "s4";
    case Strategy::S5: return "s5";
    }
    return "?";
}

Strategy strategy_from_string(std::string_view name) {
    if (name == "s1") return Strategy::S1;
    if (name == "s2") return Strategy::S2;
    if (name == "s3") return Strategy::S3;
    if (name == "s4") return Strategy::S4;
    if (name == "s5") return Strategy::S5;
    throw ValidationError("unknown strategy '" + std::string(name) + "' (expected s1..s5)");
}

std::string_view to_string(Termination t) {
    switch (t) {
    case Termination::TargetsReached: return "TargetsReached";
    case Termination::RankingMatchedEarly: return "RankingMatchedEarly";
    case Termination::BudgetExceeded: return "BudgetExceeded";
    case Termination::Infeasible: return "Infeasible";
    }
    return "?";
}

namespace {

// Within-level tie slack used by the early-exit ranking check: at
// convergence every degree sits within rel_eps of its level target, so ties
// can legitimately spread to 2*rel_eps relative; 3x leaves margin. Level
// separation is never the binding constraint because consecutive bound
// targets differ by at least a factor of 2 for zeta = 1.
constexpr double kTieSlackFactor = 3.0;

double relative_error(double degree, double target) {
    return std::fabs(degree - target) / target;
}

} // namespace

std::vector<double> compute_bound_targets(Semantics s, std::span<const std::size_t> level_max_attackers,
                                          double zeta) {
    if (s != Semantics::MaxBased && s != Semantics::HCategorizer && s != Semantics::CardBased)
        throw ValidationError("bounds are defined for mb/hc/cb only, not " +
                              std::string(to_string(s)));
    if (!(zeta > 0)) throw ValidationError("zeta must be > 0");

    std::vector<double> targets;
    targets.reserve(level_max_attackers.size());
    double running_max = 1.0;
    for (std::size_t max_att : level_max_attackers) {
        double min = 0;
        switch (s) {
        case Semantics::MaxBased:
            min = running_max / (1.0 + running_max + zeta);
            break;
        case Semantics::HCategorizer:
            min = running_max / (1.0 + static_cast<double>(max_att) + zeta);
            break;
        case Semantics::CardBased:
            min = running_max / (2.0 + static_cast<double>(max_att) + zeta);
            break;
        default:
            break;
        }
        targets.push_back(min);
        running_max = min;
    }
    return targets;
}

BoundsTable compute_bounds(const Ranking& levels, const WeightedFramework& structure,
                           Semantics s, double zeta) {
    if (levels.argument_count() != structure.size())
        throw ValidationError("ranking does not cover the framework's arguments");
    std::vector<std::size_t> max_att;
    max_att.reserve(levels.level_count());
    for (std::size_t li = 0; li < levels.level_count(); ++li) {
        std::size_t m = 0;
        for (ArgIndex a : levels.level(li)) m = std::max(m, structure.attackers(a).size());
        max_att.push_back(m);
    }
    return BoundsTable{compute_bound_targets(s, max_att, zeta)};
}

double beta_bound(Semantics s, double m, std::size_t n_attackers, double zeta) {
    const double n = static_cast<double>(n_attackers);
    switch (s) {
    case Semantics::MaxBased: return std::min((2.0 + zeta) * m, 1.0);
    case Semantics::HCategorizer: return std::min(m * (1.0 + n + zeta), 1.0);
    case Semantics::CardBased: return std::min((2.0 + n + zeta) * m, 1.0);
    default:
        throw ValidationError("beta bound is defined for mb/hc/cb only");
    }
}

std::optional<ArgIndex> select_next(std::span<const double> degrees, std::span<const double> targets,
                                    const Ranking& target, double rel_eps, Strategy strategy,
                                    std::mt19937_64& rng) {
    std::vector<ArgIndex> candidates;
    for (ArgIndex a = 0; a < degrees.size(); ++a)
        if (relative_error(degrees[a], targets[a]) >= rel_eps) candidates.push_back(a);
    if (candidates.empty()) return std::nullopt;

    switch (strategy) {
    case Strategy::S1:
        return *std::min_element(candidates.begin(), candidates.end(),
                                 [&](ArgIndex a, ArgIndex b) {
                                     return target.level_of(a) < target.level_of(b);
                                 });
    case Strategy::S2:
        return *std::min_element(candidates.begin(), candidates.end(),
                                 [&](ArgIndex a, ArgIndex b) {
                                     return target.level_of(a) > target.level_of(b);
                                 });
    case Strategy::S3:
        return *std::min_element(candidates.begin(), candidates.end(),
                                 [&](ArgIndex a, ArgIndex b) {
                                     return relative_error(degrees[a], targets[a]) >
                                            relative_error(degrees[b], targets[b]);
                                 });
    case Strategy::S4:
        return *std::min_element(candidates.begin(), candidates.end(),
                                 [&](ArgIndex a, ArgIndex b) {
                                     return relative_error(degrees[a], targets[a]) <
                                            relative_error(degrees[b], targets[b]);
                                 });
    case Strategy::S5: {
        const std::size_t i = static_cast<std::size_t>(rng() % candidates.size());
        return candidates[i];
    }
    }
    return std::nullopt;
}

namespace {

SolveReport solve_is(const WeightedFramework& structure, const Ranking& target) {
    SolveReport report;
    report.per_argument_visits.assign(structure.size(), 0);
    report.termination = Termination::Infeasible;
    const FeasibilityVerdict verdict = check_is_feasibility(structure, target);
    report.note = verdict.verdict == IsFeasibility::Infeasible
                      ? verdict.reason
                      : "iterative-schema inversion beyond the feasibility screen is unsupported";
    return report;
}

} // namespace

SolveReport solve(const WeightedFramework& structure, const Ranking& target, Semantics s,
                  const SolverConfig& cfg) {
    if (target.argument_count() != structure.size())
        throw ValidationError("ranking does not cover the framework's arguments");
    if (!(cfg.rel_eps > 0) || !(cfg.zeta > 0) || cfg.iterations_per_pick < 1 ||
        cfg.max_bisect_calls < 1)
        throw ValidationError("solver config values must be positive");

    if (s == Semantics::TrustBased) return solve_trivial_tb(structure, target);
    if (s == Semantics::IterativeSchema) return solve_is(structure, target);

    const std::size_t n = structure.size();
    const BoundsTable bounds = compute_bounds(target, structure, s, cfg.zeta);
    std::vector<double> targets(n);
    for (ArgIndex a = 0; a < n; ++a) targets[a] = bounds.targets[target.level_of(a)];

    SolveReport report;
    report.per_argument_visits.assign(n, 0);
    report.weights = targets; // degrees start at or below target: denominators are >= 1
    std::mt19937_64 rng(cfg.rng_seed);

    auto evaluate_all = [&](const std::vector<double>& w) {
        EvaluationResult r = evaluate_with_weights(structure, w, s);
        if (!r.converged)
            throw ConvergenceError("semantics evaluation did not converge during solve");
        return std::move(r.degrees.values);
    };

    std::vector<double> degrees = evaluate_all(report.weights);
    const double tie_rel_tol = kTieSlackFactor * cfg.rel_eps;

    while (true) {
        std::optional<ArgIndex> pick =
            select_next(degrees, targets, target, cfg.rel_eps, cfg.strategy, rng);
        if (!pick) {
            report.termination = Termination::TargetsReached;
            break;
        }
        if (report.bisect_calls >= cfg.max_bisect_calls) {
            report.termination = Termination::BudgetExceeded;
            break;
        }

        const ArgIndex a = *pick;
        const double m = targets[a];
        std::vector<double> trial = report.weights;
        const auto objective = [&](double x) {
            trial[a] = x;
            const std::vector<double> d = evaluate_all(trial);
            return (m - d[a]) / m;
        };

        const double beta = beta_bound(s, m, structure.attackers(a).size(), cfg.zeta);
        const BisectionConfig bisect_cfg{cfg.rel_eps, cfg.iterations_per_pick, 0};
        BisectionOutcome outcome;
        try {
            outcome = bisect(objective, m, beta, bisect_cfg);
        } catch (const BracketError&) {
            // The degree at the minimum weight already exceeds the target
            // (possible only transiently); retry once from weight 0.
            try {
                outcome = bisect(objective, 0.0, beta, bisect_cfg);
            } catch (const BracketError& e) {
                report.termination = Termination::Infeasible;
                report.note = "no valid bracket for '" + structure.name_of(a) + "': " + e.what();
                report.weights.clear();
                report.achieved.clear();
                return report;
            }
        }

        report.weights[a] = outcome.root;
        report.bisect_calls += 1;
        report.total_inner_iterations += outcome.evaluations;
        report.per_argument_visits[a] += 1;

        degrees = evaluate_all(report.weights);
        if (ranking_matches_rel(target, degrees, tie_rel_tol)) {
            report.termination = Termination::RankingMatchedEarly;
            break;
        }
    }

    report.achieved = std::move(degrees);
    return report;
}

SolveReport solve_trivial_tb(const WeightedFramework& structure, const Ranking& target) {
    if (target.argument_count() != structure.size())
        throw ValidationError("ranking does not cover the framework's arguments");

    SolveReport report;
    report.per_argument_visits.assign(structure.size(), 0);
    report.weights.assign(structure.size(), 0.0);
    const double n_levels = static_cast<double>(target.level_count());
    for (std::size_t li = 0; li < target.level_count(); ++li) {
        // strictly below 0.5 and strictly decreasing by level
        const double w = 0.49 * (n_levels - static_cast<double>(li)) / n_levels;
        for (ArgIndex a : target.level(li)) report.weights[a] = w;
    }
    report.achieved = report.weights; // below 0.5 everywhere, weights are the fixed point
    report.termination = Termination::TargetsReached;
    return report;
}

FeasibilityVerdict check_is_feasibility(const WeightedFramework& structure, const Ranking& target) {
    if (target.argument_count() != structure.size())
        throw ValidationError("ranking does not cover the framework's arguments");

    if (target.level_count() > 3)
        return {IsFeasibility::Infeasible,
                "iterative-schema degrees admit only three levels (0, 0.5, 1); target has " +
                    std::to_string(target.level_count())};

    for (const auto& [attacker, victim] : structure.attacks()) {
        if (structure.attackers(attacker).empty() &&
            target.level_of(attacker) > target.level_of(victim)) {
            return {IsFeasibility::Infeasible,
                    "unattacked attacker '" + structure.name_of(attacker) +
                        "' always reaches degree 1 but is ranked below its victim '" +
                        structure.name_of(victim) + "'"};
        }
    }
    return {IsFeasibility::Unknown, "no infeasibility witness found"};
}

} // namespace gradsem
