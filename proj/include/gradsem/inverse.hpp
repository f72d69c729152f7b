#ifndef GRADSEM_INVERSE_HPP
#define GRADSEM_INVERSE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gradsem/framework.hpp"
#include "gradsem/ranking.hpp"

namespace gradsem {

/// Argument-selection strategies for the weight search.
enum class Strategy {
    S1, // more preferred levels first
    S2, // less preferred levels first
    S3, // largest relative error first
    S4, // smallest relative error first
    S5, // uniform random among unconverged arguments
};

std::string_view to_string(Strategy s);
Strategy strategy_from_string(std::string_view name);

/// Per-level target degrees: every argument of level i aims at targets[i].
/// Strictly decreasing across levels, all in (0,1].
struct BoundsTable {
    std::vector<double> targets;

    double target_for(const Ranking& r, ArgIndex a) const { return targets[r.level_of(a)]; }
};

struct SolverConfig {
    double zeta = 1.0;             // slack added to every bound denominator
    double rel_eps = 1e-3;         // relative degree tolerance (also the bisection eps)
    int iterations_per_pick = 2000; // bisection halvings allowed per pick
    int max_bisect_calls = 1000;   // global budget of bisection invocations
    Strategy strategy = Strategy::S3;
    std::uint64_t rng_seed = 0;    // drives S5 only
};

enum class Termination {
    TargetsReached,
    RankingMatchedEarly,
    BudgetExceeded,
    Infeasible,
};

std::string_view to_string(Termination t);

struct SolveReport {
    std::vector<double> weights;  // solved initial weights (empty when Infeasible)
    std::vector<double> achieved; // degrees under the solved weights
    int bisect_calls = 0;
    long long total_inner_iterations = 0;
    Termination termination = Termination::Infeasible;
    std::vector<int> per_argument_visits;
    std::string note; // human-readable detail, e.g. the infeasibility witness
};

/// Level targets by the running-max recurrence, seeded with max = 1:
///   max-based:   min = max / (1 + max + zeta)
///   h-categorizer: min = max / (1 + maxAtt(level) + zeta)
///   card-based:  min = max / (2 + maxAtt(level) + zeta)
/// where maxAtt(level) is the largest attacker count among the level's
/// arguments. Throws ValidationError for semantics other than MB/HC/CB.
BoundsTable compute_bounds(const Ranking& levels, const WeightedFramework& structure,
                           Semantics s, double zeta);

/// Recurrence body on a raw level list (empty list -> empty table); each
/// entry of level_max_attackers is maxAtt of that level.
std::vector<double> compute_bound_targets(Semantics s, std::span<const std::size_t> level_max_attackers,
                                          double zeta);

/// Tightened upper end of the bisection bracket for an argument with target
/// degree m and n_attackers attackers; always capped at 1.
double beta_bound(Semantics s, double m, std::size_t n_attackers, double zeta);

/// Picks the next argument to adjust among those whose relative degree error
/// |degree - target| / target is at least rel_eps. Returns nullopt when all
/// arguments are within tolerance (the caller treats that as success). Ties
/// break by declaration order.
std::optional<ArgIndex> select_next(std::span<const double> degrees, std::span<const double> targets,
                                    const Ranking& target, double rel_eps, Strategy strategy,
                                    std::mt19937_64& rng);

/// Two-phase inverse solve for MB/HC/CB: compute the bounds table, start all
/// weights at their level target, then repeatedly bisect one argument's
/// weight toward its target until every relative error is below rel_eps
/// (TargetsReached), the evaluated degrees already realize the ranking
/// (RankingMatchedEarly, checked after each pick), or the call budget runs
/// out (BudgetExceeded). The trust-based and iterative-schema semantics are
/// routed to their special-case handlers. The structure's own weights are
/// ignored.
SolveReport solve(const WeightedFramework& structure, const Ranking& target, Semantics s,
                  const SolverConfig& cfg = {});

/// Trust-based special case: weights strictly below 0.5 are fixed points, so
/// level i receives 0.49 * (n+1-i)/(n+1) for n+1 levels; degrees equal
/// weights and the ranking holds by construction.
SolveReport solve_trivial_tb(const WeightedFramework& structure, const Ranking& target);

enum class IsFeasibility { Infeasible, Unknown };

struct FeasibilityVerdict {
    IsFeasibility verdict = IsFeasibility::Unknown;
    std::string reason;
};

/// Screens iterative-schema targets: more than three levels can never be
/// realized (the semantics admits only degrees {0, 0.5, 1}), and an
/// unattacked attacker ranked strictly below one of its victims is a
/// structural witness of infeasibility. Anything else is Unknown; this is a
/// screen, not a decision procedure.
FeasibilityVerdict check_is_feasibility(const WeightedFramework& structure, const Ranking& target);

} // namespace gradsem

#endif // GRADSEM_INVERSE_HPP
