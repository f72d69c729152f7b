#ifndef GRADSEM_SEMANTICS_HPP
#define GRADSEM_SEMANTICS_HPP

#include <span>
#include <vector>

#include "gradsem/framework.hpp"

namespace gradsem {

struct IterationConfig {
    double convergence_eps = 1e-9; // L-inf distance between successive iterates
    int max_iterations = 10000;
};

struct EvaluationResult {
    DegreeAssignment degrees;
    int iterations_used = 0;
    bool converged = false;
};

/// One synchronous update of every argument's degree under semantics s:
/// every output is computed from `current` only (Jacobi-style, never
/// in-place). Outputs stay in [0,1]. `weights` are the initial weights the
/// recurrence reads; the spanless overload uses the framework's own.
std::vector<double> step(const WeightedFramework& f, std::span<const double> weights,
                         Semantics s, std::span<const double> current);
std::vector<double> step(const WeightedFramework& f, Semantics s, std::span<const double> current);

/// Iterates `step` from degrees = weights until the L-inf change drops below
/// cfg.convergence_eps or cfg.max_iterations is reached; `converged` reports
/// which. For the iterative-schema semantics, converged degrees within 1e-4
/// of {0, 0.5, 1} are snapped to those exact values (that semantics admits
/// only these three limits).
EvaluationResult evaluate(const WeightedFramework& f, Semantics s, IterationConfig cfg = {});

/// Same, with the framework's weights overridden (used by the inverse solver,
/// which re-evaluates under many trial weights without copying the graph).
EvaluationResult evaluate_with_weights(const WeightedFramework& f, std::span<const double> weights,
                                       Semantics s, IterationConfig cfg = {});

} // namespace gradsem

#endif // GRADSEM_SEMANTICS_HPP
