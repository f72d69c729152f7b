#ifndef GRADSEM_BISECTION_HPP
#define GRADSEM_BISECTION_HPP

#include <functional>

namespace gradsem {

struct BisectionConfig {
    double eps = 1e-3;    // accept midpoint mu when |f(mu)| < eps
    int max_depth = 200;  // halvings before giving up
    double width_eps = 0; // optional: also stop once beta - alpha < width_eps (> 0 enables)
};

struct BisectionOutcome {
    double root = 0;     // accepted midpoint (best midpoint so far if not converged)
    int evaluations = 0; // midpoint evaluations of f (bracket checks excluded)
    bool converged = false;
};

/// Bracketing root search on a decreasing function with f(alpha) >= 0 >=
/// f(beta): halve the bracket at mu = (alpha+beta)/2, accept mu when
/// |f(mu)| < eps, otherwise move the matching end to mu. Throws BracketError
/// when the sign precondition fails. An endpoint already within eps is
/// accepted directly with zero counted evaluations. Iterative, never
/// recursive. Callers with an increasing f wrap it in a negation.
BisectionOutcome bisect(const std::function<double(double)>& f, double alpha, double beta,
                        const BisectionConfig& cfg = {});

} // namespace gradsem

#endif // GRADSEM_BISECTION_HPP
