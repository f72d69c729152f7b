#include "gradsem/bisection.hpp"

#include <cmath>
#include <string>

#include "gradsem/errors.hpp"

namespace gradsem {

BisectionOutcome bisect(const std::function<double(double)>& f, double alpha, double beta,
                        const BisectionConfig& cfg) {
    if (!(cfg.eps > 0) && !(cfg.width_eps > 0))
        throw ValidationError("bisection needs eps > 0 or width_eps > 0");
    if (!(alpha <= beta))
        throw ValidationError("bisection bracket has alpha > beta");

    const double f_alpha = f(alpha);
    const double f_beta = f(beta);
    if (f_alpha < 0)
        throw BracketError("f(alpha) = " + std::to_string(f_alpha) + " < 0; bracket invalid");
    if (f_beta > 0)
        throw BracketError("f(beta) = " + std::to_string(f_beta) + " > 0; bracket invalid");

    BisectionOutcome out;
    if (std::fabs(f_alpha) < cfg.eps) {
        out.root = alpha;
        out.converged = true;
        return out;
    }
    if (std::fabs(f_beta) < cfg.eps) {
        out.root = beta;
        out.converged = true;
        return out;
    }

    out.root = 0.5 * (alpha + beta);
    while (out.evaluations < cfg.max_depth) {
        if (cfg.width_eps > 0 && beta - alpha < cfg.width_eps) break;
        const double mu = 0.5 * (alpha + beta);
        const double f_mu = f(mu);
        ++out.evaluations;
        out.root = mu;
        if (std::fabs(f_mu) < cfg.eps) {
            out.converged = true;
            return out;
        }
        if (f_mu > 0)
            alpha = mu;
        else
            beta = mu;
    }
    return out;
}

} // namespace gradsem
