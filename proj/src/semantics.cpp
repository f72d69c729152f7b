#include "gradsem/semantics.hpp"

#include <algorithm>
#include <cmath>

#include "gradsem/errors.hpp"

namespace gradsem {

namespace {

double max_attacker_degree(const std::vector<ArgIndex>& attackers, std::span<const double> d) {
    double m = 0.0; // max over the empty set is 0
    for (ArgIndex b : attackers) m = std::max(m, d[b]);
    return m;
}

// Attackers with strictly positive initial weight, per argument (card-based only).
std::vector<std::vector<ArgIndex>> positive_attackers(const WeightedFramework& f,
                                                      std::span<const double> weights) {
    std::vector<std::vector<ArgIndex>> att(f.size());
    for (ArgIndex a = 0; a < f.size(); ++a) {
        for (ArgIndex b : f.attackers(a))
            if (weights[b] > 0.0) att[a].push_back(b);
    }
    return att;
}

std::vector<double> step_impl(const WeightedFramework& f, std::span<const double> weights,
                              Semantics s, std::span<const double> current,
                              const std::vector<std::vector<ArgIndex>>* att_star) {
    const std::size_t n = f.size();
    std::vector<double> next(n);
    switch (s) {
    case Semantics::TrustBased:
        for (ArgIndex a = 0; a < n; ++a) {
            const double cap = 1.0 - max_attacker_degree(f.attackers(a), current);
            next[a] = 0.5 * current[a] + 0.5 * std::min(weights[a], cap);
        }
        break;
    case Semantics::IterativeSchema:
        for (ArgIndex a = 0; a < n; ++a) {
            const double cap = 1.0 - max_attacker_degree(f.attackers(a), current);
            next[a] = (1.0 - current[a]) * std::min(0.5, cap) + current[a] * std::max(0.5, cap);
        }
        break;
    case Semantics::MaxBased:
        for (ArgIndex a = 0; a < n; ++a)
            next[a] = weights[a] / (1.0 + max_attacker_degree(f.attackers(a), current));
        break;
    case Semantics::CardBased: {
        std::vector<std::vector<ArgIndex>> local;
        if (att_star == nullptr) {
            local = positive_attackers(f, weights);
            att_star = &local;
        }
        for (ArgIndex a = 0; a < n; ++a) {
            const auto& att = (*att_star)[a];
            if (att.empty()) {
                next[a] = weights[a];
                continue;
            }
            double sum = 0.0;
            for (ArgIndex b : att) sum += current[b];
            const double k = static_cast<double>(att.size());
            next[a] = weights[a] / (1.0 + k + sum / k);
        }
        break;
    }
    case Semantics::HCategorizer:
        for (ArgIndex a = 0; a < n; ++a) {
            double sum = 0.0;
            for (ArgIndex b : f.attackers(a)) sum += current[b];
            next[a] = weights[a] / (1.0 + sum);
        }
        break;
    }
    return next;
}

// Converged iterative-schema degrees approach 0, 0.5 or 1; report them as the
// exact limit so the three-level structure is machine-checkable.
void snap_is_degrees(std::vector<double>& d) {
    constexpr double kSnapTol = 1e-4;
    for (double& v : d) {
        for (double limit : {0.0, 0.5, 1.0}) {
            if (std::fabs(v - limit) < kSnapTol) {
                v = limit;
                break;
            }
        }
    }
}

} // namespace

std::vector<double> step(const WeightedFramework& f, std::span<const double> weights,
                         Semantics s, std::span<const double> current) {
    if (weights.size() != f.size() || current.size() != f.size())
        throw ValidationError("degree/weight vector size does not match the framework");
    return step_impl(f, weights, s, current, nullptr);
}

std::vector<double> step(const WeightedFramework& f, Semantics s, std::span<const double> current) {
    return step(f, f.weights(), s, current);
}

EvaluationResult evaluate_with_weights(const WeightedFramework& f, std::span<const double> weights,
                                       Semantics s, IterationConfig cfg) {
    if (!(cfg.convergence_eps > 0)) throw ValidationError("convergence_eps must be > 0");
    if (cfg.max_iterations < 1) throw ValidationError("max_iterations must be >= 1");
    if (weights.size() != f.size())
        throw ValidationError("weight vector size does not match the framework");

    // Card-based attacker filtering depends only on the weights, so hoist it
    // out of the iteration.
    std::vector<std::vector<ArgIndex>> att_star;
    const std::vector<std::vector<ArgIndex>>* att_star_ptr = nullptr;
    if (s == Semantics::CardBased) {
        att_star = positive_attackers(f, weights);
        att_star_ptr = &att_star;
    }

    EvaluationResult result;
    std::vector<double> current(weights.begin(), weights.end());
    for (int i = 1; i <= cfg.max_iterations; ++i) {
        std::vector<double> next = step_impl(f, weights, s, current, att_star_ptr);
        double delta = 0.0;
        for (std::size_t k = 0; k < next.size(); ++k)
            delta = std::max(delta, std::fabs(next[k] - current[k]));
        current = std::move(next);
        result.iterations_used = i;
        if (delta < cfg.convergence_eps) {
            result.converged = true;
            break;
        }
    }
    if (result.converged && s == Semantics::IterativeSchema) snap_is_degrees(current);
    result.degrees.values = std::move(current);
    return result;
}

EvaluationResult evaluate(const WeightedFramework& f, Semantics s, IterationConfig cfg) {
    return evaluate_with_weights(f, f.weights(), s, cfg);
}

} // namespace gradsem
