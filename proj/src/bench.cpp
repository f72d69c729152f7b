#include "gradsem/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "gradsem/errors.hpp"

namespace gradsem {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t base, GraphFamily family, double p, int n, int run) {
    std::uint64_t h = splitmix64(base ^ (0x100 + static_cast<std::uint64_t>(family)));
    std::uint64_t p_bits;
    static_assert(sizeof(p_bits) == sizeof(p));
    std::memcpy(&p_bits, &p, sizeof(p_bits));
    h = splitmix64(h ^ p_bits);
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    h = splitmix64(h ^ static_cast<std::uint64_t>(run));
    return h;
}

struct Cell {
    GraphFamily family;
    double p;
    bool has_p;
    int n;
    int run;
    Semantics semantics;
    Strategy strategy;
    int iterations_per_pick;
};

std::vector<Cell> expand_grid(const ExperimentPlan& plan) {
    std::vector<Cell> cells;
    for (GraphFamily family : plan.families) {
        const bool is_er = family == GraphFamily::ErdosRenyi;
        const std::vector<double> ps = is_er ? plan.er_p : std::vector<double>{0.0};
        for (double p : ps)
            for (int n : plan.sizes)
                for (int run = 0; run < plan.runs_per_size; ++run)
                    for (Semantics s : plan.semantics)
                        for (Strategy st : plan.strategies)
                            for (int ipp : plan.iterations_per_pick)
                                cells.push_back({family, p, is_er, n, run, s, st, ipp});
    }
    return cells;
}

TrialRecord run_trial(const ExperimentPlan& plan, const Cell& cell) {
    const std::uint64_t seed = trial_seed(plan.base_seed, cell.family, cell.p, cell.n, cell.run);
    const WeightedFramework graph =
        generate({cell.family, cell.n, cell.p, seed});
    const Ranking target = random_ranking(graph.size(), plan.ranking_levels, splitmix64(seed));

    SolverConfig cfg;
    cfg.zeta = plan.zeta;
    cfg.rel_eps = plan.rel_eps;
    cfg.iterations_per_pick = cell.iterations_per_pick;
    cfg.max_bisect_calls = plan.max_bisect_calls;
    cfg.strategy = cell.strategy;
    cfg.rng_seed = seed;

    const auto start = std::chrono::steady_clock::now();
    const SolveReport report = solve(graph, target, cell.semantics, cfg);
    const auto end = std::chrono::steady_clock::now();

    TrialRecord rec;
    rec.family = cell.family;
    rec.n = cell.n;
    rec.p = cell.p;
    rec.has_p = cell.has_p;
    rec.seed = seed;
    rec.semantics = cell.semantics;
    rec.strategy = cell.strategy;
    rec.iterations_per_pick = cell.iterations_per_pick;
    rec.bisect_calls = report.bisect_calls;
    rec.inner_iterations = report.total_inner_iterations;
    rec.runtime_ms = std::chrono::duration<double, std::milli>(end - start).count();
    rec.termination = report.termination;
    return rec;
}

} // namespace

void ExperimentPlan::validate() const {
    if (families.empty() || sizes.empty() || semantics.empty() || strategies.empty() ||
        iterations_per_pick.empty() || runs_per_size < 1)
        throw ValidationError("experiment plan has an empty grid dimension");
    for (int n : sizes)
        if (n < 1) throw ValidationError("plan sizes must be positive");
    for (GraphFamily f : families)
        if (f == GraphFamily::ErdosRenyi && er_p.empty())
            throw ValidationError("Erdos-Renyi family needs at least one p value");
    if (ranking_levels < 1) throw ValidationError("ranking_levels must be >= 1");
}

std::size_t ExperimentPlan::trial_count() const {
    return expand_grid(*this).size();
}

std::vector<TrialRecord> run_plan(const ExperimentPlan& plan, unsigned threads) {
    plan.validate();
    const std::vector<Cell> cells = expand_grid(plan);
    std::vector<TrialRecord> records(cells.size());

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, std::thread::hardware_concurrency()));
    if (workers <= 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) records[i] = run_trial(plan, cells[i]);
        return records;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            records[i] = run_trial(plan, cells[i]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return records;
}

LinearFit fit_linear(std::span<const TrialRecord> records) {
    std::map<int, std::pair<double, int>> by_size; // n -> (sum of calls, count)
    for (const TrialRecord& r : records) {
        auto& [sum, count] = by_size[r.n];
        sum += static_cast<double>(r.bisect_calls);
        count += 1;
    }
    if (by_size.size() < 3)
        throw ValidationError("linear fit needs at least 3 distinct sizes, got " +
                              std::to_string(by_size.size()));

    std::vector<double> xs, ys;
    for (const auto& [n, acc] : by_size) {
        xs.push_back(static_cast<double>(n));
        ys.push_back(acc.first / acc.second);
    }
    const std::size_t k = xs.size();
    double x_mean = 0, y_mean = 0;
    for (std::size_t i = 0; i < k; ++i) {
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= static_cast<double>(k);
    y_mean /= static_cast<double>(k);

    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k; ++i) {
        sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
        sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = y_mean - fit.slope * x_mean;

    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const double pred = fit.intercept + fit.slope * xs[i];
        ss_res += (ys[i] - pred) * (ys[i] - pred);
        ss_tot += (ys[i] - y_mean) * (ys[i] - y_mean);
    }
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : (ss_res == 0 ? 1.0 : 0.0);
    return fit;
}

void write_csv(std::ostream& out, std::span<const TrialRecord> records) {
    out << "family,n,p,seed,semantics,strategy,iters_per_pick,bisect_calls,"
           "inner_iterations,runtime_ms,termination\n";
    char buf[64];
    for (const TrialRecord& r : records) {
        out << to_string(r.family) << ',' << r.n << ',';
        if (r.has_p) {
            std::snprintf(buf, sizeof buf, "%g", r.p);
            out << buf;
        }
        out << ',' << r.seed << ',' << to_string(r.semantics) << ',' << to_string(r.strategy)
            << ',' << r.iterations_per_pick << ',' << r.bisect_calls << ',' << r.inner_iterations
            << ',';
        std::snprintf(buf, sizeof buf, "%.3f", r.runtime_ms);
        out << buf << ',' << to_string(r.termination) << '\n';
    }
}

ExperimentPlan plan_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("plan JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("plan JSON must be an object");

    ExperimentPlan plan;
    try {
        if (j.contains("families")) {
            plan.families.clear();
            for (const auto& f : j.at("families")) plan.families.push_back(family_from_string(f.get<std::string>()));
        }
        if (j.contains("er_p")) plan.er_p = j.at("er_p").get<std::vector<double>>();
        plan.sizes = j.at("sizes").get<std::vector<int>>();
        if (j.contains("runs_per_size")) plan.runs_per_size = j.at("runs_per_size").get<int>();
        if (j.contains("base_seed")) plan.base_seed = j.at("base_seed").get<std::uint64_t>();
        if (j.contains("semantics")) {
            plan.semantics.clear();
            for (const auto& s : j.at("semantics")) plan.semantics.push_back(semantics_from_string(s.get<std::string>()));
        }
        if (j.contains("strategies")) {
            plan.strategies.clear();
            for (const auto& s : j.at("strategies")) plan.strategies.push_back(strategy_from_string(s.get<std::string>()));
        }
        if (j.contains("iterations_per_pick"))
            plan.iterations_per_pick = j.at("iterations_per_pick").get<std::vector<int>>();
        if (j.contains("ranking_levels")) plan.ranking_levels = j.at("ranking_levels").get<int>();
        if (j.contains("zeta")) plan.zeta = j.at("zeta").get<double>();
        if (j.contains("rel_eps")) plan.rel_eps = j.at("rel_eps").get<double>();
        if (j.contains("max_bisect_calls")) plan.max_bisect_calls = j.at("max_bisect_calls").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("plan JSON: ") + e.what());
    }
    plan.validate();
    return plan;
}

ExperimentPlan plan_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open plan file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return plan_from_json_text(ss.str());
}

} // namespace gradsem
