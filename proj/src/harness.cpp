#include "idea/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace idea {

std::string to_string(AlgoKind k) {
    switch (k) {
    case AlgoKind::idea: return "idea";
    case AlgoKind::de: return "de";
    case AlgoKind::mbh: return "mbh";
    case AlgoKind::mbh_gr: return "mbh-gr";
    }
    return "?";
}

AlgoKind algo_from_string(const std::string& s) {
    if (s == "idea") return AlgoKind::idea;
    if (s == "de") return AlgoKind::de;
    if (s == "mbh") return AlgoKind::mbh;
    if (s == "mbh-gr" || s == "mbh_gr") return AlgoKind::mbh_gr;
    throw std::invalid_argument("unknown algorithm '" + s + "'");
}

AlgoConfig AlgoConfig::for_problem(AlgoKind kind, const Problem& p) {
    AlgoConfig c;
    c.kind = kind;
    const ProblemDefaults& d = p.defaults;

    c.idea.de.f = d.f_weight;
    c.idea.de.cr = d.cr;
    c.idea.de.strategy = Strategy::best;
    c.idea.de.index_mode = IndexMode::allow_i1_eq_i2;
    c.idea.n_pop = d.n_pop;
    c.idea.tol_conv = d.tol_conv;
    c.idea.delta = d.delta;
    c.idea.delta_c = d.delta_c;
    c.idea.iun_max = d.iun_max;

    c.de.f = 0.75;
    c.de.cr = 0.8;
    c.de.strategy = Strategy::best;
    c.de.index_mode = IndexMode::mutually_different;
    c.de_n_pop = 5 * static_cast<int>(p.domain.dim());

    c.mbh.delta = d.delta;
    c.mbh.n_samples = kind == AlgoKind::mbh_gr ? 30 : -1;
    return c;
}

SingleRun run_single(const Problem& p, const AlgoConfig& cfg, long budget,
                     std::uint64_t seed) {
    CountingObjective obj{[&p](const std::vector<double>& u) {
        return p.objective(denormalize(u, p.domain));
    }};
    Rng rng(seed);
    SingleRun out;
    out.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    switch (cfg.kind) {
    case AlgoKind::idea: {
        IdeaResult r = run_idea(obj, p.domain.dim(), cfg.idea, budget, rng);
        out.report = std::move(r.report);
        out.archive = std::move(r.archive);
        break;
    }
    case AlgoKind::de:
        out.report = run_de(obj, p.domain.dim(), cfg.de_n_pop, cfg.de, budget, rng);
        break;
    case AlgoKind::mbh:
    case AlgoKind::mbh_gr: {
        MbhResult r = run_mbh(obj, p.domain.dim(), cfg.mbh, budget, rng);
        out.report = std::move(r.report);
        out.archive = std::move(r.archive);
        break;
    }
    }
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

int count_successes(const std::vector<SingleRun>& runs, double reference_f,
                    double tol_f) {
    int j = 0;
    for (const auto& r : runs)
        if (std::abs(reference_f - r.report.best_f) < tol_f) ++j;
    return j;
}

BenchmarkResult run_benchmark(const Problem& p, const AlgoConfig& cfg, int n,
                              long budget, std::uint64_t master_seed, int jobs,
                              double reference_f, double tol_f, double alpha) {
    if (n < 1) throw std::invalid_argument("run_benchmark: need n >= 1");
    if (std::isnan(reference_f)) reference_f = p.f_best;
    if (std::isnan(tol_f)) tol_f = p.tol_f;
    if (std::isnan(reference_f) || std::isnan(tol_f))
        throw std::invalid_argument("run_benchmark: no reference value for '" +
                                    p.name + "'");

    BenchmarkResult out;
    out.runs.resize(n);
    if (jobs < 1) jobs = 1;
    if (jobs > n) jobs = n;
    if (jobs == 1) {
        for (int i = 0; i < n; ++i)
            out.runs[i] = run_single(p, cfg, budget, Rng::mix(master_seed, i));
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                for (int i = w; i < n; i += jobs)
                    out.runs[i] = run_single(p, cfg, budget, Rng::mix(master_seed, i));
            });
        for (auto& t : pool) t.join();
    }

    SuccessStats& s = out.stats;
    s.algorithm = to_string(cfg.kind);
    s.problem = p.name;
    s.master_seed = master_seed;
    s.budget = budget;
    s.n = n;
    s.j_s = count_successes(out.runs, reference_f, tol_f);
    s.p_s = double(s.j_s) / double(n);
    const WilsonInterval ci = wilson_interval(s.j_s, n, alpha);
    s.ci_low = ci.low;
    s.ci_high = ci.high;
    s.d_err = 0.5 * (ci.high - ci.low);
    s.alpha = alpha;
    for (const auto& r : out.runs) s.wall_seconds += r.wall_seconds;
    return out;
}

std::vector<SuccessStats> performance_curve(const Problem& p, const AlgoConfig& cfg,
                                            const std::vector<long>& budgets, int n,
                                            std::uint64_t master_seed, int jobs,
                                            double reference_f, double tol_f,
                                            double alpha) {
    if (budgets.empty()) throw std::invalid_argument("performance_curve: no budgets");
    for (std::size_t k = 1; k < budgets.size(); ++k)
        if (budgets[k] <= budgets[k - 1])
            throw std::invalid_argument("performance_curve: budgets must ascend");
    std::vector<SuccessStats> rows;
    rows.reserve(budgets.size());
    for (long N : budgets)
        rows.push_back(run_benchmark(p, cfg, n, N, master_seed, jobs, reference_f,
                                     tol_f, alpha)
                           .stats);
    return rows;
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("normal_quantile: p outside (0,1)");
    // Acklam 2003 rational approximation with the canonical coefficients.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double dd[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1.0 - plow;
    double q, r;
    if (p < plow) {
        q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
    }
    if (p > phigh) {
        q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
    }
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

long required_sample_size(double d_err, double alpha) {
    if (!(d_err > 0.0 && d_err < 1.0))
        throw std::invalid_argument("required_sample_size: d_err outside (0,1)");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("required_sample_size: alpha outside (0,1)");
    const double z = normal_quantile(1.0 - alpha / 2.0);
    const double n = 0.25 * z * z / (d_err * d_err);
    long out = static_cast<long>(std::ceil(n));
    return out < 1 ? 1 : out;
}

WilsonInterval wilson_interval(int j, int n, double alpha) {
    if (n < 1 || j < 0 || j > n)
        throw std::invalid_argument("wilson_interval: need 0 <= j <= n, n >= 1");
    const double z = normal_quantile(1.0 - alpha / 2.0);
    const double z2 = z * z;
    const double phat = double(j) / double(n);
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    WilsonInterval w;
    w.low = center - half;
    w.high = center + half;
    if (w.low < 0.0) w.low = 0.0;
    if (w.high > 1.0) w.high = 1.0;
    return w;
}

std::string bench_csv(const std::vector<SuccessStats>& rows, bool timing) {
    std::string out = "algorithm,problem,seed,N,n,j_s,p_s,ci_low,ci_high,wall_seconds\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%s,%llu,%ld,%d,%d,%.6f,%.6f,%.6f,",
                      r.algorithm.c_str(), r.problem.c_str(),
                      static_cast<unsigned long long>(r.master_seed), r.budget, r.n,
                      r.j_s, r.p_s, r.ci_low, r.ci_high);
        out += buf;
        if (timing) {
            std::snprintf(buf, sizeof buf, "%.3f", r.wall_seconds);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

void write_bench_csv(const std::string& path, const std::vector<SuccessStats>& rows,
                     bool timing) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << bench_csv(rows, timing);
}

} // namespace idea
