#pragma once

#include "idea/inflation.hpp"
#include "idea/mbh.hpp"
#include "idea/problems.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace idea {

enum class AlgoKind { idea, de, mbh, mbh_gr };

std::string to_string(AlgoKind k);
AlgoKind algo_from_string(const std::string& s); // throws on unknown names

// Resolved optimizer settings for one (algorithm, problem) pair. The
// constructor seeds every field from the problem's tuned defaults; callers
// (parameter files, CLI flags) override afterwards.
struct AlgoConfig {
    AlgoKind kind = AlgoKind::idea;
    IdeaParams idea;   // used when kind == idea
    DeParams de;       // used when kind == de
    int de_n_pop = 20; // plain-DE population
    MbhParams mbh;     // used when kind == mbh / mbh_gr

    // idea: the problem's tuned population and restart settings.
    // de: the classical best/1/bin baseline (n_pop = 5 d, F = 0.75,
    //     CR = 0.8, mutually different indices).
    // mbh / mbh_gr: perturbation radius = the problem's bubble half-width;
    //     the guided-restart variant abandons the incumbent after 30
    //     consecutive failures.
    static AlgoConfig for_problem(AlgoKind kind, const Problem& p);
};

// One optimizer run on the problem's unit box with a dedicated RNG stream.
struct SingleRun {
    RunReport report;
    Archive archive; // empty for plain DE
    double wall_seconds = 0.0;
    std::uint64_t seed = 0;
};

SingleRun run_single(const Problem& p, const AlgoConfig& cfg, long budget,
                     std::uint64_t seed);

// Success-rate statistics for n repeated runs at one budget.
struct SuccessStats {
    std::string algorithm;
    std::string problem;
    std::uint64_t master_seed = 0;
    long budget = 0;     // N
    int n = 0;           // runs
    int j_s = 0;         // successes
    double p_s = 0.0;    // j_s / n
    double ci_low = 0.0; // Wilson interval at the given alpha
    double ci_high = 0.0;
    double d_err = 0.0; // CI half-width
    double alpha = 0.05;
    double wall_seconds = 0.0; // summed over runs
};

struct BenchmarkResult {
    SuccessStats stats;
    std::vector<SingleRun> runs;
};

// A run succeeds iff |reference_f - best_f| < tol_f.
int count_successes(const std::vector<SingleRun>& runs, double reference_f,
                    double tol_f);

// n independent runs with child seeds mix(master_seed, 0..n-1), executed on
// up to `jobs` threads; results are aggregated in run order so the outcome
// is identical for any job count. reference_f / tol_f default (NaN) to the
// problem's recorded values; throws std::invalid_argument when neither is
// available or n < 1.
BenchmarkResult run_benchmark(const Problem& p, const AlgoConfig& cfg, int n,
                              long budget, std::uint64_t master_seed,
                              int jobs = 1,
                              double reference_f = std::numeric_limits<double>::quiet_NaN(),
                              double tol_f = std::numeric_limits<double>::quiet_NaN(),
                              double alpha = 0.05);

// Success rate at each budget with the same child-seed set per budget; runs
// are independent across budgets (no trace reuse). Budgets must be sorted
// ascending.
std::vector<SuccessStats> performance_curve(const Problem& p, const AlgoConfig& cfg,
                                            const std::vector<long>& budgets, int n,
                                            std::uint64_t master_seed, int jobs = 1,
                                            double reference_f = std::numeric_limits<double>::quiet_NaN(),
                                            double tol_f = std::numeric_limits<double>::quiet_NaN(),
                                            double alpha = 0.05);

// Smallest n with n >= 0.25 chi2_1(alpha) / d_err^2 (at least 1), the
// conservative binomial sample-size bound at absolute error d_err.
long required_sample_size(double d_err, double alpha);

struct WilsonInterval {
    double low = 0.0;
    double high = 1.0;
};

// Wilson score interval for j successes out of n at confidence 1 - alpha.
WilsonInterval wilson_interval(int j, int n, double alpha = 0.05);

// Quantile of the standard normal (Acklam's rational approximation,
// |relative error| < 1.15e-9); p in (0, 1).
double normal_quantile(double p);

// CSV rows under the fixed schema
//   algorithm,problem,seed,N,n,j_s,p_s,ci_low,ci_high,wall_seconds
// wall_seconds is left empty unless timing is requested, keeping the
// default output byte-reproducible.
std::string bench_csv(const std::vector<SuccessStats>& rows, bool timing = false);
void write_bench_csv(const std::string& path, const std::vector<SuccessStats>& rows,
                     bool timing = false);

} // namespace idea
