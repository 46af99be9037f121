#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "idea/harness.hpp"

using namespace idea;

TEST_CASE("algorithm names round-trip and unknown ones are refused") {
    for (AlgoKind k : {AlgoKind::idea, AlgoKind::de, AlgoKind::mbh, AlgoKind::mbh_gr})
        CHECK(algo_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(algo_from_string("annealing"), std::invalid_argument);
}

TEST_CASE("per-problem configs carry the tuned and baseline settings") {
    const Problem cas = make_problem("cassini1");
    const AlgoConfig ic = AlgoConfig::for_problem(AlgoKind::idea, cas);
    CHECK(ic.idea.n_pop == 20);
    CHECK(ic.idea.de.f == doctest::Approx(0.9));
    CHECK(ic.idea.de.cr == doctest::Approx(0.9));
    CHECK(ic.idea.iun_max == -1);

    const AlgoConfig dc = AlgoConfig::for_problem(AlgoKind::de, cas);
    CHECK(dc.de_n_pop == 30); // 5 d
    CHECK(dc.de.f == doctest::Approx(0.75));
    CHECK(dc.de.cr == doctest::Approx(0.8));
    CHECK(dc.de.index_mode == IndexMode::mutually_different);

    CHECK(AlgoConfig::for_problem(AlgoKind::mbh, cas).mbh.n_samples == -1);
    CHECK(AlgoConfig::for_problem(AlgoKind::mbh_gr, cas).mbh.n_samples == 30);
}

TEST_CASE("success counting is a plain threshold scan") {
    std::vector<SingleRun> runs(20);
    int expected = 0;
    for (int i = 0; i < 20; ++i) {
        runs[i].report.best_f = 1.0 + 0.01 * i; // 1.00, 1.01, ...
        if (std::abs(1.0 - runs[i].report.best_f) < 0.05) ++expected;
    }
    CHECK(count_successes(runs, 1.0, 0.05) == expected);
    CHECK(expected == 5);
    runs[3].report.best_f = std::numeric_limits<double>::infinity();
    CHECK(count_successes(runs, 1.0, 0.05) == expected - 1);
}

TEST_CASE("normal quantile matches tabulated values") {
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(normal_quantile(0.975) == doctest::Approx(1.9599639845).epsilon(1e-8));
    CHECK(normal_quantile(0.995) == doctest::Approx(2.5758293035).epsilon(1e-8));
    CHECK(normal_quantile(0.025) == doctest::Approx(-normal_quantile(0.975)).epsilon(1e-9));
    CHECK_THROWS_AS(normal_quantile(0.0), std::invalid_argument);
    CHECK_THROWS_AS(normal_quantile(1.0), std::invalid_argument);
}

TEST_CASE("required sample sizes reproduce the formula values") {
    CHECK(required_sample_size(0.05, 0.05) == 385);
    CHECK(required_sample_size(0.1, 0.05) == 97);
    CHECK(required_sample_size(0.999, 0.05) == 1);
    CHECK_THROWS_AS(required_sample_size(0.0, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(required_sample_size(0.05, 1.0), std::invalid_argument);
}

TEST_CASE("wilson interval matches the textbook 8-of-10 case") {
    const WilsonInterval w = wilson_interval(8, 10, 0.05);
    CHECK(w.low == doctest::Approx(0.4902).epsilon(1e-3));
    CHECK(w.high == doctest::Approx(0.9433).epsilon(1e-3));
    CHECK(wilson_interval(0, 7).low == doctest::Approx(0.0));
    CHECK(wilson_interval(7, 7).high == doctest::Approx(1.0));
    CHECK_THROWS_AS(wilson_interval(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(wilson_interval(5, 4), std::invalid_argument);
}

TEST_CASE("benchmark runs are deterministic and thread-count independent") {
    const Problem p = make_problem("paraboloid", 3);
    const AlgoConfig cfg = AlgoConfig::for_problem(AlgoKind::idea, p);
    const BenchmarkResult a = run_benchmark(p, cfg, 6, 6000, 42, 1);
    const BenchmarkResult b = run_benchmark(p, cfg, 6, 6000, 42, 3);
    CHECK(a.stats.j_s == b.stats.j_s);
    REQUIRE(a.runs.size() == b.runs.size());
    for (std::size_t i = 0; i < a.runs.size(); ++i) {
        CHECK(a.runs[i].report.best_f == b.runs[i].report.best_f);
        CHECK(a.runs[i].report.best_x == b.runs[i].report.best_x);
        CHECK(a.runs[i].seed == b.runs[i].seed);
    }
    // distinct child streams actually explore differently
    CHECK(a.runs[0].report.best_x != a.runs[1].report.best_x);
}

TEST_CASE("a starved optimizer never counts as a success on cassini1") {
    const Problem p = make_problem("cassini1");
    const AlgoConfig cfg = AlgoConfig::for_problem(AlgoKind::de, p);
    const BenchmarkResult r = run_benchmark(p, cfg, 50, 1000, 7);
    CHECK(r.stats.j_s == 0);
    CHECK(r.stats.p_s == 0.0);
    CHECK(r.stats.n == 50);
}

TEST_CASE("the curve is one benchmark per budget with shared seeds") {
    const Problem p = make_problem("paraboloid", 3);
    const AlgoConfig cfg = AlgoConfig::for_problem(AlgoKind::idea, p);
    const auto rows = performance_curve(p, cfg, {3000, 15000}, 8, 11);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].budget == 3000);
    CHECK(rows[1].budget == 15000);
    CHECK(rows[1].p_s >= rows[0].p_s);
    CHECK(rows[1].p_s >= 0.8); // the budget solves it comfortably
    // single budget equals the plain benchmark
    const auto one = performance_curve(p, cfg, {3000}, 8, 11);
    CHECK(one[0].j_s == rows[0].j_s);

    CHECK_THROWS_AS(performance_curve(p, cfg, {5000, 1000}, 8, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(performance_curve(p, cfg, {}, 8, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_benchmark(p, cfg, 0, 100, 1), std::invalid_argument);
}

TEST_CASE("a problem without a reference value is refused") {
    Problem p = make_problem("paraboloid", 2);
    p.f_best = std::numeric_limits<double>::quiet_NaN();
    const AlgoConfig cfg = AlgoConfig::for_problem(AlgoKind::de, p);
    CHECK_THROWS_AS(run_benchmark(p, cfg, 2, 500, 1), std::invalid_argument);
    // explicit reference overrides the gap
    CHECK_NOTHROW(run_benchmark(p, cfg, 2, 500, 1, 1, 0.0, 1e-6));
}

TEST_CASE("csv output is schema-fixed and byte-stable") {
    SuccessStats s;
    s.algorithm = "idea";
    s.problem = "paraboloid";
    s.master_seed = 9;
    s.budget = 1000;
    s.n = 4;
    s.j_s = 3;
    s.p_s = 0.75;
    s.ci_low = 0.25;
    s.ci_high = 0.95;
    s.wall_seconds = 1.2345;
    CHECK(bench_csv({s}) ==
          "algorithm,problem,seed,N,n,j_s,p_s,ci_low,ci_high,wall_seconds\n"
          "idea,paraboloid,9,1000,4,3,0.750000,0.250000,0.950000,\n");
    CHECK(bench_csv({s}, true) ==
          "algorithm,problem,seed,N,n,j_s,p_s,ci_low,ci_high,wall_seconds\n"
          "idea,paraboloid,9,1000,4,3,0.750000,0.250000,0.950000,1.234\n");

    const Problem p = make_problem("paraboloid", 2);
    const AlgoConfig cfg = AlgoConfig::for_problem(AlgoKind::idea, p);
    const auto r1 = performance_curve(p, cfg, {500, 900}, 3, 21);
    const auto r2 = performance_curve(p, cfg, {500, 900}, 3, 21);
    CHECK(bench_csv(r1) == bench_csv(r2));
}
