#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "idea/mbh.hpp"

using namespace idea;

namespace {

double paraboloid(const std::vector<double>& x) {
    double s = 0.0;
    for (double c : x) s += (c - 0.5) * (c - 0.5);
    return s;
}

// objective whose local searches can never improve on each other
double flatland(const std::vector<double>&) { return 1.0; }

} // namespace

TEST_CASE("neighborhood sampling stays inside the clipped box") {
    Rng rng(3);
    const std::vector<double> x{0.02, 0.5, 0.98};
    for (int t = 0; t < 500; ++t) {
        const auto y = sample_neighborhood(x, 0.1, rng);
        CHECK(y[0] >= 0.0);
        CHECK(y[0] <= 0.12);
        CHECK(y[1] >= 0.4);
        CHECK(y[1] <= 0.6);
        CHECK(y[2] >= 0.88);
        CHECK(y[2] <= 1.0);
    }
}

TEST_CASE("zero perturbation radius returns the point itself") {
    Rng rng(4);
    const std::vector<double> x{0.25, 0.75};
    CHECK(sample_neighborhood(x, 0.0, rng) == x);
}

TEST_CASE("basin hopping solves the paraboloid and archives every local search") {
    CountingObjective obj{paraboloid};
    Rng rng(7);
    MbhParams p;
    const MbhResult res = run_mbh(obj, 3, p, 12000, rng);
    CHECK(res.report.best_f < 1e-10);
    CHECK(static_cast<long>(res.archive.size()) == res.report.local_searches);
    for (const auto& r : res.archive.records) {
        CHECK(std::isfinite(r.f));
        CHECK(r.origin == MinimumOrigin::mbh_sample);
    }
    CHECK(res.report.evaluations >= 12000);
    CHECK(res.report.evaluations < 12000 + 500 * 3);
    for (std::size_t i = 1; i < res.report.trace.size(); ++i)
        CHECK(res.report.trace[i].best_f <= res.report.trace[i - 1].best_f);
}

TEST_CASE("guided restart fires exactly every n_samples failures") {
    CountingObjective obj{flatland};
    Rng rng(13);
    MbhParams p;
    p.n_samples = 30;
    p.local_budget_per_dim = 40;
    const MbhResult res = run_mbh(obj, 2, p, 30000, rng);
    // records = 1 initial + samples + restarts, and nothing ever improves
    const long restarts = res.report.restarts_global;
    const long samples = static_cast<long>(res.archive.size()) - 1 - restarts;
    CHECK(restarts == samples / 30);
    CHECK(restarts >= 1);
}

TEST_CASE("plain variant never restarts") {
    CountingObjective obj{flatland};
    Rng rng(14);
    MbhParams p; // n_samples = -1
    p.local_budget_per_dim = 40;
    const MbhResult res = run_mbh(obj, 2, p, 10000, rng);
    CHECK(res.report.restarts_global == 0);
}

TEST_CASE("an undersized budget is refused before evaluating") {
    CountingObjective obj{paraboloid};
    Rng rng(5);
    MbhParams p;
    CHECK_THROWS_AS(run_mbh(obj, 4, p, 5, rng), std::invalid_argument);
    CHECK(obj.count() == 0);
}

TEST_CASE("identical seeds give identical runs") {
    MbhParams p;
    p.n_samples = 10;
    CountingObjective o1{paraboloid};
    Rng r1(99);
    const MbhResult a = run_mbh(o1, 2, p, 8000, r1);
    CountingObjective o2{paraboloid};
    Rng r2(99);
    const MbhResult b = run_mbh(o2, 2, p, 8000, r2);
    CHECK(a.report.best_f == b.report.best_f);
    CHECK(a.report.best_x == b.report.best_x);
    CHECK(a.archive.size() == b.archive.size());
}

TEST_CASE("non-finite regions are tolerated") {
    CountingObjective obj{[](const std::vector<double>& x) {
        if (x[0] > 0.6) return std::numeric_limits<double>::quiet_NaN();
        return paraboloid(x);
    }};
    Rng rng(23);
    MbhParams p;
    const MbhResult res = run_mbh(obj, 2, p, 6000, rng);
    CHECK(std::isfinite(res.report.best_f));
    for (const auto& r : res.archive.records) CHECK_FALSE(r.degenerate);
}
