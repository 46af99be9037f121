#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "idea/landscape.hpp"
#include "idea/local_search.hpp"

using namespace idea;

namespace {

MinimumRecord rec(std::vector<double> x, double f) {
    MinimumRecord r;
    r.x = std::move(x);
    r.f = f;
    return r;
}

double dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
    return std::sqrt(s);
}

} // namespace

TEST_CASE("binning follows the half-open boundary rule") {
    std::vector<MinimumRecord> m = {rec({0.1}, 0.5), rec({0.2}, 1.0),
                                    rec({0.3}, 1.7), rec({0.4}, 2.0),
                                    rec({0.5}, 2.3)};
    const LevelPartition part = assign_levels(m, {1.0, 2.0});
    REQUIRE(part.levels.size() == 3);
    CHECK(part.levels[0].size() == 1); // 0.5
    CHECK(part.levels[1].size() == 2); // 1.0 (on the edge) and 1.7
    CHECK(part.levels[2].size() == 2); // 2.0 (on the edge) and 2.3
}

TEST_CASE("all minima below the first edge land in the lowest level") {
    std::vector<MinimumRecord> m = {rec({0.1}, -3.0), rec({0.9}, 0.2)};
    const LevelPartition part = assign_levels(m, {1.0, 2.0});
    CHECK(part.levels[0].size() == 2);
    CHECK(part.total() == 2);
}

TEST_CASE("binning matches a brute-force scan on random data") {
    Rng rng(88);
    std::vector<MinimumRecord> m;
    for (int i = 0; i < 100; ++i) m.push_back(rec({rng.uniform01()}, rng.uniform(0.0, 10.0)));
    const std::vector<double> edges = {2.0, 4.0, 6.0, 7.5, 9.0};
    const LevelPartition part = assign_levels(m, edges);
    REQUIRE(part.levels.size() == 6);
    for (const auto& r : m) {
        std::size_t want = 0;
        while (want < edges.size() && r.f >= edges[want]) ++want;
        std::size_t found = 0, hits = 0;
        for (std::size_t L = 0; L < part.levels.size(); ++L)
            for (const auto& o : part.levels[L])
                if (o.x == r.x && o.f == r.f) {
                    found = L;
                    ++hits;
                }
        CHECK(hits == 1);
        CHECK(found == want);
    }
}

TEST_CASE("malformed partitions are refused") {
    CHECK_THROWS_AS(assign_levels({}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(assign_levels({rec({0.5}, 1.0)}, {2.0, 2.0}),
                    std::invalid_argument);
}

TEST_CASE("two-minimum level and singleton rules") {
    std::vector<MinimumRecord> m = {rec({0.0, 0.0}, 1.0), rec({1.0, 0.0}, 1.1)};
    const LevelPartition part = assign_levels(m, {});
    const std::vector<double> best = {0.0, 1.0};
    const auto rows = level_distances(part, best);
    REQUIRE(rows.size() == 2);
    for (const auto& r : rows) {
        CHECK(r.level == 1);
        REQUIRE(r.has_d_il);
        CHECK(r.d_il == doctest::Approx(1.0));
    }
    CHECK(rows[0].d_tl == doctest::Approx(1.0));            // (0,0) to (0,1)
    CHECK(rows[1].d_tl == doctest::Approx(std::sqrt(2.0))); // (1,0) to (0,1)

    // singleton level emits no intra-level distance
    const auto one = level_distances(assign_levels({m[0]}, {}), best);
    REQUIRE(one.size() == 1);
    CHECK_FALSE(one[0].has_d_il);
}

TEST_CASE("distances match a brute-force double loop on a 3-level set") {
    Rng rng(17);
    std::vector<MinimumRecord> m;
    for (int i = 0; i < 60; ++i)
        m.push_back(rec({rng.uniform01(), rng.uniform01(), rng.uniform01()},
                        rng.uniform(0.0, 3.0)));
    const std::vector<double> edges = {1.0, 2.0};
    const LevelPartition part = assign_levels(m, edges);
    const std::vector<double> best = {0.5, 0.5, 0.5};
    const auto rows = level_distances(part, best);
    CHECK(rows.size() == m.size());

    std::size_t row_i = 0;
    for (std::size_t L = 0; L < part.levels.size(); ++L) {
        // brute-force next-lower non-empty level
        long lower = -1;
        for (long k = long(L) - 1; k >= 0; --k)
            if (!part.levels[k].empty()) {
                lower = k;
                break;
            }
        for (const auto& r : part.levels[L]) {
            const auto& row = rows[row_i++];
            CHECK(row.f == r.f);
            if (part.levels[L].size() > 1) {
                double s = 0.0;
                for (const auto& o : part.levels[L])
                    if (!(o.x == r.x && o.f == r.f)) s += dist(r.x, o.x);
                CHECK(row.d_il ==
                      doctest::Approx(s / double(part.levels[L].size() - 1)));
            } else {
                CHECK_FALSE(row.has_d_il);
            }
            double want_tl = 0.0;
            if (lower < 0) {
                want_tl = dist(r.x, best);
            } else {
                for (const auto& o : part.levels[lower]) want_tl += dist(r.x, o.x);
                want_tl /= double(part.levels[lower].size());
            }
            CHECK(row.d_tl == doctest::Approx(want_tl));
        }
    }
}

TEST_CASE("an empty level is skipped when looking for the next-lower one") {
    std::vector<MinimumRecord> m = {rec({0.0}, 0.5), rec({1.0}, 4.5)};
    const LevelPartition part = assign_levels(m, {1.0, 2.0, 3.0, 4.0});
    const auto rows = level_distances(part, {0.25});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].level == 1);
    CHECK(rows[0].d_tl == doctest::Approx(0.25)); // lowest: to best-known
    CHECK(rows[1].level == 5);
    CHECK(rows[1].d_tl == doctest::Approx(1.0)); // skips levels 2-4 down to level 1
}

TEST_CASE("default edges split the observed range evenly") {
    std::vector<MinimumRecord> m = {rec({0.0}, 2.0), rec({0.1}, 10.0)};
    const auto edges = default_edges(m, 8);
    REQUIRE(edges.size() == 7);
    CHECK(edges.front() == doctest::Approx(3.0));
    CHECK(edges.back() == doctest::Approx(9.0));
    // a constant archive degenerates to a single level
    CHECK(default_edges({m[0], m[0]}, 8).empty());
}

TEST_CASE("near-duplicates merge and keep the better record") {
    Archive a;
    CHECK_FALSE(merge_minimum(a, rec({0.5, 0.5}, 1.0)));
    CHECK(merge_minimum(a, rec({0.5 + 5e-5, 0.5}, 1.0 + 5e-7)));
    CHECK(a.size() == 1);
    CHECK(merge_minimum(a, rec({0.5, 0.5 - 5e-5}, 1.0 - 5e-7)));
    CHECK(a.size() == 1);
    CHECK(a.records[0].f == doctest::Approx(1.0 - 5e-7));
    // same point, genuinely different value: a distinct record
    CHECK_FALSE(merge_minimum(a, rec({0.5, 0.5}, 1.5)));
    CHECK(a.size() == 2);
    // far point: distinct
    CHECK_FALSE(merge_minimum(a, rec({0.9, 0.9}, 1.0)));
    CHECK(a.size() == 3);
}

TEST_CASE("harvest on the paraboloid finds exactly one minimum") {
    const Problem p = make_problem("paraboloid", 3);
    const Archive a = harvest_minima(p, 40, 2000, 5);
    CHECK(a.size() == 1);
    CHECK(a.records[0].f < 1e-10);
    CHECK(a.records[0].origin == MinimumOrigin::harvest);

    CHECK(harvest_minima(p, 1, 2000, 5).size() == 1);
    CHECK_THROWS_AS(harvest_minima(p, 0, 2000, 5), std::invalid_argument);
}

TEST_CASE("1-d rastrigin harvest matches the grid-seeded basin count") {
    const Problem p = make_problem("rastrigin", 1);
    const Archive sampled = harvest_minima(p, 200, 1500, 99);

    // oracle: dense grid of local searches enumerates the basins directly
    CountingObjective obj{[&p](const std::vector<double>& u) {
        return p.objective(denormalize(u, p.domain));
    }};
    Archive grid;
    for (int k = 0; k <= 100; ++k) {
        MinimumRecord r = minimize_local(obj, {k / 100.0}, 1500);
        r.origin = MinimumOrigin::harvest;
        merge_minimum(grid, std::move(r));
    }
    CHECK(grid.size() == 11); // one basin per unit cell of [-5.12, 5.12]
    CHECK(sampled.size() == grid.size());
}

TEST_CASE("harvest is deterministic in the seed") {
    const Problem p = make_problem("rastrigin", 2);
    const Archive a = harvest_minima(p, 30, 1200, 7);
    const Archive b = harvest_minima(p, 30, 1200, 7);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.records[i].x == b.records[i].x);
        CHECK(a.records[i].f == b.records[i].f);
    }
}

TEST_CASE("csv rows carry optional intra-level fields") {
    std::vector<MinimumDistances> rows(2);
    rows[0].id = 1;
    rows[0].level = 1;
    rows[0].f = 0.25;
    rows[0].has_d_il = false;
    rows[0].d_tl = 0.5;
    rows[1].id = 2;
    rows[1].level = 3;
    rows[1].f = 1.75;
    rows[1].has_d_il = true;
    rows[1].d_il = 0.125;
    rows[1].d_tl = 1.0;
    CHECK(landscape_csv(rows) == "id,f,level,d_il,d_tl\n"
                                 "1,0.25,1,,0.5\n"
                                 "2,1.75,3,0.125,1\n");
}
