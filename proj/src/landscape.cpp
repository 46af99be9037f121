#include "idea/landscape.hpp"

#include "idea/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace idea {

namespace {

double dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace

std::vector<double> default_edges(const std::vector<MinimumRecord>& minima,
                                  int n_levels) {
    if (n_levels < 1) throw std::invalid_argument("default_edges: n_levels < 1");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& m : minima)
        if (std::isfinite(m.f)) {
            lo = std::min(lo, m.f);
            hi = std::max(hi, m.f);
        }
    if (!(lo < hi)) return {};
    std::vector<double> edges;
    edges.reserve(n_levels - 1);
    const double w = (hi - lo) / n_levels;
    for (int k = 1; k < n_levels; ++k) edges.push_back(lo + k * w);
    return edges;
}

LevelPartition assign_levels(const std::vector<MinimumRecord>& minima,
                             std::vector<double> edges) {
    if (minima.empty()) throw std::invalid_argument("assign_levels: no minima");
    for (std::size_t k = 1; k < edges.size(); ++k)
        if (!(edges[k - 1] < edges[k]))
            throw std::invalid_argument("assign_levels: edges must ascend strictly");
    LevelPartition part;
    part.edges = std::move(edges);
    part.levels.assign(part.edges.size() + 1, {});
    for (const auto& m : minima) {
        if (!std::isfinite(m.f)) continue;
        // first edge strictly above f closes the band
        const std::size_t lvl = std::upper_bound(part.edges.begin(), part.edges.end(),
                                                 m.f) -
                                part.edges.begin();
        part.levels[lvl].push_back(m);
    }
    return part;
}

std::vector<MinimumDistances> level_distances(const LevelPartition& part,
                                              const std::vector<double>& best_known) {
    std::vector<MinimumDistances> rows;
    long lower = -1; // index of the next-lower non-empty level
    std::size_t id = 0;
    for (std::size_t L = 0; L < part.levels.size(); ++L) {
        const auto& level = part.levels[L];
        if (level.empty()) continue;
        for (const auto& m : level) {
            MinimumDistances row;
            row.id = ++id;
            row.level = L + 1;
            row.f = m.f;
            if (level.size() > 1) {
                double s = 0.0;
                for (const auto& o : level)
                    if (&o != &m) s += dist(m.x, o.x);
                row.has_d_il = true;
                row.d_il = s / double(level.size() - 1);
            }
            if (lower < 0) {
                if (m.x.size() != best_known.size())
                    throw std::invalid_argument(
                        "level_distances: best-known point dimension mismatch");
                row.d_tl = dist(m.x, best_known);
            } else {
                double s = 0.0;
                for (const auto& o : part.levels[lower]) s += dist(m.x, o.x);
                row.d_tl = s / double(part.levels[lower].size());
            }
            rows.push_back(std::move(row));
        }
        lower = long(L);
    }
    return rows;
}

bool merge_minimum(Archive& archive, MinimumRecord r, double dist_tol,
                   double f_tol) {
    for (auto& o : archive.records) {
        if (o.degenerate || o.x.size() != r.x.size()) continue;
        if (dist(o.x, r.x) < dist_tol && std::abs(o.f - r.f) < f_tol) {
            if (r.f < o.f) o = std::move(r);
            return true;
        }
    }
    archive.add(std::move(r));
    return false;
}

Archive harvest_minima(const Problem& p, int n_starts, long local_budget,
                       std::uint64_t seed) {
    if (n_starts < 1) throw std::invalid_argument("harvest_minima: n_starts < 1");
    if (local_budget < 1) throw std::invalid_argument("harvest_minima: no budget");
    CountingObjective obj{[&p](const std::vector<double>& u) {
        return p.objective(denormalize(u, p.domain));
    }};
    Rng rng(seed);
    const std::size_t d = p.domain.dim();
    Archive archive;
    for (int s = 0; s < n_starts; ++s) {
        std::vector<double> x0(d);
        for (auto& c : x0) c = rng.uniform01();
        MinimumRecord rec = minimize_local(obj, x0, local_budget);
        if (rec.degenerate) continue;
        rec.origin = MinimumOrigin::harvest;
        rec.found_at = obj.count();
        merge_minimum(archive, std::move(rec));
    }
    return archive;
}

std::string landscape_csv(const std::vector<MinimumDistances>& rows) {
    std::string out = "id,f,level,d_il,d_tl\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%zu,%.9g,%zu,", r.id, r.f, r.level);
        out += buf;
        if (r.has_d_il) {
            std::snprintf(buf, sizeof buf, "%.9g", r.d_il);
            out += buf;
        }
        std::snprintf(buf, sizeof buf, ",%.9g\n", r.d_tl);
        out += buf;
    }
    return out;
}

void write_landscape_csv(const std::string& path,
                         const std::vector<MinimumDistances>& rows) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << landscape_csv(rows);
}

} // namespace idea
