#pragma once

#include "idea/archive.hpp"
#include "idea/problems.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace idea {

// Archived minima grouped by objective-value level. Level 0 is the lowest
// band; interior edges are strictly ascending and intervals are half-open,
// so a value exactly on an edge belongs to the level that edge opens.
struct LevelPartition {
    std::vector<double> edges;
    std::vector<std::vector<MinimumRecord>> levels; // edges.size() + 1 bands

    std::size_t total() const {
        std::size_t n = 0;
        for (const auto& l : levels) n += l.size();
        return n;
    }
};

// Interior edges of n_levels equal-width bands over the finite f range of
// the records; an empty vector (single band) when the range is degenerate.
std::vector<double> default_edges(const std::vector<MinimumRecord>& minima,
                                  int n_levels = 8);

// Bins records by value: level L holds f in [edge_{L-1}, edge_L). Records
// with non-finite f (degenerate local searches) are dropped. Throws when
// minima is empty or the edges are not strictly increasing.
LevelPartition assign_levels(const std::vector<MinimumRecord>& minima,
                             std::vector<double> edges);

// Distance summary of one archived minimum. d_il is the mean distance to
// the other minima of its own level, absent for singletons; d_tl is the
// mean distance to the next-lower non-empty level, or the distance to the
// best-known point for the lowest non-empty level. All distances are in
// normalized (unit box) coordinates.
struct MinimumDistances {
    std::size_t id = 0;    // row number, level order
    std::size_t level = 0; // 1-based, 1 = lowest band
    double f = 0.0;
    bool has_d_il = false;
    double d_il = 0.0;
    double d_tl = 0.0;
};

std::vector<MinimumDistances> level_distances(const LevelPartition& part,
                                              const std::vector<double>& best_known);

// Adds r to the archive unless an existing record lies within dist_tol of
// it with |f difference| < f_tol, in which case the better of the two is
// kept and true is returned.
bool merge_minimum(Archive& archive, MinimumRecord r, double dist_tol = 1e-4,
                   double f_tol = 1e-6);

// Multistart local-search harvest: n_starts uniform starts on the unit box,
// each refined by the bounded simplex search with the given per-start
// budget, near-duplicates merged, degenerate starts dropped.
Archive harvest_minima(const Problem& p, int n_starts, long local_budget,
                       std::uint64_t seed);

// Plot-ready CSV under the schema id,f,level,d_il,d_tl (d_il empty when
// absent).
std::string landscape_csv(const std::vector<MinimumDistances>& rows);
void write_landscape_csv(const std::string& path,
                         const std::vector<MinimumDistances>& rows);

} // namespace idea
