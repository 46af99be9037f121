#pragma once

#include "idea/archive.hpp"
#include "idea/de.hpp"

namespace idea {

// Inflationary DE: run the DE dynamics until the population contracts below
// tol_conv * rho_a_max, refine the incumbent with a local search, archive the
// minimum, then restart the population either in a bubble around the minimum
// or, after too many non-improving contractions in a row, globally outside
// the clustered archive neighbourhoods.
struct IdeaParams {
    DeParams de;
    int n_pop = 20;
    double tol_conv = 0.25; // contraction threshold, fraction of rho_a_max
    double delta = 0.2;     // bubble half-width per coordinate
    double delta_c = 0.1;   // cluster merge radius and restart exclusion distance
    long iun_max = -1;      // non-improving contractions tolerated; -1 = unlimited
    long max_generations_per_epoch = 2000; // forced contraction fallback
    long local_budget_per_dim = 500;
    double local_tol = 1e-8;
    int restart_attempts = 100; // per-agent rejection cap in a global restart
};

struct IdeaResult {
    RunReport report;
    Archive archive;
};

// Fresh population uniform in [center - delta, center + delta] clipped to the
// unit box; velocities zero, every agent evaluated.
Population bubble_restart(const std::vector<double>& center, double delta, int n_pop,
                          CountingObjective& objective, Rng& rng);

// Single-linkage clusters of the archived minima; two records belong to the
// same cluster if a chain of member pairs closer than `radius` connects
// them. Returns cluster baricenters, ordered by each cluster's first record.
std::vector<std::vector<double>> cluster_archive(const Archive& archive, double radius);

// Fresh uniform population in the unit box with every agent farther than
// `exclusion` from every baricenter; after `attempts` rejected draws the
// farthest draw is kept and a warning is printed.
Population global_restart(std::size_t d, const std::vector<std::vector<double>>& baricenters,
                          double exclusion, int n_pop, int attempts,
                          CountingObjective& objective, Rng& rng);

IdeaResult run_idea(CountingObjective& objective, std::size_t d, const IdeaParams& params,
                    long budget, Rng& rng);

} // namespace idea
