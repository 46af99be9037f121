#pragma once

#include "idea/archive.hpp"
#include "idea/objective.hpp"
#include "idea/rng.hpp"

namespace idea {

// Monotonic basin hopping: local search from a uniform start, then repeated
// uniform perturbations of the incumbent inside [x - delta, x + delta],
// each refined by a local search and accepted only on strict improvement.
// With n_samples > 0 the incumbent is abandoned for a fresh uniform start
// after that many consecutive failures (guided-restart variant).
struct MbhParams {
    double delta = 0.1;
    long n_samples = -1; // consecutive failures before a restart; -1 = never
    long local_budget_per_dim = 500;
    double local_tol = 1e-8;
};

struct MbhResult {
    RunReport report;
    Archive archive;
};

// Uniform draw in [x - delta, x + delta] clipped to the unit box. delta = 0
// returns x itself.
std::vector<double> sample_neighborhood(const std::vector<double>& x, double delta, Rng& rng);

MbhResult run_mbh(CountingObjective& objective, std::size_t d, const MbhParams& params,
                  long budget, Rng& rng);

} // namespace idea
