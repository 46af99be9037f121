#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "idea/archive.hpp"
#include "idea/domain.hpp"
#include "idea/objective.hpp"
#include "idea/rng.hpp"

namespace idea {

// Differential evolution viewed as a population dynamical system
//
//   v'   = (1 - c) v + e o [ (x_i3 - x_i) + F (x_i2 - x_i1) ]
//   x'   = x + nu v',   nu = min(v_max, |v'|) / |v'|
//
// with greedy selection gating the position update only; the velocity is
// stored unconditionally. All positions live in the unit box; candidates
// leaving it get the violating components resampled uniformly.

enum class Strategy {
    rand, // i3 drawn at random
    best  // i3 = index of the current population best
};

// Constraints applied when drawing the difference indices. The draws happen
// in the order i1, i2, then i3 (when strategy == rand), each by rejection:
//  - mutually_different: i, i1, i2, i3 all distinct (classic DE; n_pop >= 4)
//  - allow_i1_eq_i2: i1 and i2 independent and unconstrained, so i1 == i2
//    occurs with probability 1/n_pop; i3 (when drawn) only avoids i
//  - allow_i1_eq_i3: i1 != i2 enforced, nothing else; i3 (when drawn)
//    only avoids i
enum class IndexMode { mutually_different, allow_i1_eq_i2, allow_i1_eq_i3 };

struct DeParams {
    double f = 0.9;  // difference weight
    double cr = 0.9; // crossover probability
    Strategy strategy = Strategy::best;
    IndexMode index_mode = IndexMode::allow_i1_eq_i2;
    double c = 1.0; // velocity memory; c = 1 makes the update memoryless
    double v_max = std::numeric_limits<double>::infinity();
};

struct Agent {
    std::vector<double> x;
    std::vector<double> v;
    double f = std::numeric_limits<double>::infinity();
};

struct Population {
    std::vector<Agent> agents;
    long generation = 0;
    double rho_a_max = 0.0;

    std::size_t size() const { return agents.size(); }
    std::size_t dim() const { return agents.empty() ? 0 : agents.front().x.size(); }
    // lowest f, ties broken toward the lower index
    std::size_t best_index() const;
};

// Everything needed to replay one trial deterministically.
struct TrialRecord {
    int i1 = -1, i2 = -1, i3 = -1;
    std::vector<std::uint8_t> mask;
    double nu = 1.0;
    std::vector<double> candidate_pre; // before boundary resampling
    std::vector<double> candidate;     // as evaluated
    bool projected = false;
    double f_candidate = std::numeric_limits<double>::infinity();
    bool accepted = false;
};

struct GenerationRecord {
    double f_weight = 0.0;
    double cr = 0.0;
    std::vector<TrialRecord> trials;
};

// Crossover mask: one uniformly chosen component is forced on, the others
// are on independently with probability cr. The forced index is drawn first,
// then the remaining components in position order.
std::vector<std::uint8_t> draw_mask(std::size_t d, double cr, Rng& rng);

// Velocity increment u for agent i against the current population.
std::vector<double> generate_trial(const Population& pop, std::size_t i, const DeParams& params,
                                   Rng& rng, TrialRecord* record = nullptr);

// Strict improvement; throws on non-finite input.
bool select(double f_candidate, double f_current);

// One synchronous generation: all candidates are formed and evaluated
// against the generation-k population, then accepted moves are applied at
// once. Exactly pop.size() objective evaluations.
void step_generation(Population& pop, const DeParams& params, CountingObjective& objective,
                     Rng& rng, GenerationRecord* record = nullptr);

// Largest pairwise distance between agents (rho_A).
double contraction_radius(const Population& pop);
double max_pairwise_distance(const std::vector<std::vector<double>>& points);

struct CollapseProbability {
    double per_generation = 0.0; // [(1/n_pop) cr^(d-1)]^(n_pop-1)
    double within_horizon = 0.0; // 1 - (1 - p)^k_h
};
CollapseProbability collapse_probability(int n_pop, double cr, int d, long k_h);

// Moduli of the eigenvalues of the one-generation iteration matrix built
// from a recorded generation (rejected rows are identity rows). Only defined
// for cr = 1, where the move is linear in the population. Sorted descending.
std::vector<double> generation_spectrum(const GenerationRecord& record, int n_pop);

// Uniform random population in the unit box, velocities zero, all agents
// evaluated (n_pop evaluations).
Population init_population(int n_pop, std::size_t d, CountingObjective& objective, Rng& rng);

// Plain DE baseline: step until the evaluation budget is exhausted.
RunReport run_de(CountingObjective& objective, std::size_t d, int n_pop, const DeParams& params,
                 long budget, Rng& rng);

} // namespace idea
