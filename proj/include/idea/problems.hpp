#pragma once

#include "idea/domain.hpp"
#include "idea/objective.hpp"

#include <limits>
#include <string>
#include <vector>

namespace idea {

// Optimizer settings tuned per problem; consumed by the command line tool
// and the benchmark harness as starting values.
struct ProblemDefaults {
  int n_pop = 20;
  double f_weight = 0.9;
  double cr = 0.9;
  double delta = 0.2;      // bubble restart half-width, unit-cube fraction
  double delta_c = 0.1;    // cluster linkage radius, unit-cube fraction
  double tol_conv = 0.25;  // contraction threshold as fraction of the peak
  int iun_max = -1;        // bubble restarts before a global one; <0: always
};

struct Problem {
  std::string name;
  SearchDomain domain;
  Objective objective; // physical (denormalized) coordinates
  double f_best = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> x_best; // empty when no reference point is published
  double tol_f = std::numeric_limits<double>::quiet_NaN();
  ProblemDefaults defaults;
};

// Known problems: cassini1 (6), cassini2 (22), rosetta (22), messenger (18)
// interplanetary transfers with fixed dimension, plus the analytic
// paraboloid, rastrigin and schwefel families where dim applies.
// Reference values for the transfers load from best_known.json in the data
// directory ($IDEA_DATA_DIR overrides the build-time default).
Problem make_problem(const std::string &name, int dim = 5);
std::vector<std::string> problem_names();

} // namespace idea
