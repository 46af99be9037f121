#pragma once

#include <Eigen/Dense>

namespace idea::astro {

struct LambertSolution {
  Eigen::Vector3d v1; // velocity at r1, km/s
  Eigen::Vector3d v2; // velocity at r2, km/s
  int iterations = 0;
};

// Solves the zero-revolution Lambert problem between position vectors r1 and
// r2 (km) with time of flight tof_s (s) about a body with gravitational
// parameter mu. The transfer direction is chosen prograde with respect to
// the +z axis (retrograde = false flips it): the short way is taken when the
// z component of r1 x r2 is non-negative, the long way otherwise.
// Throws std::invalid_argument for non-positive tof or zero radii and
// std::runtime_error for near-collinear geometries (transfer plane
// undefined) or unreachable times of flight.
LambertSolution lambert(const Eigen::Vector3d &r1, const Eigen::Vector3d &r2,
                        double tof_s, double mu, bool retrograde = false);

} // namespace idea::astro
