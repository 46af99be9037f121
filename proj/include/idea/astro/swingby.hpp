#pragma once

#include <Eigen/Dense>

namespace idea::astro {

// Patched-conic unpowered swing-by. Rotates the planetocentric inbound
// velocity v_in - v_planet by the turn angle set by periapsis radius rp (km)
// and planet GM mu; gamma (rad) picks the orientation of the outgoing
// asymptote around the incoming one. The basis is i = unit(v_in - v_planet),
// j = unit(i x v_planet), k = i x j, and the outgoing relative velocity is
// |v_rel| (cos(d) i + cos(gamma) sin(d) j + sin(gamma) sin(d) k).
// Returns the heliocentric outbound velocity.
Eigen::Vector3d swingby_unpowered(const Eigen::Vector3d &v_in,
                                  const Eigen::Vector3d &v_planet, double mu,
                                  double rp_km, double gamma_rad);

struct PoweredSwingby {
  double dv = 0.0;    // tangential burn at periapsis, km/s
  double rp_km = 0.0; // periapsis radius realising the required turn
};

// Minimum-burn powered swing-by between fixed planetocentric inbound and
// outbound velocities. Solves for the periapsis radius at which the sum of
// the two hyperbolic asymptote half-turns matches the required turn angle,
// then connects the inbound and outbound hyperbolas with one tangential
// burn at periapsis. The radius is unconstrained here; callers penalise
// solutions below their minimum admissible radius.
PoweredSwingby swingby_powered(const Eigen::Vector3d &v_in_rel,
                               const Eigen::Vector3d &v_out_rel, double mu);

// Heliocentric departure velocity for a launch with hyperbolic excess speed
// v0 (km/s) from a body in the given state. The asymptote direction is
// parameterised by normalised in-plane angle theta_bar and declination
// variable delta_bar, both in [0, 1], in the right-handed radial frame
// x = unit(r_body), z = unit(r x v), y = z cross x:
//   theta = 2 pi theta_bar, delta = acos(2 delta_bar - 1) - pi/2,
//   dir = cos(delta) cos(theta) x + cos(delta) sin(theta) y + sin(delta) z.
// The in-plane angle therefore counts from the outward radial direction
// towards the velocity side of the orbit plane.
Eigen::Vector3d launch_velocity(const Eigen::Vector3d &r_body,
                                const Eigen::Vector3d &v_body, double v0,
                                double theta_bar, double delta_bar);

} // namespace idea::astro
