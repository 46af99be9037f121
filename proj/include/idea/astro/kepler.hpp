#pragma once

#include "idea/astro/ephemeris.hpp"

namespace idea::astro {

// Stumpff functions C(psi) and S(psi) used by the universal-variable
// formulation; series expansion near psi = 0.
void stumpff(double psi, double &c2, double &c3);

// Propagates a two-body state by dt seconds (either sign) about a central
// body with gravitational parameter mu. Handles elliptic, parabolic and
// hyperbolic orbits through the universal anomaly.
StateRV kepler_propagate(const StateRV &s0, double dt_s, double mu);

} // namespace idea::astro
