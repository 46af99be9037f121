#pragma once

namespace idea::astro {

// Gravitational parameters in km^3/s^2, lengths in km, time in s.
// All values follow the classical interplanetary trajectory-benchmark
// convention rather than current best estimates: the reference solutions of
// the bundled trajectory problems were produced against this exact set, and
// the resonant legs in those solutions are sensitive enough that mixing in
// modern constants shifts their objective values.
inline constexpr double GM_SUN = 1.32712428e11;
inline constexpr double AU_KM = 149597870.66;
inline constexpr double DAY_S = 86400.0;

inline constexpr double GM_MERCURY = 22321.0;
inline constexpr double GM_VENUS = 324860.0;
inline constexpr double GM_EARTH = 398601.19;
inline constexpr double GM_MARS = 42828.3;
inline constexpr double GM_JUPITER = 126.7e6;
inline constexpr double GM_SATURN = 37.9e6;

inline constexpr double R_MERCURY = 2440.0;
inline constexpr double R_VENUS = 6052.0;
inline constexpr double R_EARTH = 6378.0;
inline constexpr double R_MARS = 3397.0;
inline constexpr double R_JUPITER = 71492.0;
inline constexpr double R_SATURN = 60268.0;

} // namespace idea::astro
