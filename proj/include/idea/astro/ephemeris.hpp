#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

namespace idea::astro {

struct StateRV {
  Eigen::Vector3d r; // km, heliocentric mean-ecliptic frame
  Eigen::Vector3d v; // km/s
};

// Converts classical orbital elements (semi-major axis in km, angles in
// radians, mean anomaly in radians) to a cartesian state about a central
// body with gravitational parameter mu. Elliptic orbits only.
StateRV elements_to_state(double a_km, double e, double i_rad, double node_rad,
                          double argperi_rad, double mean_anom_rad, double mu);

// Solves Kepler's equation M = E - e sin(E) for elliptic orbits.
double solve_kepler_elliptic(double mean_anom_rad, double e);

enum class ElementKind {
  planet, // cubic mean-element series in centuries past the 1900 epoch
  fixed   // osculating elements at a reference epoch, two-body propagation
};

// All epochs throughout the library count days from the J2000 epoch
// (2000-01-01 12:00, JD 2451545.0), referred to as MJD2000.
//
// 'planet' bodies evaluate each element as a cubic polynomial in
// T = (mjd2000 + 36525) / 36525, i.e. Julian centuries past the classical
// 1900 epoch that the series were fitted to. Angles are in degrees, the
// semi-major axis in AU; coefficient k multiplies T^k. The mean anomaly is
// tabulated directly (not the mean longitude), as is the argument of
// perihelion (not its longitude).
//
// 'fixed' bodies hold one osculating element set (coefficient [0] of each
// polynomial) at epoch_mjd2000 and advance the mean anomaly with the
// two-body mean motion about the Sun.
struct BodyElements {
  std::string name;
  ElementKind kind = ElementKind::planet;
  double epoch_mjd2000 = 0.0; // 'fixed' only
  std::array<double, 4> a_au{};
  std::array<double, 4> ecc{};
  std::array<double, 4> inc_deg{};
  std::array<double, 4> node_deg{};
  std::array<double, 4> argp_deg{};
  std::array<double, 4> m_deg{};
  double mu = 0.0;     // body GM in km^3/s^2, zero when unused
  double radius = 0.0; // km

  StateRV state(double epoch_mjd2000) const;
};

class Ephemeris {
public:
  // Table compiled into the library: Mercury through Saturn (classical
  // mean-element series) plus comet 67P/Churyumov-Gerasimenko.
  static Ephemeris builtin();
  // Same table in text form; see data/ephemerides.txt for the format.
  static Ephemeris load(const std::string &path);
  // Loads $IDEA_DATA_DIR/ephemerides.txt when the variable is set,
  // otherwise the compiled-in table.
  static const Ephemeris &standard();

  const BodyElements &body(const std::string &name) const;
  bool has(const std::string &name) const;
  std::vector<std::string> names() const;
  void add(const BodyElements &b);

private:
  std::vector<BodyElements> bodies_;
};

} // namespace idea::astro
