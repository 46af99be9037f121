#include "idea/astro/swingby.hpp"

#include <cmath>
#include <stdexcept>

namespace idea::astro {

namespace {
constexpr double PI = 3.141592653589793238462643383279502884;
}

Eigen::Vector3d swingby_unpowered(const Eigen::Vector3d &v_in,
                                  const Eigen::Vector3d &v_planet, double mu,
                                  double rp_km, double gamma_rad) {
  if (!(mu > 0.0) || !(rp_km > 0.0))
    throw std::invalid_argument("swingby_unpowered: need mu > 0 and rp > 0");
  Eigen::Vector3d vrel = v_in - v_planet;
  double vinf = vrel.norm();
  if (!(vinf > 0.0))
    throw std::invalid_argument("swingby_unpowered: zero excess velocity");

  double ecc = 1.0 + rp_km * vinf * vinf / mu;
  double delta = 2.0 * std::asin(1.0 / ecc);

  Eigen::Vector3d i = vrel / vinf;
  Eigen::Vector3d j = i.cross(v_planet);
  double jn = j.norm();
  if (jn < 1e-12 * v_planet.norm())
    throw std::runtime_error("swingby_unpowered: relative velocity parallel "
                             "to planet velocity, frame undefined");
  j /= jn;
  Eigen::Vector3d k = i.cross(j);

  Eigen::Vector3d out_rel =
      vinf * (std::cos(delta) * i + std::cos(gamma_rad) * std::sin(delta) * j +
              std::sin(gamma_rad) * std::sin(delta) * k);
  return out_rel + v_planet;
}

PoweredSwingby swingby_powered(const Eigen::Vector3d &v_in_rel,
                               const Eigen::Vector3d &v_out_rel, double mu) {
  if (!(mu > 0.0))
    throw std::invalid_argument("swingby_powered: need mu > 0");
  double vin = v_in_rel.norm();
  double vout = v_out_rel.norm();
  if (!(vin > 0.0) || !(vout > 0.0))
    throw std::invalid_argument("swingby_powered: zero excess velocity");

  double ca = v_in_rel.dot(v_out_rel) / (vin * vout);
  ca = std::min(1.0, std::max(-1.0, ca));
  double alpha = std::acos(ca); // required turn, in [0, pi]

  // The achievable turn asin(mu/(mu + rp vin^2)) + asin(mu/(mu + rp vout^2))
  // decreases monotonically from pi (rp -> 0) to 0 (rp -> inf), so any
  // required angle is bracketed; bisect on log(rp).
  auto turn_at = [&](double rp) {
    return std::asin(mu / (mu + rp * vin * vin)) +
           std::asin(mu / (mu + rp * vout * vout)) - alpha;
  };
  double llo = std::log(1e-6), lhi = std::log(1e9);
  for (int it = 0; it < 200 && lhi - llo > 1e-14; ++it) {
    double lmid = 0.5 * (llo + lhi);
    if (turn_at(std::exp(lmid)) > 0.0)
      llo = lmid; // turn still too large: increase rp
    else
      lhi = lmid;
  }

  PoweredSwingby out;
  out.rp_km = std::exp(0.5 * (llo + lhi));
  out.dv = std::abs(std::sqrt(vout * vout + 2.0 * mu / out.rp_km) -
                    std::sqrt(vin * vin + 2.0 * mu / out.rp_km));
  return out;
}

Eigen::Vector3d launch_velocity(const Eigen::Vector3d &r_body,
                                const Eigen::Vector3d &v_body, double v0,
                                double theta_bar, double delta_bar) {
  if (!(v0 >= 0.0))
    throw std::invalid_argument("launch_velocity: need v0 >= 0");
  double rbn = r_body.norm();
  Eigen::Vector3d z = r_body.cross(v_body);
  double zn = z.norm();
  if (!(rbn > 0.0) || !(zn > 0.0))
    throw std::invalid_argument("launch_velocity: degenerate body state");

  Eigen::Vector3d x = r_body / rbn;
  z /= zn;
  Eigen::Vector3d y = z.cross(x);

  double theta = 2.0 * PI * theta_bar;
  double cd = std::min(1.0, std::max(-1.0, 2.0 * delta_bar - 1.0));
  double delta = std::acos(cd) - PI / 2.0;

  Eigen::Vector3d dir = std::cos(delta) * std::cos(theta) * x +
                        std::cos(delta) * std::sin(theta) * y +
                        std::sin(delta) * z;
  return v_body + v0 * dir;
}

} // namespace idea::astro
