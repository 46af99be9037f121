#include "idea/astro/lambert.hpp"
#include "idea/astro/kepler.hpp"

#include <cmath>
#include <stdexcept>

namespace idea::astro {

namespace {
constexpr double PI = 3.141592653589793238462643383279502884;
}

LambertSolution lambert(const Eigen::Vector3d &r1, const Eigen::Vector3d &r2,
                        double tof, double mu, bool retrograde) {
  if (!(tof > 0.0))
    throw std::invalid_argument("lambert: need tof > 0");
  if (!(mu > 0.0))
    throw std::invalid_argument("lambert: need mu > 0");
  double r1n = r1.norm(), r2n = r2.norm();
  if (!(r1n > 0.0) || !(r2n > 0.0))
    throw std::invalid_argument("lambert: zero radius");

  double cosdnu = r1.dot(r2) / (r1n * r2n);
  cosdnu = std::min(1.0, std::max(-1.0, cosdnu));
  Eigen::Vector3d cr = r1.cross(r2);
  double sindnu = cr.norm() / (r1n * r2n);
  if (sindnu < 1e-6)
    throw std::runtime_error("lambert: transfer plane undefined "
                             "(endpoints nearly collinear)");

  double dm = cr.z() >= 0.0 ? 1.0 : -1.0; // short way iff prograde above
  if (retrograde)
    dm = -dm;
  double a_coef = dm * std::sqrt(r1n * r2n * (1.0 + cosdnu));

  double sqmu = std::sqrt(mu);
  double c2 = 0.0, c3 = 0.0, y = 0.0;
  auto tof_at = [&](double psi) {
    if (psi > 35.0) {
      // Near psi = 4 pi^2 (a nearly full revolution, e.g. a resonant
      // planet-to-planet return) 1 - cos(sqrt(psi)) cancels catastrophically.
      // Rewriting everything in d = 2 pi - sqrt(psi) keeps full precision:
      // c2 = 2 sin^2(d/2)/psi, psi*c3 - 1 = sin(d)/sqrt(psi), and the y
      // ratio collapses to (psi*c3 - 1)/sqrt(c2) = sqrt(2) cos(d/2).
      double s = std::sqrt(psi);
      double d = 2.0 * PI - s;
      double sh = std::sin(0.5 * d);
      c2 = 2.0 * sh * sh / psi;
      c3 = (s + std::sin(d)) / (psi * s);
      y = r1n + r2n + a_coef * std::sqrt(2.0) * std::cos(0.5 * d);
    } else {
      stumpff(psi, c2, c3);
      y = r1n + r2n + a_coef * (psi * c3 - 1.0) / std::sqrt(c2);
    }
    if (y < 0.0)
      return -1.0; // below the geometric minimum, flagged to the caller
    double chi = std::sqrt(y / c2);
    return (chi * chi * chi * c3 + a_coef * std::sqrt(y)) / sqmu;
  };

  // Time of flight grows monotonically with psi on the zero-revolution
  // branch; psi -> (2 pi)^2 is the parabolic-to-one-rev limit.
  double hi = 4.0 * PI * PI - 1e-9;
  double lo = -4.0 * PI * PI;
  // expand downward until the lower end undershoots the requested time;
  // a y < 0 probe (possible for the short way) already lies below every
  // admissible psi, so it is a valid lower end as well
  for (int k = 0;; ++k) {
    double t = tof_at(lo);
    if (t <= tof)
      break;
    if (k >= 40 || -lo > 2.5e5)
      throw std::runtime_error("lambert: time of flight too short");
    lo *= 2.0;
  }

  double t_trial = 0.0;
  int it = 0;
  for (; it < 200; ++it) {
    double psi = 0.5 * (lo + hi);
    t_trial = tof_at(psi);
    if (t_trial < 0.0) { // y < 0: need larger psi
      lo = psi;
      continue;
    }
    if (std::abs(t_trial - tof) < 1e-10 * tof)
      break;
    if (t_trial <= tof)
      lo = psi;
    else
      hi = psi;
    if (hi - lo < 4e-15 * std::max(1.0, std::abs(lo)))
      break; // interval resolved to machine precision
  }
  if (std::abs(t_trial - tof) > 1e-6 * tof)
    throw std::runtime_error("lambert: no convergence");

  double f = 1.0 - y / r1n;
  double g = a_coef * std::sqrt(y / mu);
  double gdot = 1.0 - y / r2n;

  LambertSolution sol;
  sol.v1 = (r2 - f * r1) / g;
  sol.v2 = (gdot * r2 - r1) / g;
  sol.iterations = it;
  return sol;
}

} // namespace idea::astro
