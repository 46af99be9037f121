#include "idea/astro/kepler.hpp"

#include <cmath>
#include <stdexcept>

namespace idea::astro {

void stumpff(double psi, double &c2, double &c3) {
  if (psi > 1e-6) {
    double sp = std::sqrt(psi);
    c2 = (1.0 - std::cos(sp)) / psi;
    c3 = (sp - std::sin(sp)) / (psi * sp);
  } else if (psi < -1e-6) {
    double sp = std::sqrt(-psi);
    c2 = (std::cosh(sp) - 1.0) / (-psi);
    c3 = (std::sinh(sp) - sp) / (-psi * sp);
  } else {
    c2 = 1.0 / 2.0 - psi / 24.0 + psi * psi / 720.0;
    c3 = 1.0 / 6.0 - psi / 120.0 + psi * psi / 5040.0;
  }
}

StateRV kepler_propagate(const StateRV &s0, double dt, double mu) {
  if (!(mu > 0.0))
    throw std::invalid_argument("kepler_propagate: need mu > 0");
  if (!s0.r.allFinite() || !s0.v.allFinite())
    throw std::invalid_argument("kepler_propagate: non-finite state");
  double r0n = s0.r.norm();
  if (!(r0n > 0.0))
    throw std::invalid_argument("kepler_propagate: zero radius");
  if (dt == 0.0)
    return s0;

  double sqmu = std::sqrt(mu);
  double rdotv = s0.r.dot(s0.v);
  double v0sq = s0.v.squaredNorm();
  double alpha = 2.0 / r0n - v0sq / mu; // 1/a

  // initial universal anomaly
  double chi;
  if (alpha > 1e-12) {
    chi = sqmu * dt * alpha;
  } else if (alpha < -1e-12) {
    double a = 1.0 / alpha;
    double sgn = dt > 0.0 ? 1.0 : -1.0;
    double num = -2.0 * mu * alpha * dt;
    double den = rdotv + sgn * std::sqrt(-mu * a) * (1.0 - r0n * alpha);
    chi = sgn * std::sqrt(-a) * std::log(num / den);
    if (!std::isfinite(chi))
      chi = sqmu * dt / r0n;
  } else {
    chi = sqmu * dt / r0n;
  }

  // time of flight and radius as functions of chi
  double psi = 0.0, c2 = 0.0, c3 = 0.0, rval = r0n;
  auto tof_at = [&](double x) {
    psi = x * x * alpha;
    stumpff(psi, c2, c3);
    double x2 = x * x;
    rval = x2 * c2 + rdotv / sqmu * x * (1.0 - psi * c3) +
           r0n * (1.0 - psi * c2);
    return (x2 * x * c3 + rdotv / sqmu * x2 * c2 +
            r0n * x * (1.0 - psi * c3)) /
           sqmu;
  };

  // dt is strictly increasing in chi (d(tof)/d(chi) = r/sqrt(mu) > 0), so
  // Newton with a bisection fallback once a bracket is known is safe. The
  // tolerance sits at the representable resolution of the time equation;
  // the step-collapse exit below handles the last one or two bits.
  const double tol = 1e-15 * std::max(1.0, std::abs(dt));
  bool have_lo = false, have_hi = false;
  double lo = 0.0, hi = 0.0;
  for (int it = 0; it < 200; ++it) {
    double t = tof_at(chi);
    double err = dt - t;
    if (std::abs(err) < tol)
      break;
    if (err > 0.0) {
      lo = chi;
      have_lo = true;
    } else {
      hi = chi;
      have_hi = true;
    }
    double next =
        rval > 0.0 ? chi + err * sqmu / rval : chi + (err > 0.0 ? 1.0 : -1.0);
    if (have_lo && have_hi &&
        (!std::isfinite(next) || next <= lo || next >= hi || it > 60))
      next = 0.5 * (lo + hi);
    else if (!std::isfinite(next))
      next = chi * 2.0;
    if (next == chi)
      break; // step below representable resolution
    chi = next;
  }
  if (std::abs(dt - tof_at(chi)) > std::max(1e-6, 1e-9 * std::abs(dt)))
    throw std::runtime_error("kepler_propagate: no convergence");

  tof_at(chi); // refresh psi, c2, c3, rval at the converged chi
  double x2 = chi * chi;
  double f = 1.0 - x2 * c2 / r0n;
  double g = dt - x2 * chi * c3 / sqmu;
  double gdot = 1.0 - x2 * c2 / rval;
  double fdot = sqmu / (rval * r0n) * chi * (psi * c3 - 1.0);

  StateRV out;
  out.r = f * s0.r + g * s0.v;
  out.v = fdot * s0.r + gdot * s0.v;
  return out;
}

} // namespace idea::astro
