#include "idea/astro/ephemeris.hpp"
#include "idea/astro/constants.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace idea::astro {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;

double deg2rad(double d) { return d * PI / 180.0; }

double wrap_pi(double a) {
  a = std::fmod(a, 2.0 * PI);
  if (a > PI)
    a -= 2.0 * PI;
  if (a < -PI)
    a += 2.0 * PI;
  return a;
}

double cubic(const std::array<double, 4> &c, double t) {
  return c[0] + t * (c[1] + t * (c[2] + t * c[3]));
}

} // namespace

double solve_kepler_elliptic(double mean_anom_rad, double e) {
  if (!(e >= 0.0 && e < 1.0))
    throw std::invalid_argument("solve_kepler_elliptic: need 0 <= e < 1");
  double m = wrap_pi(mean_anom_rad);
  double ecc = e;
  // Newton from E0 = M + e sin M; the derivative 1 - e cos E stays >= 1 - e.
  double en = m + ecc * std::sin(m);
  for (int it = 0; it < 100; ++it) {
    double f = en - ecc * std::sin(en) - m;
    double fp = 1.0 - ecc * std::cos(en);
    double step = f / fp;
    en -= step;
    if (std::abs(step) < 1e-14)
      break;
  }
  if (std::abs(en - ecc * std::sin(en) - m) > 1e-10)
    throw std::runtime_error("solve_kepler_elliptic: no convergence");
  return en;
}

StateRV elements_to_state(double a_km, double e, double i_rad, double node_rad,
                          double argperi_rad, double mean_anom_rad,
                          double mu) {
  if (!(a_km > 0.0))
    throw std::invalid_argument("elements_to_state: need a > 0");
  double en = solve_kepler_elliptic(mean_anom_rad, e);
  double ce = std::cos(en), se = std::sin(en);
  double b_over_a = std::sqrt(1.0 - e * e);
  double r = a_km * (1.0 - e * ce);

  // perifocal coordinates and velocities
  double xp = a_km * (ce - e);
  double yp = a_km * b_over_a * se;
  double vscale = std::sqrt(mu * a_km) / r;
  double vxp = -vscale * se;
  double vyp = vscale * b_over_a * ce;

  double cn = std::cos(node_rad), sn = std::sin(node_rad);
  double co = std::cos(argperi_rad), so = std::sin(argperi_rad);
  double ci = std::cos(i_rad), si = std::sin(i_rad);

  // rows of Rz(node) * Rx(i) * Rz(argperi), applied to perifocal vectors
  Eigen::Matrix3d rot;
  rot << cn * co - sn * so * ci, -cn * so - sn * co * ci, sn * si,
      sn * co + cn * so * ci, -sn * so + cn * co * ci, -cn * si, so * si,
      co * si, ci;

  StateRV s;
  s.r = rot * Eigen::Vector3d(xp, yp, 0.0);
  s.v = rot * Eigen::Vector3d(vxp, vyp, 0.0);
  return s;
}

StateRV BodyElements::state(double t) const {
  double a, ecc2, inc, node, argp, m;
  if (kind == ElementKind::planet) {
    double cy = (t + 36525.0) / 36525.0;
    a = cubic(a_au, cy) * AU_KM;
    ecc2 = cubic(ecc, cy);
    inc = deg2rad(cubic(inc_deg, cy));
    node = deg2rad(cubic(node_deg, cy));
    argp = deg2rad(cubic(argp_deg, cy));
    m = deg2rad(cubic(m_deg, cy));
  } else {
    a = a_au[0] * AU_KM;
    ecc2 = ecc[0];
    inc = deg2rad(inc_deg[0]);
    node = deg2rad(node_deg[0]);
    argp = deg2rad(argp_deg[0]);
    double n = std::sqrt(GM_SUN / (a * a * a)); // rad/s
    m = deg2rad(m_deg[0]) + n * (t - epoch_mjd2000) * DAY_S;
  }
  return elements_to_state(a, ecc2, inc, node, argp, m, GM_SUN);
}

Ephemeris Ephemeris::builtin() {
  // Classical mean-element series for the planets (1900-epoch fits, cubic in
  // centuries). These are the element polynomials the bundled trajectory
  // problems were defined against; their reference solutions decode to the
  // published objective values only with this exact table. Earth means the
  // Earth orbit of the Sun's classical theory (geocenter, not the
  // Earth-Moon barycenter).
  auto planet = [](const char *name, double mu, double rad,
                   std::array<double, 4> a, std::array<double, 4> e,
                   std::array<double, 4> i, std::array<double, 4> node,
                   std::array<double, 4> argp, std::array<double, 4> m) {
    BodyElements b;
    b.name = name;
    b.kind = ElementKind::planet;
    b.mu = mu;
    b.radius = rad;
    b.a_au = a;
    b.ecc = e;
    b.inc_deg = i;
    b.node_deg = node;
    b.argp_deg = argp;
    b.m_deg = m;
    return b;
  };

  Ephemeris eph;
  eph.add(planet(
      "mercury", GM_MERCURY, R_MERCURY, {0.38709860, 0.0, 0.0, 0.0},
      {0.20561421, 0.00002046, -0.000000030, 0.0},
      {7.00288055555555556, 1.86083333333333333e-3, -1.83333333333333333e-5,
       0.0},
      {4.71459444444444444e1, 1.18520833333333333, 1.73888888888888889e-4,
       0.0},
      {2.87537527777777778e1, 3.70280555555555556e-1, 1.20833333333333333e-4,
       0.0},
      {1.02279380555555556e2, 1.49472515288888889e5, 6.38888888888888889e-6,
       0.0}));
  eph.add(planet(
      "venus", GM_VENUS, R_VENUS, {0.72333160, 0.0, 0.0, 0.0},
      {0.00682069, -0.00004774, 0.000000091, 0.0},
      {3.39363055555555556, 1.00583333333333333e-3, -9.72222222222222222e-7,
       0.0},
      {7.57796472222222222e1, 8.99850e-1, -4.1e-4, 0.0},
      {5.43841861111111111e1, 5.08186111111111111e-1, -5.66388888888888889e-4,
       0.0},
      {2.12603219444444444e2, 5.85178038738888889e4, 1.28611111111111111e-3,
       0.0}));
  eph.add(planet(
      "earth", GM_EARTH, R_EARTH, {1.00000023, 0.0, 0.0, 0.0},
      {0.01675104, -0.0000418, -0.000000126, 0.0}, {0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0},
      {1.01220833333333333e2, 1.71917500, 4.52777777777777778e-4,
       3.33333333333333333e-6},
      {3.58475844444444444e2, 3.599904975e4, -1.50277777777777778e-4,
       -3.33333333333333333e-6}));
  eph.add(planet(
      "mars", GM_MARS, R_MARS, {1.5236883990, 0.0, 0.0, 0.0},
      {0.09331290, 0.000092064, -0.000000077, 0.0},
      {1.85033333333333333, -6.75e-4, 1.26111111111111111e-5, 0.0},
      {4.87864416666666667e1, 7.70991666666666667e-1, -1.38888888888888889e-6,
       -5.33333333333333333e-6},
      {2.85431761111111111e2, 1.06976666666666667, 1.3125e-4,
       4.13888888888888889e-6},
      {3.19529425e2, 1.91398585e4, 1.80805555555555556e-4,
       1.19444444444444444e-6}));
  eph.add(planet(
      "jupiter", GM_JUPITER, R_JUPITER, {5.2025610, 0.0, 0.0, 0.0},
      {0.04833475, 0.00016418, -0.0000004676, -0.0000000017},
      {1.30873611111111111, -5.69611111111111111e-3, 3.88888888888888889e-6,
       0.0},
      {9.94433861111111111e1, 1.01053000, 3.52222222222222222e-4,
       -8.51111111111111111e-6},
      {2.73277541666666667e2, 5.99431666666666667e-1, 7.0405e-4,
       5.07777777777777778e-6},
      {2.25328327777777778e2, 3.03469202388888889e3, -7.21588888888888889e-4,
       1.78444444444444444e-6}));
  eph.add(planet(
      "saturn", GM_SATURN, R_SATURN, {9.5547470, 0.0, 0.0, 0.0},
      {0.05589232, -0.00034550, -0.000000728, 0.00000000074},
      {2.49251944444444444, -3.91888888888888889e-3, -1.54888888888888889e-5,
       4.44444444444444444e-8},
      {1.12790388888888889e2, 8.73195138888888889e-1, -1.52180555555555556e-4,
       -5.30555555555555556e-6},
      {3.38307772222222222e2, 1.08522069444444444, 9.78541666666666667e-4,
       9.91666666666666667e-6},
      {1.75466216666666667e2, 1.22155146777777778e3, -5.01819444444444444e-4,
       -5.19444444444444444e-6}));

  // 67P/Churyumov-Gerasimenko, osculating at its 2002-08-18.2 perihelion
  // passage (MJD 52504.23754), hence zero mean anomaly at epoch.
  BodyElements comet;
  comet.name = "comet67p";
  comet.kind = ElementKind::fixed;
  comet.epoch_mjd2000 = 959.73754;
  comet.a_au = {3.50294972836275, 0.0, 0.0, 0.0};
  comet.ecc = {0.6319356, 0.0, 0.0, 0.0};
  comet.inc_deg = {7.12723, 0.0, 0.0, 0.0};
  comet.node_deg = {50.92302, 0.0, 0.0, 0.0};
  comet.argp_deg = {11.36788, 0.0, 0.0, 0.0};
  comet.m_deg = {0.0, 0.0, 0.0, 0.0};
  comet.mu = 0.0;
  comet.radius = 2.0;
  eph.add(comet);
  return eph;
}

Ephemeris Ephemeris::load(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open ephemerides file: " + path);
  Ephemeris eph;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind))
      continue;
    auto fail = [&](const char *what) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " +
                               what);
    };
    BodyElements b;
    if (kind == "planet") {
      b.kind = ElementKind::planet;
      if (!(ss >> b.name >> b.mu >> b.radius))
        fail("expected 'planet name mu radius' then 24 coefficients");
      std::array<double, 4> *polys[6] = {&b.a_au,     &b.ecc,      &b.inc_deg,
                                         &b.node_deg, &b.argp_deg, &b.m_deg};
      for (auto *p : polys)
        for (double &c : *p)
          if (!(ss >> c))
            fail("expected 24 element coefficients");
    } else if (kind == "fixed") {
      b.kind = ElementKind::fixed;
      if (!(ss >> b.name >> b.mu >> b.radius >> b.epoch_mjd2000 >> b.a_au[0] >>
            b.ecc[0] >> b.inc_deg[0] >> b.node_deg[0] >> b.argp_deg[0] >>
            b.m_deg[0]))
        fail("expected 'fixed name mu radius epoch a e i node argp M'");
    } else {
      fail("unknown body kind");
    }
    eph.add(b);
  }
  if (eph.names().empty())
    throw std::runtime_error("ephemerides file has no bodies: " + path);
  return eph;
}

const Ephemeris &Ephemeris::standard() {
  static const Ephemeris eph = [] {
    if (const char *dir = std::getenv("IDEA_DATA_DIR"))
      return load(std::string(dir) + "/ephemerides.txt");
    return builtin();
  }();
  return eph;
}

const BodyElements &Ephemeris::body(const std::string &name) const {
  for (const auto &b : bodies_)
    if (b.name == name)
      return b;
  throw std::out_of_range("no ephemeris for body '" + name + "'");
}

bool Ephemeris::has(const std::string &name) const {
  for (const auto &b : bodies_)
    if (b.name == name)
      return true;
  return false;
}

std::vector<std::string> Ephemeris::names() const {
  std::vector<std::string> out;
  out.reserve(bodies_.size());
  for (const auto &b : bodies_)
    out.push_back(b.name);
  return out;
}

void Ephemeris::add(const BodyElements &b) {
  for (const auto &other : bodies_)
    if (other.name == b.name)
      throw std::invalid_argument("duplicate ephemeris body '" + b.name + "'");
  bodies_.push_back(b);
}

} // namespace idea::astro
