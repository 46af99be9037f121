#include "idea/problems.hpp"

#include "idea/astro/constants.hpp"
#include "idea/astro/ephemeris.hpp"
#include "idea/astro/kepler.hpp"
#include "idea/astro/lambert.hpp"
#include "idea/astro/swingby.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace idea {

namespace {

using namespace idea::astro;

constexpr double PI = 3.141592653589793238462643383279502884;
constexpr double INF = std::numeric_limits<double>::infinity();

std::vector<BodyElements> resolve_sequence(
    const std::vector<std::string> &names) {
  std::vector<BodyElements> seq;
  seq.reserve(names.size());
  const auto &eph = Ephemeris::standard();
  for (const auto &n : names)
    seq.push_back(eph.body(n));
  return seq;
}

// Multi gravity assist transfer with one impulse per swing-by periapsis and
// an injection burn at arrival. x = [t0, T1, ..., TN].
struct MgaTransfer {
  std::vector<BodyElements> seq;
  std::vector<double> rp_min;   // admissible periapsis, planet radii
  std::vector<double> w_base;   // penalty weights per swing-by
  double arrival_rp_km = 0.0;   // target orbit at the last body
  double arrival_ecc = 0.0;

  double operator()(const std::vector<double> &x) const {
    size_t n_legs = seq.size() - 1;
    std::vector<double> t(seq.size());
    t[0] = x[0];
    for (size_t k = 1; k < seq.size(); ++k)
      t[k] = t[k - 1] + x[k];
    std::vector<StateRV> s(seq.size());
    for (size_t k = 0; k < seq.size(); ++k)
      s[k] = seq[k].state(t[k]);

    std::vector<Eigen::Vector3d> v_dep(n_legs), v_arr(n_legs);
    for (size_t k = 0; k < n_legs; ++k) {
      auto sol = lambert(s[k].r, s[k + 1].r, x[k + 1] * DAY_S, GM_SUN);
      v_dep[k] = sol.v1;
      v_arr[k] = sol.v2;
    }

    double total = (v_dep[0] - s[0].v).norm();
    for (size_t i = 0; i + 1 < n_legs; ++i) {
      const auto &planet = seq[i + 1];
      auto ps = swingby_powered(v_arr[i] - s[i + 1].v,
                                v_dep[i + 1] - s[i + 1].v, planet.mu);
      total += ps.dv;
      double d = ps.rp_km / planet.radius - rp_min[i];
      double sgn = d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
      total += w_base[i] * (1.0 - sgn) * d * d;
    }

    double vinf = (v_arr[n_legs - 1] - s[n_legs].v).norm();
    double mu_f = seq[n_legs].mu;
    total += std::sqrt(vinf * vinf + 2.0 * mu_f / arrival_rp_km) -
             std::sqrt(mu_f * (1.0 + arrival_ecc) / arrival_rp_km);
    return total;
  }
};

// Transfer with one deep space manoeuvre per leg and unpowered swing-bys.
// x = [t0, v0, theta_bar, delta_bar, T1..TN, a1..aN, rp1..rp(N-1),
//      g1..g(N-1)], objective = optional launch excess + DSM impulses +
// rendezvous burn at the final body. The swing-by angles g follow the
// classical trajectory-benchmark convention and complement the clock angle
// of swingby_unpowered: clock = pi/2 - g.
struct MgaDsmTransfer {
  std::vector<BodyElements> seq;
  bool include_v0 = true;

  double operator()(const std::vector<double> &x) const {
    size_t nl = seq.size() - 1;
    const double *T = x.data() + 4;
    const double *alpha = T + nl;
    const double *rp = alpha + nl;
    const double *gamma = rp + (nl - 1);

    std::vector<double> t(seq.size());
    t[0] = x[0];
    for (size_t i = 1; i < seq.size(); ++i)
      t[i] = t[i - 1] + T[i - 1];
    std::vector<StateRV> s(seq.size());
    for (size_t i = 0; i < seq.size(); ++i)
      s[i] = seq[i].state(t[i]);

    double total = include_v0 ? x[1] : 0.0;
    Eigen::Vector3d v_arr;
    for (size_t leg = 1; leg <= nl; ++leg) {
      Eigen::Vector3d v_out;
      if (leg == 1)
        v_out = launch_velocity(s[0].r, s[0].v, x[1], x[2], x[3]);
      else
        v_out = swingby_unpowered(v_arr, s[leg - 1].v, seq[leg - 1].mu,
                                  rp[leg - 2] * seq[leg - 1].radius,
                                  PI / 2.0 - gamma[leg - 2]);
      StateRV coast;
      coast.r = s[leg - 1].r;
      coast.v = v_out;
      StateRV dsm =
          kepler_propagate(coast, alpha[leg - 1] * T[leg - 1] * DAY_S, GM_SUN);
      auto sol = lambert(dsm.r, s[leg].r,
                         (1.0 - alpha[leg - 1]) * T[leg - 1] * DAY_S, GM_SUN);
      total += (sol.v1 - dsm.v).norm();
      v_arr = sol.v2;
    }
    total += (v_arr - s[nl].v).norm();
    return total;
  }
};

template <typename Fn> Objective guarded(Fn fn) {
  return [fn](const std::vector<double> &x) -> double {
    try {
      return fn(x);
    } catch (const std::exception &) {
      return INF; // geometrically infeasible point
    }
  };
}

std::string data_dir() {
  if (const char *dir = std::getenv("IDEA_DATA_DIR"))
    return dir;
#ifdef IDEA_DEFAULT_DATA_DIR
  return IDEA_DEFAULT_DATA_DIR;
#else
  return ".";
#endif
}

void attach_reference(Problem &p) {
  std::ifstream in(data_dir() + "/best_known.json");
  if (!in)
    return;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &) {
    return;
  }
  if (!j.contains(p.name))
    return;
  const auto &e = j[p.name];
  if (e.contains("f_best"))
    p.f_best = e["f_best"].get<double>();
  if (e.contains("tol_f"))
    p.tol_f = e["tol_f"].get<double>();
  if (e.contains("x_best"))
    p.x_best = e["x_best"].get<std::vector<double>>();
}

Problem make_cassini1() {
  Problem p;
  p.name = "cassini1";
  p.domain = SearchDomain({-1000.0, 30.0, 100.0, 30.0, 400.0, 1000.0},
                          {0.0, 400.0, 470.0, 400.0, 2000.0, 6000.0});
  MgaTransfer tr;
  tr.seq = resolve_sequence(
      {"earth", "venus", "venus", "earth", "jupiter", "saturn"});
  tr.rp_min = {1.0496, 1.0496, 1.0627, 9.3925};
  tr.w_base = {0.005, 0.005, 0.005, 0.0005};
  tr.arrival_rp_km = 108950.0;
  tr.arrival_ecc = 0.98;
  p.objective = guarded(tr);
  p.defaults.n_pop = 20;
  p.defaults.delta = 0.2;
  p.defaults.iun_max = -1;
  attach_reference(p);
  return p;
}

Problem make_cassini2() {
  Problem p;
  p.name = "cassini2";
  std::vector<double> lo = {-1000.0, 3.0, 0.0,  0.0,  100.0, 100.0,
                            30.0,    400.0, 800.0, 0.01, 0.01,  0.01,
                            0.01,    0.01,  1.05, 1.05, 1.15,  1.7,
                            0.0,     0.0,   0.0,  0.0};
  std::vector<double> hi = {0.0,   5.0,   1.0,      1.0,      400.0,    500.0,
                            300.0, 1600.0, 2200.0,  0.9,      0.9,      0.9,
                            0.9,   0.9,    6.0,     6.0,      6.5,      291.0,
                            2.0 * PI, 2.0 * PI, 2.0 * PI, 2.0 * PI};
  p.domain = SearchDomain(lo, hi);
  MgaDsmTransfer tr;
  tr.seq = resolve_sequence(
      {"earth", "venus", "venus", "earth", "jupiter", "saturn"});
  tr.include_v0 = true;
  p.objective = guarded(tr);
  p.defaults.n_pop = 40;
  p.defaults.delta = 0.2;
  p.defaults.iun_max = -1;
  attach_reference(p);
  return p;
}

Problem make_rosetta() {
  Problem p;
  p.name = "rosetta";
  std::vector<double> lo = {1460.0, 3.0,   0.0,   0.0,   300.0, 150.0,
                            150.0,  300.0, 700.0, 0.01,  0.01,  0.01,
                            0.01,   0.01,  1.05,  1.05,  1.05,  1.05,
                            0.0,    -PI,   0.0,   0.0};
  std::vector<double> hi = {1825.0, 5.0,   1.0,    1.0,    500.0, 800.0,
                            800.0,  800.0, 1850.0, 0.9,    0.9,   0.9,
                            0.9,    0.9,   9.0,    9.0,    9.0,   9.0,
                            2.0 * PI, PI,  2.0 * PI, 2.0 * PI};
  p.domain = SearchDomain(lo, hi);
  MgaDsmTransfer tr;
  tr.seq = resolve_sequence(
      {"earth", "earth", "mars", "earth", "earth", "comet67p"});
  tr.include_v0 = false;
  p.objective = guarded(tr);
  p.defaults.n_pop = 40;
  p.defaults.delta = 0.2;
  p.defaults.iun_max = 2;
  attach_reference(p);
  return p;
}

Problem make_messenger() {
  Problem p;
  p.name = "messenger";
  std::vector<double> lo = {1000.0, 1.0,   0.0,   0.0,  200.0, 30.0,
                            30.0,   30.0,  0.01,  0.01, 0.01,  0.01,
                            1.1,    1.1,   1.1,   -PI,  -PI,   -PI};
  std::vector<double> hi = {4000.0, 5.0,   1.0,   1.0,  400.0, 400.0,
                            400.0,  400.0, 0.99,  0.99, 0.99,  0.99,
                            6.0,    6.0,   6.0,   PI,   PI,    PI};
  p.domain = SearchDomain(lo, hi);
  MgaDsmTransfer tr;
  tr.seq =
      resolve_sequence({"earth", "earth", "venus", "venus", "mercury"});
  tr.include_v0 = true;
  p.objective = guarded(tr);
  p.defaults.n_pop = 20;
  p.defaults.delta = 0.25;
  p.defaults.iun_max = 6;
  attach_reference(p);
  return p;
}

Problem make_paraboloid(int dim) {
  Problem p;
  p.name = "paraboloid";
  p.domain = SearchDomain(std::vector<double>(dim, -5.0),
                          std::vector<double>(dim, 5.0));
  p.objective = [](const std::vector<double> &x) {
    double s = 0.0;
    for (double v : x)
      s += v * v;
    return s;
  };
  p.f_best = 0.0;
  p.x_best.assign(dim, 0.0);
  p.tol_f = 1e-6;
  return p;
}

Problem make_rastrigin(int dim) {
  Problem p;
  p.name = "rastrigin";
  p.domain = SearchDomain(std::vector<double>(dim, -5.12),
                          std::vector<double>(dim, 5.12));
  p.objective = [](const std::vector<double> &x) {
    double s = 10.0 * double(x.size());
    for (double v : x)
      s += v * v - 10.0 * std::cos(2.0 * PI * v);
    return s;
  };
  p.f_best = 0.0;
  p.x_best.assign(dim, 0.0);
  p.tol_f = 0.5; // below the value of the first suboptimal level
  return p;
}

Problem make_schwefel(int dim) {
  Problem p;
  p.name = "schwefel";
  p.domain = SearchDomain(std::vector<double>(dim, -500.0),
                          std::vector<double>(dim, 500.0));
  p.objective = [](const std::vector<double> &x) {
    double s = 418.9828872724338 * double(x.size());
    for (double v : x)
      s -= v * std::sin(std::sqrt(std::abs(v)));
    return s;
  };
  p.f_best = 0.0;
  p.x_best.assign(dim, 420.9687462275036);
  p.tol_f = 0.01;
  return p;
}

} // namespace

Problem make_problem(const std::string &name, int dim) {
  if (name == "cassini1")
    return make_cassini1();
  if (name == "cassini2")
    return make_cassini2();
  if (name == "rosetta")
    return make_rosetta();
  if (name == "messenger")
    return make_messenger();
  if (dim < 1)
    throw std::invalid_argument("make_problem: dim must be positive");
  if (name == "paraboloid")
    return make_paraboloid(dim);
  if (name == "rastrigin")
    return make_rastrigin(dim);
  if (name == "schwefel")
    return make_schwefel(dim);
  throw std::invalid_argument("unknown problem '" + name + "'");
}

std::vector<std::string> problem_names() {
  return {"cassini1",   "cassini2",  "rosetta", "messenger",
          "paraboloid", "rastrigin", "schwefel"};
}

} // namespace idea
