#include "idea/de.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace idea {

std::size_t Population::best_index() const {
    std::size_t b = 0;
    for (std::size_t i = 1; i < agents.size(); ++i)
        if (agents[i].f < agents[b].f) b = i;
    return b;
}

static void check_params(const DeParams& p, std::size_t n_pop) {
    if (!(p.cr >= 0.0 && p.cr <= 1.0)) throw std::invalid_argument("cr outside [0,1]");
    if (!std::isfinite(p.f)) throw std::invalid_argument("f not finite");
    if (!(p.c >= 0.0 && p.c <= 1.0)) throw std::invalid_argument("c outside [0,1]");
    if (!(p.v_max > 0.0)) throw std::invalid_argument("v_max not positive");
    const std::size_t need = p.index_mode == IndexMode::mutually_different ? 4 : 2;
    if (n_pop < need) throw std::invalid_argument("population too small for index mode");
}

std::vector<std::uint8_t> draw_mask(std::size_t d, double cr, Rng& rng) {
    if (d == 0) throw std::invalid_argument("mask dimension zero");
    std::vector<std::uint8_t> e(d, 0);
    const int forced = rng.uniform_int(0, static_cast<int>(d) - 1);
    e[static_cast<std::size_t>(forced)] = 1;
    for (std::size_t j = 0; j < d; ++j) {
        if (j == static_cast<std::size_t>(forced)) continue;
        e[j] = rng.uniform01() <= cr ? 1 : 0;
    }
    return e;
}

namespace {

struct Indices {
    int i1, i2, i3;
};

Indices draw_indices(std::size_t n, std::size_t self, Strategy strategy, IndexMode mode,
                     std::size_t best, Rng& rng) {
    const int nn = static_cast<int>(n);
    Indices idx{-1, -1, -1};
    if (strategy == Strategy::best) idx.i3 = static_cast<int>(best);
    switch (mode) {
    case IndexMode::mutually_different:
        do {
            idx.i1 = rng.uniform_int(0, nn - 1);
        } while (idx.i1 == static_cast<int>(self) || idx.i1 == idx.i3);
        do {
            idx.i2 = rng.uniform_int(0, nn - 1);
        } while (idx.i2 == static_cast<int>(self) || idx.i2 == idx.i3 || idx.i2 == idx.i1);
        if (strategy == Strategy::rand)
            do {
                idx.i3 = rng.uniform_int(0, nn - 1);
            } while (idx.i3 == static_cast<int>(self) || idx.i3 == idx.i1 || idx.i3 == idx.i2);
        break;
    case IndexMode::allow_i1_eq_i2:
        idx.i1 = rng.uniform_int(0, nn - 1);
        idx.i2 = rng.uniform_int(0, nn - 1);
        if (strategy == Strategy::rand)
            do {
                idx.i3 = rng.uniform_int(0, nn - 1);
            } while (idx.i3 == static_cast<int>(self));
        break;
    case IndexMode::allow_i1_eq_i3:
        idx.i1 = rng.uniform_int(0, nn - 1);
        do {
            idx.i2 = rng.uniform_int(0, nn - 1);
        } while (idx.i2 == idx.i1);
        if (strategy == Strategy::rand)
            do {
                idx.i3 = rng.uniform_int(0, nn - 1);
            } while (idx.i3 == static_cast<int>(self));
        break;
    }
    return idx;
}

} // namespace

std::vector<double> generate_trial(const Population& pop, std::size_t i, const DeParams& params,
                                   Rng& rng, TrialRecord* record) {
    check_params(params, pop.size());
    if (i >= pop.size()) throw std::invalid_argument("agent index out of range");
    const std::size_t d = pop.dim();
    const Indices idx =
        draw_indices(pop.size(), i, params.strategy, params.index_mode, pop.best_index(), rng);
    const auto mask = draw_mask(d, params.cr, rng);
    const auto& xi = pop.agents[i].x;
    const auto& x1 = pop.agents[static_cast<std::size_t>(idx.i1)].x;
    const auto& x2 = pop.agents[static_cast<std::size_t>(idx.i2)].x;
    const auto& x3 = pop.agents[static_cast<std::size_t>(idx.i3)].x;
    std::vector<double> u(d, 0.0);
    for (std::size_t j = 0; j < d; ++j)
        if (mask[j]) u[j] = (x3[j] - xi[j]) + params.f * (x2[j] - x1[j]);
    if (record) {
        record->i1 = idx.i1;
        record->i2 = idx.i2;
        record->i3 = idx.i3;
        record->mask = mask;
    }
    return u;
}

bool select(double f_candidate, double f_current) {
    if (!std::isfinite(f_candidate) || !std::isfinite(f_current))
        throw std::invalid_argument("select: non-finite objective value");
    return f_candidate < f_current;
}

void step_generation(Population& pop, const DeParams& params, CountingObjective& objective,
                     Rng& rng, GenerationRecord* record) {
    check_params(params, pop.size());
    const std::size_t n = pop.size();
    const std::size_t d = pop.dim();
    const SearchDomain box = SearchDomain::unit(d);
    if (record) {
        record->f_weight = params.f;
        record->cr = params.cr;
        record->trials.assign(n, TrialRecord{});
    }

    std::vector<std::vector<double>> new_x(n), new_v(n);
    std::vector<double> new_f(n);
    std::vector<bool> accepted(n, false);

    for (std::size_t i = 0; i < n; ++i) {
        TrialRecord local;
        TrialRecord* rec = record ? &record->trials[i] : &local;
        const std::vector<double> u = generate_trial(pop, i, params, rng, rec);

        std::vector<double> vprime(d);
        double norm2 = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            vprime[j] = (1.0 - params.c) * pop.agents[i].v[j] + u[j];
            norm2 += vprime[j] * vprime[j];
        }
        const double norm = std::sqrt(norm2);
        const double nu = (norm > params.v_max) ? params.v_max / norm : 1.0;

        std::vector<double> cand(d);
        for (std::size_t j = 0; j < d; ++j) cand[j] = pop.agents[i].x[j] + nu * vprime[j];
        rec->nu = nu;
        rec->candidate_pre = cand;
        project_into_domain(cand, box, rng);
        rec->projected = cand != rec->candidate_pre;
        rec->candidate = cand;

        const double fc = objective(cand);
        rec->f_candidate = fc;
        // a non-finite candidate value counts as a rejection
        accepted[i] = std::isfinite(fc) && fc < pop.agents[i].f;
        rec->accepted = accepted[i];
        new_x[i] = std::move(cand);
        new_v[i] = std::move(vprime);
        new_f[i] = fc;
    }

    for (std::size_t i = 0; i < n; ++i) {
        pop.agents[i].v = std::move(new_v[i]); // velocity updates unconditionally
        if (accepted[i]) {
            pop.agents[i].x = std::move(new_x[i]);
            pop.agents[i].f = new_f[i];
        }
    }
    ++pop.generation;
}

double max_pairwise_distance(const std::vector<std::vector<double>>& points) {
    double worst = 0.0;
    for (std::size_t a = 0; a + 1 < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            double s = 0.0;
            for (std::size_t j = 0; j < points[a].size(); ++j) {
                const double t = points[a][j] - points[b][j];
                s += t * t;
            }
            worst = std::max(worst, s);
        }
    return std::sqrt(worst);
}

double contraction_radius(const Population& pop) {
    double worst = 0.0;
    const auto& a = pop.agents;
    for (std::size_t p = 0; p + 1 < a.size(); ++p)
        for (std::size_t q = p + 1; q < a.size(); ++q) {
            double s = 0.0;
            for (std::size_t j = 0; j < a[p].x.size(); ++j) {
                const double t = a[p].x[j] - a[q].x[j];
                s += t * t;
            }
            worst = std::max(worst, s);
        }
    return std::sqrt(worst);
}

CollapseProbability collapse_probability(int n_pop, double cr, int d, long k_h) {
    if (n_pop < 2) throw std::invalid_argument("n_pop < 2");
    if (d < 1) throw std::invalid_argument("d < 1");
    if (!(cr >= 0.0 && cr <= 1.0)) throw std::invalid_argument("cr outside [0,1]");
    if (k_h < 0) throw std::invalid_argument("negative horizon");
    CollapseProbability out;
    const double per_agent = (1.0 / n_pop) * std::pow(cr, d - 1);
    out.per_generation = std::pow(per_agent, n_pop - 1);
    // 1-(1-p)^k without cancellation for p far below double precision
    if (k_h == 0 || out.per_generation == 0.0)
        out.within_horizon = 0.0;
    else if (out.per_generation >= 1.0)
        out.within_horizon = 1.0;
    else
        out.within_horizon =
            -std::expm1(static_cast<double>(k_h) * std::log1p(-out.per_generation));
    return out;
}

Population init_population(int n_pop, std::size_t d, CountingObjective& objective, Rng& rng) {
    if (n_pop < 2) throw std::invalid_argument("n_pop < 2");
    if (d == 0) throw std::invalid_argument("dimension zero");
    Population pop;
    pop.agents.resize(static_cast<std::size_t>(n_pop));
    for (auto& a : pop.agents) {
        a.x.resize(d);
        for (auto& c : a.x) c = rng.uniform01();
        a.v.assign(d, 0.0);
        a.f = objective(a.x);
    }
    pop.rho_a_max = contraction_radius(pop);
    return pop;
}

RunReport run_de(CountingObjective& objective, std::size_t d, int n_pop, const DeParams& params,
                 long budget, Rng& rng) {
    check_params(params, static_cast<std::size_t>(n_pop));
    if (budget < n_pop) throw std::invalid_argument("budget smaller than one generation");
    RunReport report;
    Population pop = init_population(n_pop, d, objective, rng);
    report.trace.push_back({0, objective.count(), objective.best_f(), contraction_radius(pop)});
    while (objective.count() < budget) {
        step_generation(pop, params, objective, rng);
        report.trace.push_back(
            {pop.generation, objective.count(), objective.best_f(), contraction_radius(pop)});
    }
    report.best_x = objective.best_x();
    report.best_f = objective.best_f();
    report.evaluations = objective.count();
    report.nonfinite_evaluations = objective.nonfinite_count();
    return report;
}

} // namespace idea
