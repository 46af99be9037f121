#include "idea/inflation.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <stdexcept>

#include "idea/local_search.hpp"

namespace idea {

namespace {

double dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
    return std::sqrt(s);
}

void check_idea_params(const IdeaParams& p) {
    if (!(p.tol_conv > 0.0 && p.tol_conv < 1.0))
        throw std::invalid_argument("tol_conv outside (0,1)");
    if (!(p.delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (p.delta_c < 0.0) throw std::invalid_argument("delta_c negative");
    if (p.n_pop < 2) throw std::invalid_argument("n_pop < 2");
    if (p.max_generations_per_epoch < 1)
        throw std::invalid_argument("generation cap below 1");
    if (p.local_budget_per_dim < 1) throw std::invalid_argument("local budget below 1");
}

} // namespace

Population bubble_restart(const std::vector<double>& center, double delta, int n_pop,
                          CountingObjective& objective, Rng& rng) {
    if (!(delta > 0.0)) throw std::invalid_argument("bubble delta must be positive");
    const std::size_t d = center.size();
    Population pop;
    pop.agents.resize(static_cast<std::size_t>(n_pop));
    for (auto& a : pop.agents) {
        a.x.resize(d);
        for (std::size_t j = 0; j < d; ++j) {
            const double lo = std::max(0.0, center[j] - delta);
            const double hi = std::min(1.0, center[j] + delta);
            a.x[j] = lo + rng.uniform01() * (hi - lo);
        }
        a.v.assign(d, 0.0);
        a.f = objective(a.x);
    }
    pop.rho_a_max = contraction_radius(pop);
    return pop;
}

std::vector<std::vector<double>> cluster_archive(const Archive& archive, double radius) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < archive.records.size(); ++i)
        if (!archive.records[i].degenerate) members.push_back(i);
    if (members.empty()) return {};

    // union-find over records, merging pairs closer than the radius
    std::vector<std::size_t> parent(members.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (std::size_t a = 0; a + 1 < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (dist(archive.records[members[a]].x, archive.records[members[b]].x) < radius) {
                const std::size_t ra = find(a), rb = find(b);
                if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
            }

    std::vector<std::vector<double>> centers;
    std::vector<long> count;
    std::vector<long> root_to_center(members.size(), -1);
    for (std::size_t a = 0; a < members.size(); ++a) {
        const std::size_t r = find(a);
        const auto& x = archive.records[members[a]].x;
        if (root_to_center[r] < 0) {
            root_to_center[r] = static_cast<long>(centers.size());
            centers.push_back(x);
            count.push_back(1);
        } else {
            auto& c = centers[static_cast<std::size_t>(root_to_center[r])];
            for (std::size_t j = 0; j < x.size(); ++j) c[j] += x[j];
            ++count[static_cast<std::size_t>(root_to_center[r])];
        }
    }
    for (std::size_t k = 0; k < centers.size(); ++k)
        for (auto& c : centers[k]) c /= static_cast<double>(count[k]);
    return centers;
}

Population global_restart(std::size_t d, const std::vector<std::vector<double>>& baricenters,
                          double exclusion, int n_pop, int attempts,
                          CountingObjective& objective, Rng& rng) {
    if (attempts < 1) throw std::invalid_argument("attempts below 1");
    Population pop;
    pop.agents.resize(static_cast<std::size_t>(n_pop));
    for (auto& a : pop.agents) {
        std::vector<double> best_draw;
        double best_min_dist = -1.0;
        for (int t = 0; t < attempts; ++t) {
            std::vector<double> x(d);
            for (auto& c : x) c = rng.uniform01();
            double min_dist = std::numeric_limits<double>::infinity();
            for (const auto& b : baricenters) min_dist = std::min(min_dist, dist(x, b));
            if (min_dist > best_min_dist) {
                best_min_dist = min_dist;
                best_draw = std::move(x);
            }
            if (best_min_dist > exclusion) break;
        }
        if (best_min_dist <= exclusion && !baricenters.empty())
            std::cerr << "warning: global restart could not clear the exclusion "
                         "distance after "
                      << attempts << " draws; keeping the farthest draw\n";
        a.x = std::move(best_draw);
        a.v.assign(d, 0.0);
        a.f = objective(a.x);
    }
    pop.rho_a_max = contraction_radius(pop);
    return pop;
}

IdeaResult run_idea(CountingObjective& objective, std::size_t d, const IdeaParams& params,
                    long budget, Rng& rng) {
    check_idea_params(params);
    if (budget < params.n_pop) throw std::invalid_argument("budget smaller than one generation");

    IdeaResult out;
    RunReport& report = out.report;
    Archive& archive = out.archive;

    Population pop = init_population(params.n_pop, d, objective, rng);
    report.trace.push_back({0, objective.count(), objective.best_f(), contraction_radius(pop)});

    double f_min = std::numeric_limits<double>::infinity();
    long iun = 0;
    long gens_in_epoch = 0;
    long generation = 0;
    const long ls_budget = params.local_budget_per_dim * static_cast<long>(d);

    while (objective.count() < budget) {
        step_generation(pop, params.de, objective, rng);
        ++generation;
        ++gens_in_epoch;
        const double rho = contraction_radius(pop);
        pop.rho_a_max = std::max(pop.rho_a_max, rho);
        report.trace.push_back({generation, objective.count(), objective.best_f(), rho});

        const bool contracted = rho < params.tol_conv * pop.rho_a_max ||
                                gens_in_epoch >= params.max_generations_per_epoch;
        if (!contracted) continue;
        if (objective.count() >= budget) break;

        // contraction event: refine the incumbent, archive the minimum
        const std::size_t bi = pop.best_index();
        const std::vector<double> x_best = pop.agents[bi].x;
        const double f_best_agent = pop.agents[bi].f;

        MinimumRecord rec = minimize_local(objective, x_best, ls_budget, params.local_tol);
        rec.origin = MinimumOrigin::idea_contraction;
        rec.found_at = objective.count();
        ++report.local_searches;
        archive.add(rec);
        report.trace.push_back(
            {generation, objective.count(), objective.best_f(), rho});

        const double f_event = std::min(rec.f, f_best_agent);
        const std::vector<double>& center = rec.f <= f_best_agent ? rec.x : x_best;
        if (f_event < f_min) {
            f_min = f_event;
            iun = 0;
        } else {
            ++iun;
        }

        if (objective.count() >= budget) break;

        if (params.iun_max < 0 || iun <= params.iun_max) {
            pop = bubble_restart(center, params.delta, params.n_pop, objective, rng);
            ++report.restarts_bubble;
        } else {
            const auto baricenters = cluster_archive(archive, params.delta_c);
            pop = global_restart(d, baricenters, params.delta_c, params.n_pop,
                                 params.restart_attempts, objective, rng);
            ++report.restarts_global;
        }
        gens_in_epoch = 0;
        report.trace.push_back(
            {generation, objective.count(), objective.best_f(), contraction_radius(pop)});
    }

    report.best_x = objective.best_x();
    report.best_f = objective.best_f();
    report.evaluations = objective.count();
    report.nonfinite_evaluations = objective.nonfinite_count();
    return out;
}

} // namespace idea
