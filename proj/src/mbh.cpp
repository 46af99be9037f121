#include "idea/mbh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "idea/local_search.hpp"

namespace idea {

std::vector<double> sample_neighborhood(const std::vector<double>& x, double delta, Rng& rng) {
    if (delta < 0.0) throw std::invalid_argument("delta negative");
    std::vector<double> y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double lo = std::max(0.0, x[j] - delta);
        const double hi = std::min(1.0, x[j] + delta);
        y[j] = lo + rng.uniform01() * (hi - lo);
    }
    return y;
}

MbhResult run_mbh(CountingObjective& objective, std::size_t d, const MbhParams& params,
                  long budget, Rng& rng) {
    if (d == 0) throw std::invalid_argument("dimension zero");
    if (!(params.delta >= 0.0)) throw std::invalid_argument("delta negative");
    const long ls_budget = params.local_budget_per_dim * static_cast<long>(d);
    if (budget < static_cast<long>(d) + 2)
        throw std::invalid_argument("budget below one local search");

    MbhResult out;
    RunReport& report = out.report;

    auto uniform_point = [&]() {
        std::vector<double> x(d);
        for (auto& c : x) c = rng.uniform01();
        return x;
    };
    auto local = [&](const std::vector<double>& x0) {
        MinimumRecord r = minimize_local(objective, x0, ls_budget, params.local_tol);
        r.origin = MinimumOrigin::mbh_sample;
        r.found_at = objective.count();
        ++report.local_searches;
        return r;
    };

    // first incumbent; redraw if the objective is non-finite at the start
    MinimumRecord current;
    do {
        current = local(uniform_point());
    } while (current.degenerate && objective.count() < budget);
    if (!current.degenerate) out.archive.add(current);
    long iteration = 0;
    report.trace.push_back({iteration, objective.count(), objective.best_f(), 0.0});

    long fails = 0;
    while (objective.count() < budget) {
        ++iteration;
        const MinimumRecord rec = local(sample_neighborhood(current.x, params.delta, rng));
        if (!rec.degenerate) out.archive.add(rec);
        if (!rec.degenerate && !current.degenerate && rec.f < current.f) {
            current = rec;
            fails = 0;
        } else {
            ++fails;
        }
        if (params.n_samples > 0 && fails >= params.n_samples &&
            objective.count() < budget) {
            const MinimumRecord fresh = local(uniform_point());
            if (!fresh.degenerate) {
                out.archive.add(fresh);
                current = fresh; // a restart replaces the incumbent unconditionally
            }
            fails = 0;
            ++report.restarts_global;
        }
        report.trace.push_back({iteration, objective.count(), objective.best_f(), 0.0});
    }

    report.best_x = objective.best_x();
    report.best_f = objective.best_f();
    report.evaluations = objective.count();
    report.nonfinite_evaluations = objective.nonfinite_count();
    return out;
}

} // namespace idea
