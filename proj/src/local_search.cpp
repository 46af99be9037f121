#include "idea/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace idea {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Vertex {
    std::vector<double> x;
    double f = kInf;    // raw objective value
    double key = kInf;  // ordering value; +inf when f is non-finite
};

void clamp_unit(std::vector<double>& x) {
    for (auto& c : x) c = std::min(1.0, std::max(0.0, c));
}

double diameter(const std::vector<Vertex>& s) {
    double worst = 0.0;
    for (std::size_t a = 0; a + 1 < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            double acc = 0.0;
            for (std::size_t j = 0; j < s[a].x.size(); ++j) {
                const double t = s[a].x[j] - s[b].x[j];
                acc += t * t;
            }
            worst = std::max(worst, acc);
        }
    return std::sqrt(worst);
}

} // namespace

MinimumRecord minimize_local(CountingObjective& objective, const std::vector<double>& x0,
                             long budget, double tol, double edge) {
    const std::size_t d = x0.size();
    if (d == 0) throw std::invalid_argument("empty start point");
    if (budget < static_cast<long>(d) + 2)
        throw std::invalid_argument("local search budget below d + 2");
    if (!(tol > 0.0) || !(edge > 0.0)) throw std::invalid_argument("tol and edge must be positive");

    long used = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++used;
        return objective(x);
    };

    MinimumRecord out;
    out.x = x0;
    out.f = eval(x0);
    out.evaluations_used = 1;
    if (!std::isfinite(out.f)) {
        out.degenerate = true;
        out.evaluations_used = used;
        return out;
    }

    std::vector<Vertex> simplex;
    simplex.reserve(d + 1);
    simplex.push_back({x0, out.f, out.f});
    for (std::size_t j = 0; j < d && used < budget; ++j) {
        std::vector<double> x = x0;
        x[j] += (x[j] + edge <= 1.0) ? edge : -edge;
        clamp_unit(x);
        const double f = eval(x);
        const double key = std::isfinite(f) ? f : kInf;
        simplex.push_back({std::move(x), f, key});
    }

    auto best_of = [&]() {
        std::size_t b = 0;
        for (std::size_t i = 1; i < simplex.size(); ++i)
            if (simplex[i].key < simplex[b].key) b = i;
        MinimumRecord r;
        r.x = simplex[b].x;
        r.f = simplex[b].f;
        r.evaluations_used = used;
        return r;
    };

    if (simplex.size() < d + 1) return best_of(); // budget ran out mid-build

    const double alpha = 1.0, beta = 2.0, gamma = 0.5, sigma = 0.5;
    while (used < budget) {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex& a, const Vertex& b) { return a.key < b.key; });
        if (diameter(simplex) < tol) break;

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) centroid[j] += simplex[i].x[j];
        for (auto& c : centroid) c /= static_cast<double>(d);

        Vertex& worst = simplex.back();
        auto make = [&](double coef, const std::vector<double>& toward) {
            Vertex v;
            v.x.resize(d);
            for (std::size_t j = 0; j < d; ++j)
                v.x[j] = centroid[j] + coef * (toward[j] - centroid[j]);
            clamp_unit(v.x);
            v.f = eval(v.x);
            v.key = std::isfinite(v.f) ? v.f : kInf;
            return v;
        };

        Vertex refl = make(-alpha, worst.x);
        if (refl.key < simplex.front().key) {
            if (used >= budget) {
                if (refl.key < worst.key) worst = std::move(refl);
                break;
            }
            Vertex expa = make(-alpha * beta, worst.x);
            worst = (expa.key < refl.key) ? std::move(expa) : std::move(refl);
            continue;
        }
        if (refl.key < simplex[d - 1].key) { // better than second worst
            worst = std::move(refl);
            continue;
        }
        if (used >= budget) break;
        const bool outside = refl.key < worst.key;
        Vertex cont = outside ? make(gamma, refl.x) : make(gamma, worst.x);
        if (cont.key < std::min(refl.key, worst.key)) {
            worst = std::move(cont);
            continue;
        }
        // shrink toward the best vertex
        for (std::size_t i = 1; i < simplex.size() && used < budget; ++i) {
            for (std::size_t j = 0; j < d; ++j)
                simplex[i].x[j] =
                    simplex[0].x[j] + sigma * (simplex[i].x[j] - simplex[0].x[j]);
            clamp_unit(simplex[i].x);
            simplex[i].f = eval(simplex[i].x);
            simplex[i].key = std::isfinite(simplex[i].f) ? simplex[i].f : kInf;
        }
    }
    return best_of();
}

} // namespace idea
