#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "idea/rng.hpp"

namespace idea {

// Axis-aligned box of admissible solutions. Optimizers run on the unit box;
// physical bounds only appear when decoding a point for the objective.
struct SearchDomain {
    std::vector<double> lower;
    std::vector<double> upper;

    SearchDomain() = default;
    SearchDomain(std::vector<double> lo, std::vector<double> up)
        : lower(std::move(lo)), upper(std::move(up)) {
        if (lower.size() != upper.size())
            throw std::invalid_argument("domain bound sizes differ");
        for (std::size_t j = 0; j < lower.size(); ++j)
            if (!(lower[j] < upper[j]))
                throw std::invalid_argument("domain bounds not strictly ordered at " +
                                            std::to_string(j));
    }

    std::size_t dim() const { return lower.size(); }

    static SearchDomain unit(std::size_t d) {
        return SearchDomain(std::vector<double>(d, 0.0), std::vector<double>(d, 1.0));
    }

    bool contains(const std::vector<double>& x, double tol = 0.0) const {
        if (x.size() != dim()) return false;
        for (std::size_t j = 0; j < dim(); ++j)
            if (x[j] < lower[j] - tol || x[j] > upper[j] + tol) return false;
        return true;
    }
};

// physical -> unit box; boundary values map to 0/1 exactly
inline std::vector<double> normalize(const std::vector<double>& x, const SearchDomain& dom) {
    if (x.size() != dom.dim()) throw std::invalid_argument("normalize: dimension mismatch");
    std::vector<double> u(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double w = dom.upper[j] - dom.lower[j];
        if (x[j] < dom.lower[j] - 1e-9 * w || x[j] > dom.upper[j] + 1e-9 * w)
            throw std::domain_error("normalize: component " + std::to_string(j) +
                                    " outside bounds");
        u[j] = (x[j] - dom.lower[j]) / w;
        if (u[j] < 0.0) u[j] = 0.0;
        if (u[j] > 1.0) u[j] = 1.0;
    }
    return u;
}

inline std::vector<double> denormalize(const std::vector<double>& u, const SearchDomain& dom) {
    if (u.size() != dom.dim()) throw std::invalid_argument("denormalize: dimension mismatch");
    std::vector<double> x(u.size());
    for (std::size_t j = 0; j < u.size(); ++j)
        x[j] = dom.lower[j] + u[j] * (dom.upper[j] - dom.lower[j]);
    return x;
}

// Out-of-box components are resampled uniformly inside their bound interval
// (not clipped); in-bounds components are left untouched.
inline void project_into_domain(std::vector<double>& x, const SearchDomain& dom, Rng& rng) {
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < dom.lower[j] || x[j] > dom.upper[j])
            x[j] = dom.lower[j] + rng.uniform01() * (dom.upper[j] - dom.lower[j]);
}

} // namespace idea
