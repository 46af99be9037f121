#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "idea/de.hpp"

namespace idea {

std::vector<double> generation_spectrum(const GenerationRecord& record, int n_pop) {
    if (record.cr != 1.0)
        throw std::invalid_argument("generation spectrum only defined for cr = 1");
    if (n_pop < 2 || record.trials.size() != static_cast<std::size_t>(n_pop))
        throw std::invalid_argument("record does not match population size");

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n_pop, n_pop);
    const double F = record.f_weight;
    for (int i = 0; i < n_pop; ++i) {
        const TrialRecord& t = record.trials[static_cast<std::size_t>(i)];
        if (!t.accepted) {
            J(i, i) = 1.0;
            continue;
        }
        // accepted row: x_i' = x_i3 + F (x_i2 - x_i1); coincident indices sum
        J(i, t.i3) += 1.0;
        J(i, t.i2) += F;
        J(i, t.i1) -= F;
    }

    Eigen::EigenSolver<Eigen::MatrixXd> solver(J, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalue computation failed");
    std::vector<double> moduli(static_cast<std::size_t>(n_pop));
    for (int i = 0; i < n_pop; ++i) moduli[static_cast<std::size_t>(i)] = std::abs(solver.eigenvalues()[i]);
    std::sort(moduli.begin(), moduli.end(), std::greater<double>());
    return moduli;
}

} // namespace idea
