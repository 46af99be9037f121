#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace idea {

using Objective = std::function<double(const std::vector<double>&)>;

// Shared evaluation meter. Every objective call made by an optimizer goes
// through one of these so DE generations, local searches and restarts all
// charge the same budget, and the best point ever evaluated is tracked in
// one place.
class CountingObjective {
public:
    explicit CountingObjective(Objective fn) : fn_(std::move(fn)) {}

    double operator()(const std::vector<double>& x) {
        const double f = fn_(x);
        ++count_;
        if (!std::isfinite(f)) {
            ++nonfinite_;
        } else if (f < best_f_) {
            best_f_ = f;
            best_x_ = x;
        }
        return f;
    }

    long count() const { return count_; }
    long nonfinite_count() const { return nonfinite_; }
    double best_f() const { return best_f_; }
    const std::vector<double>& best_x() const { return best_x_; }

private:
    Objective fn_;
    long count_ = 0;
    long nonfinite_ = 0;
    double best_f_ = std::numeric_limits<double>::infinity();
    std::vector<double> best_x_;
};

} // namespace idea
