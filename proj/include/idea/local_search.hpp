#pragma once

#include "idea/archive.hpp"
#include "idea/objective.hpp"

namespace idea {

// Bounded Nelder-Mead on the unit box. The initial simplex puts one vertex
// at x0 and offsets each coordinate by `edge` (flipped inward at the
// boundary); every trial vertex is clamped into the box. Stops when the
// simplex diameter falls below tol or the evaluation budget is exhausted,
// whichever comes first. The returned point never has a worse value than x0.
//
// If the objective is non-finite at x0 itself the record comes back with x0
// unchanged and the degenerate flag set; non-finite values seen later are
// ordered as +inf so the simplex retreats from them.
MinimumRecord minimize_local(CountingObjective& objective, const std::vector<double>& x0,
                             long budget, double tol = 1e-8, double edge = 0.05);

} // namespace idea
