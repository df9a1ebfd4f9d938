#pragma once

#include <cstdint>

#include "logconcave/asym_laplace.hpp"
#include "logconcave/discrete_laplace.hpp"
#include "logconcave/discrete_pmf.hpp"
#include "logconcave/grid_density.hpp"

namespace logconcave {

// The convex-order majorant of a log-concave density f matched at t: the
// unique member of the two-sided exponential family with mode t, density
// f(t) there and the same mean,
//   lambda2 = (1/f(t) + (mu - t)) / 2,   lambda1 = (1/f(t) - (mu - t)) / 2.
// Throws std::domain_error when f(t) = 0 (no bounded majorant) and
// std::invalid_argument when a lambda comes out below -1e-12, which cannot
// happen for genuinely log-concave input.
AsymLaplaceC majorant(const GridDensity& f, double t);

// Diagnostic construction of the same majorant: walks the one-parameter
// family matched at t and solves the mean equation by bisection, evaluating
// candidate means by quadrature on the rendered density. Slower than the
// closed form; agreement within 1e-9 is part of the acceptance suite.
AsymLaplaceC majorant_via_bisection(const GridDensity& f, double t, double mean_tol = 1e-11);

// Discrete analog matched at n: (p, q) from solve_pq(g(n), mu - n),
// re-centered at n. Infeasible solve_pq parameters signal non-log-concave
// input.
AsymLaplaceD majorant(const DiscretePMF& g, std::int64_t n);

}  // namespace logconcave
