#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "logconcave/discrete_pmf.hpp"
#include "logconcave/grid_density.hpp"

namespace logconcave {

// Young function: strictly increasing, convex, psi(0) = 0. The constructor
// validates the three properties by sampled finite differences on [0, 10].
class YoungFunction {
public:
    YoungFunction(std::string descriptor, std::function<double(double)> fn);

    // psi_p(x) = x^p for p >= 1; the induced Orlicz norm is the L^p norm.
    static YoungFunction power(double p);

    double operator()(double x) const { return fn_(x); }
    const std::string& descriptor() const { return descriptor_; }

private:
    std::string descriptor_;
    std::function<double(double)> fn_;
};

// ||W||_psi = inf{ t > 0 : E psi(|W - center| / t) <= 1 }, by bisection on t
// (E psi(|W|/t) is non-increasing in t, which the search asserts). Returns 0
// for a variable that is identically center. Throws std::runtime_error when
// the bracket or bisection fails to converge.
double orlicz_norm(const GridDensity& w, const YoungFunction& psi, double tol = 1e-9,
                   double center = 0.0);
double orlicz_norm(const DiscretePMF& w, const YoungFunction& psi, double tol = 1e-9,
                   double center = 0.0);

// Derangement count by the recurrence !n = n !(n-1) + (-1)^n. Exact for
// n <= 20; throws std::overflow_error beyond.
std::int64_t subfactorial(int n);

// The integral form of !n, by adaptive quadrature on a window whose omitted
// tail is negligible at double precision.
double subfactorial_integral(int n);

struct AcmBounds {
    double lower = 0.0;  // 1 / (2^p (p+1)), attained by the uniform
    double upper = 0.0;  // Gamma(1+p)/e + int_0^1 (1-x)^p e^-x dx, attained by the exponential
};

// Sharp bounds on M^p(X) sigma_p(X) for log-concave X. Integer p uses the
// exact closed form n!/e + (-1)^n (!n - n!/e); even p is exactly !p.
AcmBounds acm_bounds(double p);

}  // namespace logconcave
