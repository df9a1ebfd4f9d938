#pragma once

#include <functional>
#include <span>
#include <vector>

#include "logconcave/asym_laplace.hpp"
#include "logconcave/quadrature.hpp"

namespace logconcave {

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
    double sigma_p = 0.0;
};

// Piecewise log-linear density on a finite knot grid: log-density is linear
// between consecutive knots, the density is 0 outside [knots.front(),
// knots.back()]. logvals may be -inf at the two endpoint knots only (the
// adjacent piece then carries no mass). Log-concavity is equivalent to the
// slope sequence being non-increasing.
class GridDensity {
public:
    // Validates structure: >= 2 strictly increasing finite knots, matching
    // logvals, -inf nowhere except the endpoints. Does not normalize.
    GridDensity(std::vector<double> knots, std::vector<double> logvals);

    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& logvals() const { return logvals_; }
    size_t piece_count() const { return knots_.size() - 1; }

    double support_lo() const { return knots_.front(); }
    double support_hi() const { return knots_.back(); }

    double pdf(double x) const;
    double operator()(double x) const { return pdf(x); }

    // Exp-linear pieces attain their maximum at a knot.
    double max_density() const;

    // Exact total mass (closed form per piece).
    double integral() const;

    // Shifts logvals so that integral() == 1.
    void normalize();

    // E[(X - center)^power] restricted to [lo, hi] ∩ support, exact closed
    // form, integer power >= 0.
    double piece_power_moment(double lo, double hi, double center, int power) const;

    GridDensity shifted(double c) const;  // density of X + c
    GridDensity scaled(double c) const;   // density of c * X, c > 0

private:
    std::vector<double> knots_;
    std::vector<double> logvals_;
};

bool is_logconcave(const GridDensity& f, double slope_tol = 1e-12);

// Mean, variance and E|X - mean|^p. Integer p uses exact per-piece closed
// forms; fractional p falls back to adaptive quadrature split at the mean.
Moments moments(const GridDensity& f, double p);

// E[h(X)] by adaptive quadrature; extra_breakpoints mark kinks of h.
double expectation(const GridDensity& f, const std::function<double(double)>& h,
                   std::span<const double> extra_breakpoints = {},
                   const QuadratureOptions& opt = {1e-13, 1e-12, 8000});

// Renders the distribution on a truncation window chosen so the omitted tail
// mass is below tail_mass, then renormalizes. The result is exactly
// log-linear on each side of the mode.
GridDensity to_grid(const AsymLaplaceC& d, double tail_mass = 1e-12);

// Uniform density on [lo, hi].
GridDensity uniform_grid(double lo, double hi);

}  // namespace logconcave
