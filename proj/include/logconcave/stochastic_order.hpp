#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logconcave/discrete_pmf.hpp"
#include "logconcave/grid_density.hpp"

namespace logconcave {

// Sign-change structure of phi = g2 - g1. Values with |phi| <= eps count as
// zero and never terminate a sign run; locations are strictly increasing and
// the sign alternates between consecutive crossings by construction.
struct CrossingPattern {
    std::vector<double> locations;
    int initial_sign = 0;  // first nonzero sign scanning left to right, 0 if none
    int final_sign = 0;    // last nonzero sign

    size_t count() const { return locations.size(); }
};

enum class Verdict { certified, refuted, inconclusive };

// Certificate for X1 <=_n X2 (dominance over functions with nonnegative n-th
// distributional derivative): phi = g2 - g1 must change sign exactly n times
// with phi >= 0 outside the outermost crossings, and the first n-1 moments
// must match. Identical inputs (no crossings, phi == 0 within the dead band)
// certify degenerately.
struct OrderCertificate {
    int order_n = 0;
    CrossingPattern crossings;
    std::vector<std::pair<int, double>> moment_gaps;  // (k, |E X1^k - E X2^k|) for k < n
    Verdict verdict = Verdict::inconclusive;
    std::string detail;
};

// Test-function class for dominance checks. The banks are finite and fixed
// given the support: certification is the sound path, the banks only falsify.
struct OrderClass {
    enum class Kind { increasing, convex, increasing_convex, nth_derivative };
    Kind kind = Kind::increasing;
    int n = 1;  // order for nth_derivative (supported up to 4)

    static OrderClass increasing() { return {Kind::increasing, 1}; }
    static OrderClass convex() { return {Kind::convex, 2}; }
    static OrderClass increasing_convex() { return {Kind::increasing_convex, 2}; }
    static OrderClass nth(int n) { return {Kind::nth_derivative, n}; }
};

struct OrderCheckReport {
    double max_violation = 0.0;  // max over the bank of E f(X1) - E f(X2)
    std::string worst_function;
    int bank_size = 0;
};

struct OrderCheckOptions {
    // When set, bank functions are applied to |x - center| instead of x
    // (checks like |X - EX| <=_icx |Z - EZ| without folding densities).
    std::optional<double> abs_center1;
    std::optional<double> abs_center2;
};

// eps < 0 selects the default dead band 1e-12 * max|phi|. Crossing locations
// between grid evaluations are refined by bisection to 1e-10 in x.
CrossingPattern crossing_pattern(const GridDensity& g1, const GridDensity& g2, double eps = -1.0);
CrossingPattern crossing_pattern(const DiscretePMF& g1, const DiscretePMF& g2, double eps = -1.0);

OrderCertificate certify_order(const GridDensity& g1, const GridDensity& g2, int n, double tol = 1e-7);
OrderCertificate certify_order(const DiscretePMF& g1, const DiscretePMF& g2, int n, double tol = 1e-7);

OrderCheckReport empirical_order_check(const GridDensity& g1, const GridDensity& g2, OrderClass cls,
                                       const OrderCheckOptions& opt = {});
OrderCheckReport empirical_order_check(const DiscretePMF& g1, const DiscretePMF& g2, OrderClass cls,
                                       const OrderCheckOptions& opt = {});

// Coefficients (ascending powers) of the degree <= n-1 polynomial matching f
// at the given strictly increasing nodes.
std::vector<double> lagrange_interpolant(const std::function<double(double)>& f,
                                         std::span<const double> nodes);

double poly_eval(std::span<const double> coeffs, double x);

}  // namespace logconcave
