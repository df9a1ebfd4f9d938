#pragma once

// Independent test oracles: brute-force series, composite Simpson quadrature,
// grid-scan set measures, derangement enumeration, central differences. These
// deliberately avoid the library's own closed forms and quadrature.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracles {

// Composite Simpson on [a, b] with extra breakpoints; n panels per segment.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      std::vector<double> breakpoints = {}, int panels = 4000) {
    breakpoints.push_back(a);
    breakpoints.push_back(b);
    std::sort(breakpoints.begin(), breakpoints.end());
    double total = 0.0;
    for (size_t s = 0; s + 1 < breakpoints.size(); ++s) {
        const double lo = std::max(a, breakpoints[s]);
        const double hi = std::min(b, breakpoints[s + 1]);
        if (!(hi > lo)) continue;
        const double h = (hi - lo) / (2 * panels);
        double acc = f(lo) + f(hi);
        for (int i = 1; i < 2 * panels; ++i) acc += f(lo + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
        total += acc * h / 3.0;
    }
    return total;
}

// Measure of {x in [lo, hi] : pdf(x) > t}: coarse scan plus bisection
// refinement of every indicator flip.
inline double measure_above_threshold(const std::function<double(double)>& pdf, double lo, double hi,
                                      double t, int scan_points = 100001) {
    auto above = [&](double x) { return pdf(x) > t; };
    std::vector<std::pair<double, double>> segments;
    double seg_start = 0.0;
    bool inside = false;
    double prev_x = lo;
    bool prev_above = above(lo);
    if (prev_above) {
        inside = true;
        seg_start = lo;
    }
    for (int i = 1; i < scan_points; ++i) {
        const double x = lo + (hi - lo) * i / (scan_points - 1);
        const bool now = above(x);
        if (now != prev_above) {
            double a = prev_x, b = x;
            for (int it = 0; it < 100 && b - a > 1e-13; ++it) {
                const double m = 0.5 * (a + b);
                if (above(m) == prev_above)
                    a = m;
                else
                    b = m;
            }
            const double boundary = 0.5 * (a + b);
            if (now) {
                inside = true;
                seg_start = boundary;
            } else {
                segments.emplace_back(seg_start, boundary);
                inside = false;
            }
        }
        prev_x = x;
        prev_above = now;
    }
    if (inside) segments.emplace_back(seg_start, hi);
    double total = 0.0;
    for (auto [a, b] : segments) total += b - a;
    return total;
}

// Same scan, but measuring {pdf > t} ∩ [-a, a]^c.
inline double tail_measure_above_threshold(const std::function<double(double)>& pdf, double lo,
                                           double hi, double t, double a, int scan_points = 100001) {
    double total = 0.0;
    if (lo < -a) total += measure_above_threshold(pdf, lo, std::min(hi, -a), t, scan_points);
    if (hi > a) total += measure_above_threshold(pdf, std::max(lo, a), hi, t, scan_points);
    return total;
}

// Brute-force moments of the two-sided geometric pmf with mode 0: sums
// C p^{|n|} (n <= 0), C q^n (n >= 0) with explicit truncation.
struct DiscreteBrute {
    double mass = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    double sigma4 = 0.0;
};

inline DiscreteBrute discrete_brute_force(double p, double q, int terms = 200000) {
    const double c = (1.0 - p) * (1.0 - q) / (1.0 - p * q);
    long double mass = c, m1 = 0.0;
    for (int k = 1; k <= terms; ++k) {
        const long double wl = p == 0.0 ? 0.0L : c * std::pow((long double)p, k);
        const long double wr = q == 0.0 ? 0.0L : c * std::pow((long double)q, k);
        mass += wl + wr;
        m1 += -static_cast<long double>(k) * wl + static_cast<long double>(k) * wr;
        if (wl + wr < 1e-24L && k > 8) break;
    }
    const long double mu = m1 / mass;
    long double v = (0.0L - mu) * (0.0L - mu) * c;
    long double s4 = std::pow(std::abs(0.0L - mu), 4.0L) * c;
    for (int k = 1; k <= terms; ++k) {
        const long double wl = p == 0.0 ? 0.0L : c * std::pow((long double)p, k);
        const long double wr = q == 0.0 ? 0.0L : c * std::pow((long double)q, k);
        const long double dl = -static_cast<long double>(k) - mu;
        const long double dr = static_cast<long double>(k) - mu;
        v += dl * dl * wl + dr * dr * wr;
        s4 += dl * dl * dl * dl * wl + dr * dr * dr * dr * wr;
        if ((std::abs(dl * dl * dl * dl) + 1.0L) * (wl + wr) < 1e-24L && k > 8) break;
    }
    DiscreteBrute out;
    out.mass = static_cast<double>(mass);
    out.mean = static_cast<double>(mu);
    out.variance = static_cast<double>(v / mass);
    out.sigma4 = static_cast<double>(s4 / mass);
    return out;
}

// Number of fixed-point-free permutations of n elements, by enumeration.
inline std::int64_t derangements_by_enumeration(int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    if (n == 0) return 1;
    std::int64_t count = 0;
    do {
        bool fixed = false;
        for (int i = 0; i < n; ++i)
            if (perm[static_cast<size_t>(i)] == i) {
                fixed = true;
                break;
            }
        if (!fixed) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracles
