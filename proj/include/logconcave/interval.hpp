#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logconcave {

// Closed interval [lo, hi]; empty intervals are encoded as lo == hi.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double measure() const { return hi - lo; }
    bool empty() const { return hi <= lo; }
    double center() const { return 0.5 * (lo + hi); }
    double half_width() const { return 0.5 * (hi - lo); }
};

// Lebesgue measure of [-a,a] ∩ [x-b, x+b] for a, b > 0.
// Piecewise in |x|: 2 min(a,b) up to |b-a|, then a+b-|x| down to 0 at a+b.
inline double interval_overlap(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("interval_overlap: requires a, b > 0");
    const double ax = std::abs(x);
    if (ax <= std::abs(b - a)) return 2.0 * std::min(a, b);
    if (ax >= a + b) return 0.0;
    return a + b - ax;
}

}  // namespace logconcave
