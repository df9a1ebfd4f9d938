#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace logconcave {

// Adaptive Gauss-Kronrod 7/15 integration on a finite interval.
// Defaults match the tolerances used throughout the library: the sharp-constant
// checks need quadrature noise well below 1e-6.
struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_intervals = 4000;
};

namespace detail {

// Kronrod abscissae/weights on [-1,1]; column 0 = node, 1 = Gauss-7 weight,
// 2 = Kronrod-15 weight. Nodes are symmetric about 0.
inline constexpr double kGK15[8][3] = {
    {0.000000000000000000, 0.417959183673469388, 0.209482141084727828},
    {0.405845151377397167, 0.381830050505118945, 0.190350578064785410},
    {0.741531185599394440, 0.279705391489276668, 0.140653259715525919},
    {0.949107912342758525, 0.129484966168869693, 0.063092092629978553},
    {0.207784955007898468, 0.0,                  0.204432940075298892},
    {0.586087235467691130, 0.0,                  0.169004726639267903},
    {0.864864423359769073, 0.0,                  0.104790010322250184},
    {0.991455371120812639, 0.0,                  0.022935322010529225},
};

template <class F>
double gk15(const F& f, double a, double b, double& err) {
    const double c = 0.5 * (a + b);
    const double m = 0.5 * (b - a);
    const double f0 = f(c);
    double g7 = kGK15[0][1] * f0;
    double k15 = kGK15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = m * kGK15[i][0];
        const double fi = f(c + dx) + f(c - dx);
        g7 += kGK15[i][1] * fi;
        k15 += kGK15[i][2] * fi;
    }
    g7 *= m;
    k15 *= m;
    err = std::pow(200.0 * std::abs(g7 - k15), 1.5);
    return k15;
}

}  // namespace detail

// Integrates f over [a, b]. Throws std::runtime_error if the interval budget
// is exhausted before the tolerance is met.
template <class F>
double integrate(const F& f, double a, double b, const QuadratureOptions& opt = {}) {
    if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
    if (a == b) return 0.0;

    struct Seg { double a, b, val, err; };
    std::vector<Seg> segs;
    double err0 = 0.0;
    const double v0 = detail::gk15(f, a, b, err0);
    segs.push_back({a, b, v0, err0});

    // sums are recomputed fresh each pass: incremental updates drift once the
    // initial error estimate dwarfs the final tolerance
    while (true) {
        double total = 0.0, total_err = 0.0;
        size_t worst = 0;
        for (size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].val;
            total_err += segs[i].err;
            if (segs[i].err > segs[worst].err) worst = i;
        }
        if (total_err <= opt.abs_tol || total_err <= opt.rel_tol * std::abs(total)) return total;
        if (static_cast<int>(segs.size()) >= opt.max_intervals)
            throw std::runtime_error("integrate: interval budget exhausted");
        const Seg s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b) return total;  // floating point resolution
        double el = 0.0, er = 0.0;
        const double vl = detail::gk15(f, s.a, mid, el);
        const double vr = detail::gk15(f, mid, s.b, er);
        segs[worst] = {s.a, mid, vl, el};
        segs.push_back({mid, s.b, vr, er});
    }
}

// Integrates f over [a, b] after splitting at the given interior breakpoints
// (integrand kinks, support edges). Breakpoints outside (a, b) are ignored.
template <class F>
double integrate_split(const F& f, double a, double b, std::span<const double> breakpoints,
                       const QuadratureOptions& opt = {}) {
    std::vector<double> cuts{a};
    for (double c : breakpoints)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i + 1] > cuts[i]) total += integrate(f, cuts[i], cuts[i + 1], opt);
    return total;
}

}  // namespace logconcave
