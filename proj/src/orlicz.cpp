#include "logconcave/orlicz.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "logconcave/quadrature.hpp"

namespace logconcave {

namespace {

constexpr int kMaxIterations = 200;

// E psi(|X - center| / t) for a grid density; the |x - center| kink is passed
// to the quadrature as a breakpoint.
double mean_psi(const GridDensity& w, const YoungFunction& psi, double center, double t) {
    const double cut[] = {center};
    return expectation(
        w, [&](double x) { return psi(std::abs(x - center) / t); }, cut, {1e-12, 1e-10, 4000});
}

double mean_psi(const DiscretePMF& w, const YoungFunction& psi, double center, double t) {
    return expectation(w, [&](double x) { return psi(std::abs(x - center) / t); });
}

template <class W>
double orlicz_norm_impl(const W& w, const YoungFunction& psi, double tol, double center,
                        double abs_radius) {
    if (!(tol > 0.0)) throw std::invalid_argument("orlicz_norm: tol must be positive");
    if (abs_radius == 0.0) return 0.0;  // W is identically center

    auto eval = [&](double t) {
        const double v = mean_psi(w, psi, center, t);
        if (std::isnan(v)) throw std::runtime_error("orlicz_norm: E psi evaluated to NaN");
        return v;
    };

    // bracket: double hi from 1 until E psi <= 1, halve lo until > 1
    double hi = 1.0, vhi = eval(hi);
    int it = 0;
    while (vhi > 1.0) {
        if (++it > kMaxIterations || !std::isfinite(vhi))
            throw std::runtime_error("orlicz_norm: E psi(|W|/t) does not drop below 1 (divergent)");
        hi *= 2.0;
        vhi = eval(hi);
    }
    double lo = hi * 0.5, vlo = eval(lo);
    it = 0;
    while (vlo <= 1.0) {
        if (std::abs(vlo - 1.0) <= tol) return lo;
        if (++it > kMaxIterations) return 0.0;  // mass within the dead band of center
        hi = lo;
        vhi = vlo;
        lo *= 0.5;
        vlo = eval(lo);
    }

    if (std::abs(vhi - 1.0) <= tol) return hi;
    for (it = 0; it < kMaxIterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double vm = eval(mid);
        // monotonicity of t -> E psi(|W|/t) on the bracket
        if (vm > vlo * (1.0 + 1e-9) || vm < vhi * (1.0 - 1e-9) - 1e-12)
            throw std::runtime_error("orlicz_norm: monotonicity violated during bisection");
        if (std::abs(vm - 1.0) <= tol) return mid;
        if (vm > 1.0) {
            lo = mid;
            vlo = vm;
        } else {
            hi = mid;
            vhi = vm;
        }
        if (hi - lo <= 1e-15 * hi)
            throw std::runtime_error("orlicz_norm: tolerance unreachable at floating point resolution");
    }
    throw std::runtime_error("orlicz_norm: bisection failed to converge");
}

}  // namespace

YoungFunction::YoungFunction(std::string descriptor, std::function<double(double)> fn)
    : descriptor_(std::move(descriptor)), fn_(std::move(fn)) {
    if (!fn_) throw std::invalid_argument("YoungFunction: empty function");
    if (std::abs(fn_(0.0)) > 1e-12) throw std::invalid_argument("YoungFunction: psi(0) != 0");
    const int n = 200;
    const double h = 10.0 / n;
    double prev = fn_(0.0);
    double prev_diff = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= n; ++i) {
        const double v = fn_(i * h);
        const double diff = v - prev;
        if (!(diff > 0.0)) throw std::invalid_argument("YoungFunction: not strictly increasing on [0,10]");
        if (diff < prev_diff - 1e-9 * std::abs(prev_diff))
            throw std::invalid_argument("YoungFunction: not convex on [0,10]");
        prev = v;
        prev_diff = diff;
    }
}

YoungFunction YoungFunction::power(double p) {
    if (!(p >= 1.0)) throw std::domain_error("YoungFunction::power: requires p >= 1");
    return YoungFunction("psi_p(x)=x^" + std::to_string(p),
                         [p](double x) { return std::pow(x, p); });
}

double orlicz_norm(const GridDensity& w, const YoungFunction& psi, double tol, double center) {
    const double radius = std::max(std::abs(w.support_lo() - center), std::abs(w.support_hi() - center));
    return orlicz_norm_impl(w, psi, tol, center, radius);
}

double orlicz_norm(const DiscretePMF& w, const YoungFunction& psi, double tol, double center) {
    double radius = 0.0;
    const auto& weights = w.weights();
    for (size_t i = 0; i < weights.size(); ++i)
        if (weights[i] > 0.0)
            radius = std::max(radius,
                              std::abs(static_cast<double>(w.offset() + static_cast<std::int64_t>(i)) - center));
    return orlicz_norm_impl(w, psi, tol, center, radius);
}

std::int64_t subfactorial(int n) {
    if (n < 0) throw std::domain_error("subfactorial: requires n >= 0");
    if (n > 20) throw std::overflow_error("subfactorial: exact value exceeds 64-bit range for n > 20");
    std::int64_t v = 1;  // !0
    for (int i = 1; i <= n; ++i) v = i * v + (i % 2 == 0 ? 1 : -1);
    return v;
}

double subfactorial_integral(int n) {
    if (n < 0) throw std::domain_error("subfactorial_integral: requires n >= 0");
    const double upper = 80.0 + 6.0 * n;  // residual tail is far below double precision
    const double cut[] = {1.0};
    return integrate_split([n](double x) { return std::pow(x - 1.0, n) * std::exp(-x); }, 0.0, upper,
                           cut, {1e-13, 1e-11, 4000});
}

AcmBounds acm_bounds(double p) {
    if (!(p >= 1.0)) throw std::domain_error("acm_bounds: requires p >= 1");
    AcmBounds b;
    b.lower = 1.0 / (std::pow(2.0, p) * (p + 1.0));
    const double ip = std::round(p);
    if (p == ip && ip <= 20.0) {
        const int n = static_cast<int>(ip);
        double fact = 1.0;
        for (int i = 2; i <= n; ++i) fact *= i;
        const double fe = fact / std::exp(1.0);
        const double sub = static_cast<double>(subfactorial(n));
        b.upper = n % 2 == 0 ? sub : 2.0 * fe - sub;
    } else {
        const double tail = integrate([p](double x) { return std::pow(1.0 - x, p) * std::exp(-x); },
                                      0.0, 1.0, {1e-13, 1e-11, 2000});
        b.upper = std::tgamma(1.0 + p) / std::exp(1.0) + tail;
    }
    return b;
}

}  // namespace logconcave
