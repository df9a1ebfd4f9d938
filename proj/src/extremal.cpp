#include "logconcave/extremal.hpp"

#include <cmath>
#include <stdexcept>

namespace logconcave {

namespace {

double clamp_scale(double lambda) {
    if (lambda < -1e-12)
        throw std::invalid_argument("majorant: negative scale; input density is not log-concave");
    return std::max(lambda, 0.0);
}

}  // namespace

AsymLaplaceC majorant(const GridDensity& f, double t) {
    const double ft = f.pdf(t);
    if (!(ft > 0.0)) throw std::domain_error("majorant: f(t) = 0, no bounded majorant at t");
    const double mu = moments(f, 1.0).mean;
    const double inv = 1.0 / ft;
    const double lambda2 = clamp_scale(0.5 * (inv + (mu - t)));
    const double lambda1 = clamp_scale(0.5 * (inv - (mu - t)));
    return AsymLaplaceC(lambda1, lambda2, t);
}

AsymLaplaceC majorant_via_bisection(const GridDensity& f, double t, double mean_tol) {
    const double ft = f.pdf(t);
    if (!(ft > 0.0)) throw std::domain_error("majorant: f(t) = 0, no bounded majorant at t");
    const double mu = moments(f, 1.0).mean;
    const double inv = 1.0 / ft;

    // family lambda(s) = (s, 1/f(t) - s) centered at t; its mean decreases
    // continuously from t + 1/f(t) at s = 0 to t - 1/f(t) at s = 1/f(t).
    auto family_mean = [&](double s) {
        const AsymLaplaceC cand(s, inv - s, t);
        return moments(to_grid(cand, 1e-14), 1.0).mean;  // quadrature, not the closed form
    };

    double lo = 0.0, hi = inv;
    if (mu > family_mean(lo) + mean_tol || mu < family_mean(hi) - mean_tol)
        throw std::invalid_argument("majorant: mean outside the family range; input not log-concave");
    for (int i = 0; i < 200 && hi - lo > mean_tol * std::max(1.0, inv); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (family_mean(mid) > mu)
            lo = mid;
        else
            hi = mid;
    }
    const double s = 0.5 * (lo + hi);
    return AsymLaplaceC(s, inv - s, t);
}

AsymLaplaceD majorant(const DiscretePMF& g, std::int64_t n) {
    const double gn = g.pmf(n);
    if (!(gn > 0.0)) throw std::domain_error("majorant: g(n) = 0, no matching majorant at n");
    const double mu = moments(g, 1.0).mean;
    const AsymLaplaceD centered = solve_pq(gn, mu - static_cast<double>(n));
    return AsymLaplaceD(centered.p(), centered.q(), n);
}

}  // namespace logconcave
