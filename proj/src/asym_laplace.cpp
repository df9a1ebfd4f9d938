#include "logconcave/asym_laplace.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace logconcave {

AsymLaplaceC::AsymLaplaceC(double lambda1, double lambda2, double mode)
    : lambda1_(lambda1), lambda2_(lambda2), mode_(mode) {
    if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0) || !(lambda1 + lambda2 > 0.0) ||
        !std::isfinite(lambda1) || !std::isfinite(lambda2) || !std::isfinite(mode))
        throw std::invalid_argument("AsymLaplaceC: requires lambda1, lambda2 >= 0 with lambda1 + lambda2 > 0");
}

double AsymLaplaceC::pdf(double x) const {
    const double u = x - mode_;
    const double M = max_density();
    if (u < 0.0) {
        if (lambda1_ == 0.0) return 0.0;
        return M * std::exp(u / lambda1_);
    }
    if (u > 0.0) {
        if (lambda2_ == 0.0) return 0.0;
        return M * std::exp(-u / lambda2_);
    }
    return M;
}

double AsymLaplaceC::mgf(double t) const {
    const double lo = lambda1_ > 0.0 ? -1.0 / lambda1_ : -std::numeric_limits<double>::infinity();
    const double hi = lambda2_ > 0.0 ? 1.0 / lambda2_ : std::numeric_limits<double>::infinity();
    if (!(t > lo && t < hi)) throw std::domain_error("AsymLaplaceC::mgf: t outside (-1/lambda1, 1/lambda2)");
    return 1.0 / ((1.0 + t * lambda1_) * (1.0 - t * lambda2_));
}

Interval AsymLaplaceC::superlevel_set(double t) const {
    const double M = max_density();
    if (!(t > 0.0) || !(t < M)) throw std::domain_error("AsymLaplaceC::superlevel_set: requires 0 < t < max density");
    const double level = std::log(M / t);
    return {mode_ - lambda1_ * level, mode_ + lambda2_ * level};
}

double AsymLaplaceC::tail_superlevel_measure(double a, double t) const {
    if (!(a >= 0.0)) throw std::domain_error("tail_superlevel_measure: requires a >= 0");
    if (std::abs(mean()) > 1e-9)
        throw std::domain_error("tail_superlevel_measure: instance must be mean-centered");
    const Interval s = superlevel_set(t);
    if (a == 0.0) return s.measure();
    const double b = s.half_width();
    if (b <= 0.0) return 0.0;
    return s.measure() - interval_overlap(a, b, s.center());
}

}  // namespace logconcave
