#pragma once

#include "logconcave/interval.hpp"

namespace logconcave {

// Two-sided exponential with scale lambda1 to the left of the mode and
// lambda2 to the right; the density maximum is 1/(lambda1+lambda2) at the
// mode. lambda1 = 0 gives the exponential, lambda2 = 0 its reflection.
class AsymLaplaceC {
public:
    // Requires lambda1 >= 0, lambda2 >= 0 and lambda1 + lambda2 > 0.
    AsymLaplaceC(double lambda1, double lambda2, double mode = 0.0);

    double lambda1() const { return lambda1_; }
    double lambda2() const { return lambda2_; }
    double mode() const { return mode_; }

    double max_density() const { return 1.0 / (lambda1_ + lambda2_); }

    // Density at x. For a degenerate side (lambda_i = 0) the support is the
    // half line through the mode, closed at the mode.
    double pdf(double x) const;

    // Moment generating function of the mode-centered variable X - mode,
    // 1/((1+t*lambda1)(1-t*lambda2)). Throws std::domain_error outside the
    // open strip -1/lambda1 < t < 1/lambda2. Callers wanting the shifted
    // variable multiply by exp(t*mode).
    double mgf(double t) const;

    double mean() const { return mode_ + lambda2_ - lambda1_; }
    double variance() const { return lambda1_ * lambda1_ + lambda2_ * lambda2_; }

    // {pdf > t} for 0 < t < max_density(); an interval around the mode whose
    // measure is log(M/t)/M.
    Interval superlevel_set(double t) const;

    // |[-a,a]^c ∩ {pdf > t}| for a mean-zero instance (throws otherwise).
    double tail_superlevel_measure(double a, double t) const;

private:
    double lambda1_;
    double lambda2_;
    double mode_;
};

}  // namespace logconcave
