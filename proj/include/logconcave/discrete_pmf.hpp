#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "logconcave/discrete_laplace.hpp"
#include "logconcave/grid_density.hpp"

namespace logconcave {

// Finite-support probability sequence on Z: weights[i] is the mass at
// offset + i. Weights are nonnegative; the sequence is log-concave when the
// positive weights are contiguous and w[i]^2 >= w[i-1] * w[i+1] inside.
class DiscretePMF {
public:
    DiscretePMF(std::int64_t offset, std::vector<double> weights);

    std::int64_t offset() const { return offset_; }
    const std::vector<double>& weights() const { return weights_; }

    std::int64_t support_lo() const { return offset_; }
    std::int64_t support_hi() const { return offset_ + static_cast<std::int64_t>(weights_.size()) - 1; }

    double pmf(std::int64_t n) const;
    double max_mass() const;
    double total_mass() const;

    // Scales weights so total_mass() == 1.
    void normalize();

    DiscretePMF shifted(std::int64_t c) const;

private:
    std::int64_t offset_;
    std::vector<double> weights_;
};

bool is_logconcave(const DiscretePMF& g, double tol = 1e-12);

// Mean, variance and E|X - mean|^p by exact finite sums (compensated).
Moments moments(const DiscretePMF& g, double p);

// E[h(n)] over the support.
double expectation(const DiscretePMF& g, const std::function<double(double)>& h);

// Truncates the two geometric tails once the residual (including a fourth
// moment weight) drops below tail_tol, then renormalizes.
DiscretePMF to_pmf(const AsymLaplaceD& d, double tail_tol = 1e-15);

}  // namespace logconcave
