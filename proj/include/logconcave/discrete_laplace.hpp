#pragma once

#include <cstdint>

namespace logconcave {

// Two-sided geometric on Z with ratio p below the mode and q above it;
// normalizer C = (1-p)(1-q)/(1-pq) is the mass at the mode. p = q = 0 is the
// point mass; p = 0 the geometric, q = 0 its reflection.
class AsymLaplaceD {
public:
    // Requires p, q in [0, 1).
    AsymLaplaceD(double p, double q, std::int64_t mode = 0);

    double p() const { return p_; }
    double q() const { return q_; }
    std::int64_t mode() const { return mode_; }

    // C_{p,q} = (1-p)(1-q)/(1-pq), the maximum probability.
    double normalizer() const;

    double pmf(std::int64_t n) const;

    double mean() const;
    double variance() const;

private:
    double p_;
    double q_;
    std::int64_t mode_;
};

// Solves C_{p,q} = g0, mean = mu for a mode-0 instance. Throws
// std::domain_error when (g0, mu) is infeasible (the solved p or q falls
// outside [0, 1)).
AsymLaplaceD solve_pq(double g0, double mu);

// Largest feasible mean offset q implied by a fixed maximum M: p is pinned to
// (1-q-M)/(1-q-Mq) and q must lie in [0, (1-M)/(1+M)].
double q_max_for_maximum(double M);

// Variance of the mode-0 family with maximum M as a function of q in
// [0, (1-M)/(1+M)]: 1/M^2 - (1+q)/(M(1-q)) + 2q/(1-q)^2.
double variance_reparam(double M, double q);

// Fourth absolute central moment of the same family, in closed form.
double sigma4_closed(double M, double q);

// d/dq of sigma4_closed at fixed M; vanishes exactly at q = (1-M)/(1+M).
double sigma4_derivative(double M, double q);

}  // namespace logconcave
