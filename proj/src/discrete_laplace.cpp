#include "logconcave/discrete_laplace.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace logconcave {

namespace {

void check_ratio(double r, const char* name) {
    if (!(r >= 0.0) || !(r < 1.0))
        throw std::invalid_argument(std::string("AsymLaplaceD: ") + name + " must lie in [0, 1)");
}

void check_reparam_domain(double M, double q) {
    if (!(M > 0.0) || !(M <= 1.0)) throw std::domain_error("reparam: requires M in (0, 1]");
    const double qmax = (1.0 - M) / (1.0 + M);
    if (!(q >= 0.0) || !(q <= qmax + 1e-15))
        throw std::domain_error("reparam: requires 0 <= q <= (1-M)/(1+M)");
}

}  // namespace

AsymLaplaceD::AsymLaplaceD(double p, double q, std::int64_t mode) : p_(p), q_(q), mode_(mode) {
    check_ratio(p, "p");
    check_ratio(q, "q");
}

double AsymLaplaceD::normalizer() const {
    return (1.0 - p_) * (1.0 - q_) / (1.0 - p_ * q_);
}

double AsymLaplaceD::pmf(std::int64_t n) const {
    const double c = normalizer();
    const std::int64_t d = n - mode_;
    if (d == 0) return c;
    if (d < 0) return p_ == 0.0 ? 0.0 : c * std::pow(p_, static_cast<double>(-d));
    return q_ == 0.0 ? 0.0 : c * std::pow(q_, static_cast<double>(d));
}

double AsymLaplaceD::mean() const {
    return static_cast<double>(mode_) + (q_ - p_) / ((1.0 - q_) * (1.0 - p_));
}

double AsymLaplaceD::variance() const {
    const double op = 1.0 - p_;
    const double oq = 1.0 - q_;
    return p_ / (op * op) + q_ / (oq * oq);
}

AsymLaplaceD solve_pq(double g0, double mu) {
    if (!(g0 > 0.0) || !(g0 <= 1.0)) throw std::domain_error("solve_pq: requires g0 in (0, 1]");
    if (!std::isfinite(mu)) throw std::domain_error("solve_pq: mu must be finite");
    const double dp = 1.0 - g0 * (mu - 1.0);
    const double dq = 1.0 + g0 * (mu + 1.0);
    if (dp == 0.0 || dq == 0.0) throw std::domain_error("solve_pq: degenerate denominator");
    const double p = (1.0 - g0 * (mu + 1.0)) / dp;
    const double q = (1.0 + g0 * (mu - 1.0)) / dq;
    if (!(p >= 0.0) || !(p < 1.0) || !(q >= 0.0) || !(q < 1.0))
        throw std::domain_error("solve_pq: (g0, mu) pair is infeasible for the family");
    return AsymLaplaceD(p, q, 0);
}

double q_max_for_maximum(double M) {
    if (!(M > 0.0) || !(M <= 1.0)) throw std::domain_error("q_max_for_maximum: requires M in (0, 1]");
    return (1.0 - M) / (1.0 + M);
}

double variance_reparam(double M, double q) {
    check_reparam_domain(M, q);
    const double oq = 1.0 - q;
    return 1.0 / (M * M) - (1.0 + q) / (M * oq) + 2.0 * q / (oq * oq);
}

double sigma4_closed(double M, double q) {
    check_reparam_domain(M, q);
    const double oq = 1.0 - q;
    const double oq2 = oq * oq;
    const double c0 = oq2 * oq2;
    const double c1 = oq2 * oq * (1.0 + q);
    const double c2 = oq2 * (1.0 + q * (4.0 + q));
    const double c3 = 1.0 + 22.0 * q - 22.0 * q * q * q - q * q * q * q;
    const double c4 = 1.0 + q * (10.0 + q);
    const double M2 = M * M;
    const double num = 9.0 * c0 - 18.0 * c1 * M + 10.0 * c2 * M2 - c3 * M2 * M + 2.0 * q * c4 * M2 * M2;
    return num / (M2 * M2 * c0);
}

double sigma4_derivative(double M, double q) {
    check_reparam_domain(M, q);
    const double oq = 1.0 - q;
    const double k0 = oq * oq * oq;
    const double k1 = oq * oq * (1.0 + q);
    const double k2 = 1.0 + (33.0 / 13.0) * q - (33.0 / 13.0) * q * q - q * q * q;
    const double k3 = 1.0 + 23.0 * q + 23.0 * q * q + q * q * q;
    const double num = -18.0 * k0 + 30.0 * k1 * M - 13.0 * k2 * M * M + k3 * M * M * M;
    return 2.0 * num / (M * M * M * k0 * oq * oq);
}

}  // namespace logconcave
