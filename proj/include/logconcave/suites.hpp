#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "logconcave/report.hpp"

namespace logconcave {

// num_tol is the violation threshold, eq_tol the (tighter) equality flag;
// they are separated so quadrature noise never masks a sharpness check.
struct SuiteConfig {
    int trials = 1000;
    std::uint64_t seed = 20250801;
    double num_tol = 1e-7;
    double eq_tol = 1e-8;
    std::vector<double> p_list = {1.0, 1.5, 2.0, 3.0, 4.0};
};

// 2 Var(X) <= 1/f(t)^2 + (mu - t)^2 over random log-concave densities and a
// grid of t values; two-sided exponential instances at their mode sit at
// equality.
std::vector<InequalityReport> suite_thm_variance_point(const SuiteConfig& cfg);

// ||U - EU||_psi <= ||X - EX||_psi <= ||Z - EZ||_psi for psi_p over random
// densities normalized to max density 1.
std::vector<InequalityReport> suite_orlicz_sandwich(const SuiteConfig& cfg);

// 1/(2^p (p+1)) <= M^p(X) sigma_p(X) <= Gamma(1+p)/e + int_0^1 (1-x)^p e^-x dx.
std::vector<InequalityReport> suite_acm(const SuiteConfig& cfg);

// 2 Var(Y) <= (1/P(Y=n)^2 - 1) + (mu - n)^2 over all support points, plus the
// rounded-mean and integer-mean corollaries.
std::vector<InequalityReport> suite_discrete_variance_point(const SuiteConfig& cfg);

// M^2 Var + M <= 1 and M^4 sigma_4 + M (M^2 - 10M + 18) <= 9 with the
// geometric family at equality and strictness probes off it.
std::vector<InequalityReport> suite_discrete_max(const SuiteConfig& cfg);

// Crossing-certificate soundness against the empirical banks, the superlevel
// tail extremality lattice, and the interval-overlap formula.
std::vector<InequalityReport> suite_order_machinery(const SuiteConfig& cfg);

const std::vector<std::string>& suite_names();

// Runs one suite by name, or every suite for "all". Throws
// std::invalid_argument for unknown names.
std::vector<InequalityReport> run_suite(std::string_view name, const SuiteConfig& cfg);

}  // namespace logconcave
