#include "logconcave/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

#include "logconcave/asym_laplace.hpp"
#include "logconcave/discrete_laplace.hpp"
#include "logconcave/discrete_pmf.hpp"
#include "logconcave/extremal.hpp"
#include "logconcave/generators.hpp"
#include "logconcave/grid_density.hpp"
#include "logconcave/interval.hpp"
#include "logconcave/orlicz.hpp"
#include "logconcave/stochastic_order.hpp"

namespace logconcave {

namespace {

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return std::string(buf);
}

ContinuousGenConfig random_cont_config(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ContinuousGenConfig cfg;
    cfg.knot_count = 8 + static_cast<int>(rng() % 41);  // 8..48
    cfg.domain_lo = -1.0 - 4.0 * u(rng);
    cfg.domain_hi = 1.0 + 4.0 * u(rng);
    cfg.slope_scale = 0.5 + 2.5 * u(rng);
    return cfg;
}

DiscreteGenConfig random_disc_config(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    DiscreteGenConfig cfg;
    cfg.support_len = 3 + static_cast<int>(rng() % 118);  // 3..120
    cfg.concavity_scale = 0.05 + 0.4 * u(rng);
    return cfg;
}

GridDensity exponential_grid() { return to_grid(AsymLaplaceC(0.0, 1.0, 0.0), 1e-16); }

// A matching point for the majorant construction with a density floor: far
// below the maximum the rendered majorant support explodes and drags the
// moment tolerances with it.
double pick_matching_point(const GridDensity& f, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double lo = f.support_lo(), hi = f.support_hi();
    const double floor = 1e-2 * f.max_density();
    for (int attempt = 0; attempt < 10; ++attempt) {
        const double t = lo + (0.2 + 0.6 * u(rng)) * (hi - lo);
        if (f.pdf(t) >= floor) return t;
    }
    size_t best = 0;
    for (size_t i = 1; i < f.logvals().size(); ++i)
        if (f.logvals()[i] > f.logvals()[best]) best = i;
    return f.knots()[best];
}

// Gaussian log-weight tilt: keeps a pmf log-concave but moves it off the
// two-sided geometric family. Used by the local strictness probes.
DiscretePMF gaussian_tilt(const DiscretePMF& g, double eps) {
    std::vector<double> w = g.weights();
    for (size_t i = 0; i < w.size(); ++i) {
        const double n = static_cast<double>(g.offset() + static_cast<std::int64_t>(i));
        w[i] *= std::exp(-eps * n * n);
    }
    DiscretePMF out(g.offset(), std::move(w));
    out.normalize();
    return out;
}

}  // namespace

std::vector<InequalityReport> suite_thm_variance_point(const SuiteConfig& cfg) {
    const char* suite = "thm_variance_point";
    std::vector<InequalityReport> out;

    // equality family: mode-matched two-sided exponentials, closed forms
    const double lambdas[][2] = {{1.0, 1.0}, {0.5, 1.5}, {0.0, 1.0}, {2.0, 0.3}, {3.0, 3.0}};
    for (const auto& l : lambdas) {
        const AsymLaplaceC d(l[0], l[1], 0.25);
        const double lhs = 2.0 * d.variance();
        const double invf = 1.0 / d.pdf(d.mode());
        const double rhs = invf * invf + (d.mean() - d.mode()) * (d.mean() - d.mode());
        out.push_back(make_report(suite, fmt("asym_laplace(l1=%g,l2=%g,t=mode)", l[0], l[1]), lhs,
                                  rhs, cfg.num_tol, cfg.eq_tol));
    }

    for (int trial = 0; trial < cfg.trials; ++trial) {
        std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
        const auto gen_cfg = random_cont_config(rng);
        const GridDensity f = gen_logconcave(rng(), gen_cfg);
        const Moments m = moments(f, 2.0);
        const double lhs = 2.0 * m.variance;
        double worst_slack = std::numeric_limits<double>::infinity();
        double worst_t = 0.0, worst_rhs = 0.0;
        const double lo = f.support_lo(), hi = f.support_hi();
        for (int j = 0; j < 11; ++j) {
            const double t = lo + (hi - lo) * (j + 0.5) / 11.0;
            const double ft = f.pdf(t);
            const double rhs = 1.0 / (ft * ft) + (m.mean - t) * (m.mean - t);
            if (rhs - lhs < worst_slack) {
                worst_slack = rhs - lhs;
                worst_t = t;
                worst_rhs = rhs;
            }
        }
        out.push_back(make_report(suite, fmt("trial=%d knots=%d t=%.6g", trial, gen_cfg.knot_count, worst_t),
                                  lhs, worst_rhs, cfg.num_tol, cfg.eq_tol));
    }
    return out;
}

std::vector<InequalityReport> suite_orlicz_sandwich(const SuiteConfig& cfg) {
    const char* suite = "orlicz_sandwich";
    std::vector<InequalityReport> out;
    const GridDensity uni = uniform_grid(-0.5, 0.5);
    const GridDensity expo = exponential_grid();

    for (double p : cfg.p_list) {
        const YoungFunction psi = YoungFunction::power(p);
        const AcmBounds b = acm_bounds(p);
        const double lower = std::pow(b.lower, 1.0 / p);
        const double upper = std::pow(b.upper, 1.0 / p);

        // sharp ends of the sandwich
        const double nu = orlicz_norm(uni, psi, 1e-9, moments(uni, 1.0).mean);
        out.push_back(make_report(suite, fmt("p=%g uniform(lower)", p), lower, nu, cfg.num_tol, cfg.eq_tol));
        const double nz = orlicz_norm(expo, psi, 1e-9, moments(expo, 1.0).mean);
        out.push_back(make_report(suite, fmt("p=%g exponential(upper)", p), nz, upper, cfg.num_tol, cfg.eq_tol));

        for (int trial = 0; trial < cfg.trials; ++trial) {
            std::mt19937_64 rng(mix_seed(cfg.seed ^ 0x0421cull, static_cast<std::uint64_t>(trial)));
            const auto gen_cfg = random_cont_config(rng);
            GridDensity g = gen_logconcave(rng(), gen_cfg);
            g = g.scaled(g.max_density());  // now M(g) = 1
            const double norm = orlicz_norm(g, psi, 1e-9, moments(g, 1.0).mean);
            out.push_back(make_report(suite, fmt("p=%g trial=%d lower", p, trial), lower, norm,
                                      cfg.num_tol, cfg.eq_tol));
            out.push_back(make_report(suite, fmt("p=%g trial=%d upper", p, trial), norm, upper,
                                      cfg.num_tol, cfg.eq_tol));
        }
    }
    return out;
}

std::vector<InequalityReport> suite_acm(const SuiteConfig& cfg) {
    const char* suite = "acm";
    std::vector<InequalityReport> out;
    const GridDensity uni = uniform_grid(-0.5, 0.5);
    const GridDensity expo = exponential_grid();

    for (double p : cfg.p_list) {
        const AcmBounds b = acm_bounds(p);
        auto check = [&](const GridDensity& g, const std::string& inst) {
            const double M = g.max_density();
            const Moments m = moments(g, p);
            const double val = std::pow(M, p) * m.sigma_p;
            out.push_back(make_report(suite, inst + " lower", b.lower, val, cfg.num_tol, cfg.eq_tol));
            out.push_back(make_report(suite, inst + " upper", val, b.upper, cfg.num_tol, cfg.eq_tol));
        };
        check(uni, fmt("p=%g uniform", p));
        check(expo, fmt("p=%g exponential", p));
        for (int trial = 0; trial < cfg.trials; ++trial) {
            std::mt19937_64 rng(mix_seed(cfg.seed ^ 0xac3ull, static_cast<std::uint64_t>(trial)));
            const auto gen_cfg = random_cont_config(rng);
            check(gen_logconcave(rng(), gen_cfg), fmt("p=%g trial=%d", p, trial));
        }
    }
    return out;
}

std::vector<InequalityReport> suite_discrete_variance_point(const SuiteConfig& cfg) {
    const char* suite = "discrete_variance_point";
    std::vector<InequalityReport> out;

    auto check_all_points = [&](const DiscretePMF& g, const std::string& inst) {
        const Moments m = moments(g, 2.0);
        const double lhs = 2.0 * m.variance;
        double worst_slack = std::numeric_limits<double>::infinity();
        double worst_rhs = 0.0;
        std::int64_t worst_n = g.support_lo();
        for (std::int64_t n = g.support_lo(); n <= g.support_hi(); ++n) {
            const double pn = g.pmf(n);
            if (!(pn > 0.0)) continue;
            const double d = m.mean - static_cast<double>(n);
            const double rhs = (1.0 / (pn * pn) - 1.0) + d * d;
            if (rhs - lhs < worst_slack) {
                worst_slack = rhs - lhs;
                worst_rhs = rhs;
                worst_n = n;
            }
        }
        out.push_back(make_report(suite, inst + fmt(" worst_n=%lld", static_cast<long long>(worst_n)),
                                  lhs, worst_rhs, cfg.num_tol, cfg.eq_tol));
        // rounded-mean corollary: P^2(Y=[mu]) <= 1/(3/4 + 2Var)
        const std::int64_t nearest = static_cast<std::int64_t>(std::llround(m.mean));
        const double pm = g.pmf(nearest);
        out.push_back(make_report(suite, inst + " rounded_mean_bound", pm * pm,
                                  1.0 / (0.75 + 2.0 * m.variance), cfg.num_tol, cfg.eq_tol));
    };

    // equality family via the (g0, mu) -> (p, q) solution, evaluated at the mode
    const double eq_params[][2] = {{1.0, 0.0}, {0.5, 0.0}, {0.5, 1.0}, {0.3, 1.0}, {0.45, -0.8}, {0.8, 0.15}};
    for (const auto& pr : eq_params) {
        const AsymLaplaceD d = solve_pq(pr[0], pr[1]);
        const DiscretePMF g = to_pmf(d, 1e-16);
        const Moments m = moments(g, 2.0);
        const double p0 = g.pmf(0);
        const double rhs = (1.0 / (p0 * p0) - 1.0) + m.mean * m.mean;
        out.push_back(make_report(suite, fmt("solve_pq(g0=%g,mu=%g) at mode", pr[0], pr[1]),
                                  2.0 * m.variance, rhs, cfg.num_tol, cfg.eq_tol));
    }

    // integer-mean sharpening: P^2(Y=mu) <= 1/(1 + 2Var) on instances whose
    // mean is an integer by construction
    const double int_mean_params[][2] = {{0.5, 0.0}, {0.3, 1.0}, {0.25, -2.0}, {0.7, 0.0}};
    for (const auto& pr : int_mean_params) {
        const AsymLaplaceD d = solve_pq(pr[0], pr[1]);
        const DiscretePMF g = to_pmf(d, 1e-16);
        const Moments m = moments(g, 2.0);
        const std::int64_t mu_int = static_cast<std::int64_t>(std::llround(m.mean));
        const double pm = g.pmf(mu_int);
        out.push_back(make_report(suite, fmt("integer_mean_bound(g0=%g,mu=%g)", pr[0], pr[1]), pm * pm,
                                  1.0 / (1.0 + 2.0 * m.variance), cfg.num_tol, cfg.eq_tol));
    }

    // strictness probe: tilting an equality instance strictly increases slack
    {
        const AsymLaplaceD d = solve_pq(0.4, 0.6);
        const DiscretePMF g = to_pmf(d, 1e-16);
        const Moments m0 = moments(g, 2.0);
        const double p0 = g.pmf(0);
        const double slack0 = (1.0 / (p0 * p0) - 1.0) + m0.mean * m0.mean - 2.0 * m0.variance;
        const DiscretePMF t = gaussian_tilt(g, 1e-3);
        const Moments m1 = moments(t, 2.0);
        const double p1 = t.pmf(0);
        const double slack1 = (1.0 / (p1 * p1) - 1.0) + m1.mean * m1.mean - 2.0 * m1.variance;
        out.push_back(make_report(suite, "strictness_probe(tilt=1e-3)", slack0 + 1e-8, slack1,
                                  cfg.num_tol, cfg.eq_tol));
    }

    for (int trial = 0; trial < cfg.trials; ++trial) {
        std::mt19937_64 rng(mix_seed(cfg.seed ^ 0xd15cull, static_cast<std::uint64_t>(trial)));
        const auto gen_cfg = random_disc_config(rng);
        check_all_points(gen_logconcave_pmf(rng(), gen_cfg), fmt("trial=%d len=%d", trial, gen_cfg.support_len));
    }
    return out;
}

std::vector<InequalityReport> suite_discrete_max(const SuiteConfig& cfg) {
    const char* suite = "discrete_max";
    std::vector<InequalityReport> out;

    auto eq11 = [](const DiscretePMF& g, const Moments& m) {
        const double M = g.max_mass();
        return M * M * m.variance + M;
    };
    auto eq12 = [](const DiscretePMF& g, const Moments& m) {
        const double M = g.max_mass();
        return M * M * M * M * m.sigma_p + M * (M * M - 10.0 * M + 18.0);
    };
    auto check_both = [&](const DiscretePMF& g, const std::string& inst) {
        const Moments m = moments(g, 4.0);
        out.push_back(make_report(suite, inst + " eq_var", eq11(g, m), 1.0, cfg.num_tol, cfg.eq_tol));
        out.push_back(make_report(suite, inst + " eq_sigma4", eq12(g, m), 9.0, cfg.num_tol, cfg.eq_tol));
    };

    // geometric equality family (q = 0.1 .. 0.9)
    for (int i = 1; i <= 9; ++i) {
        const double q = 0.1 * i;
        check_both(to_pmf(AsymLaplaceD(0.0, q, 0), 1e-16), fmt("geometric q=%g", q));
    }
    // point mass is the q = 0 geometric
    check_both(DiscretePMF(0, {1.0}), "point_mass");

    // uniqueness: interior family members keep strictly positive slack
    for (double p : {0.05, 0.2, 0.5, 0.8})
        for (double q : {0.05, 0.2, 0.5, 0.8})
            check_both(to_pmf(AsymLaplaceD(p, q, 0), 1e-16), fmt("asym_laplace p=%g q=%g", p, q));

    // strictness probe off the geometric family
    {
        const DiscretePMF g = to_pmf(AsymLaplaceD(0.0, 0.5, 0), 1e-16);
        const Moments m0 = moments(g, 4.0);
        const DiscretePMF t = gaussian_tilt(g, 1e-3);
        const Moments m1 = moments(t, 4.0);
        out.push_back(make_report(suite, "strictness_probe_var(tilt=1e-3)", (1.0 - eq11(g, m0)) + 1e-8,
                                  1.0 - eq11(t, m1), cfg.num_tol, cfg.eq_tol));
        out.push_back(make_report(suite, "strictness_probe_sigma4(tilt=1e-3)", (9.0 - eq12(g, m0)) + 1e-8,
                                  9.0 - eq12(t, m1), cfg.num_tol, cfg.eq_tol));
    }

    for (int trial = 0; trial < cfg.trials; ++trial) {
        std::mt19937_64 rng(mix_seed(cfg.seed ^ 0xd3a5ull, static_cast<std::uint64_t>(trial)));
        const auto gen_cfg = random_disc_config(rng);
        check_both(gen_logconcave_pmf(rng(), gen_cfg), fmt("trial=%d len=%d", trial, gen_cfg.support_len));
    }
    return out;
}

std::vector<InequalityReport> suite_order_machinery(const SuiteConfig& cfg) {
    const char* suite = "order_machinery";
    std::vector<InequalityReport> out;

    // interval-overlap formula vs direct intersection, on a dyadic lattice so
    // both routes are exact in binary64
    {
        std::mt19937_64 rng(mix_seed(cfg.seed ^ 0x07e1ull, 0));
        double worst = 0.0;
        const int draws = std::max(cfg.trials, 1000);
        for (int i = 0; i < draws; ++i) {
            const double a = static_cast<double>(1 + rng() % 256) / 64.0;
            const double b = static_cast<double>(1 + rng() % 256) / 64.0;
            const double x = static_cast<double>(static_cast<std::int64_t>(rng() % 513) - 256) / 64.0;
            const double direct = std::max(0.0, std::min(a, x + b) - std::max(-a, x - b));
            worst = std::max(worst, std::abs(interval_overlap(a, b, x) - direct));
        }
        out.push_back(make_report(suite, fmt("overlap_vs_direct draws=%d", draws), worst, 0.0,
                                  cfg.num_tol, cfg.eq_tol));
    }

    // superlevel tail extremality: mean-zero family at fixed maximum, tail
    // measure minimized at lambda2 = 1/(2M), maximized at the endpoints
    for (double M : {0.5, 1.0, 2.0}) {
        for (double afrac : {0.1, 0.4, 0.8, 1.6}) {
            for (double tfrac : {0.9, 0.36787944117144233, 0.1353352832366127, 0.05}) {
                const double a = afrac / M;
                const double t = tfrac * M;
                double vmin = std::numeric_limits<double>::infinity();
                double vmax = -1.0, v_mid = 0.0, v_end = 0.0;
                for (int i = 0; i <= 100; ++i) {
                    const double l2 = static_cast<double>(i) / 100.0 / M;
                    const double l1 = 1.0 / M - l2;
                    const AsymLaplaceC d(l1, l2, l1 - l2);  // mean zero
                    const double v = d.tail_superlevel_measure(a, t);
                    vmin = std::min(vmin, v);
                    vmax = std::max(vmax, v);
                    if (i == 50) v_mid = v;
                    if (i == 0 || i == 100) v_end = std::max(v_end, v);
                }
                out.push_back(make_report(suite, fmt("tail_min M=%g a=%g t=%g", M, a, t), v_mid,
                                          vmin + 1e-12, cfg.num_tol, cfg.eq_tol));
                out.push_back(make_report(suite, fmt("tail_max M=%g a=%g t=%g", M, a, t), vmax,
                                          v_end + 1e-12, cfg.num_tol, cfg.eq_tol));
            }
        }
    }

    // U <cx X - EX for random X with M(X) = 1
    {
        const GridDensity uni = uniform_grid(-0.5, 0.5);
        const int draws = std::min(cfg.trials, 200);
        for (int trial = 0; trial < draws; ++trial) {
            std::mt19937_64 rng(mix_seed(cfg.seed ^ 0x0cf0ull, static_cast<std::uint64_t>(trial)));
            GridDensity g = gen_logconcave(rng(), random_cont_config(rng));
            g = g.scaled(g.max_density());
            const GridDensity centered = g.shifted(-moments(g, 1.0).mean);
            const auto rep = empirical_order_check(uni, centered, OrderClass::convex());
            out.push_back(make_report(suite, fmt("uniform_cx trial=%d", trial), rep.max_violation, 0.0,
                                      cfg.num_tol, cfg.eq_tol));
        }
    }

    // |X_l - EX_l| <icx |Z - EZ| across the fixed-maximum family
    {
        const GridDensity expo = exponential_grid();
        const double mz = moments(expo, 1.0).mean;
        for (int i = 0; i <= 10; ++i) {
            const double l2 = static_cast<double>(i) / 10.0;
            const AsymLaplaceC d(1.0 - l2, l2, 0.0);
            const GridDensity dg = to_grid(d, 1e-14);
            OrderCheckOptions opt;
            opt.abs_center1 = moments(dg, 1.0).mean;
            opt.abs_center2 = mz;
            const auto rep = empirical_order_check(dg, expo, OrderClass::increasing_convex(), opt);
            out.push_back(make_report(suite, fmt("abs_icx lambda2=%g", l2), rep.max_violation, 0.0,
                                      cfg.num_tol, cfg.eq_tol));
        }
    }

    // certificate soundness: constructed pairs must certify, and certified
    // pairs must survive the matching bank
    {
        const int pairs = std::min(cfg.trials, 500);
        for (int j = 0; j < pairs; ++j) {
            std::mt19937_64 rng(mix_seed(cfg.seed ^ 0x50c5ull, static_cast<std::uint64_t>(j)));
            std::uniform_real_distribution<double> u(0.0, 1.0);
            const int kind = j % 3;
            if (kind == 0) {
                // continuous convex-order pair from the majorant construction
                const GridDensity f = gen_logconcave(rng(), random_cont_config(rng));
                const double t = pick_matching_point(f, rng);
                const AsymLaplaceC maj = majorant(f, t);
                const GridDensity mg = to_grid(maj, 1e-14);
                const auto cert = certify_order(f, mg, 2, cfg.num_tol);
                out.push_back(make_report(suite, fmt("pair=%d cx certified", j),
                                          cert.verdict == Verdict::certified ? 0.0 : 1.0, 0.0,
                                          cfg.num_tol, cfg.eq_tol));
                const auto rep = empirical_order_check(f, mg, OrderClass::convex());
                out.push_back(make_report(suite, fmt("pair=%d cx bank", j), rep.max_violation, 0.0,
                                          cfg.num_tol, cfg.eq_tol));
            } else if (kind == 1) {
                // monotone pair: a density against its right shift
                const GridDensity f = gen_logconcave(rng(), random_cont_config(rng));
                const GridDensity g = f.shifted(0.1 + 2.0 * u(rng));
                const auto cert = certify_order(f, g, 1, cfg.num_tol);
                out.push_back(make_report(suite, fmt("pair=%d st certified", j),
                                          cert.verdict == Verdict::certified ? 0.0 : 1.0, 0.0,
                                          cfg.num_tol, cfg.eq_tol));
                const auto rep = empirical_order_check(f, g, OrderClass::increasing());
                out.push_back(make_report(suite, fmt("pair=%d st bank", j), rep.max_violation, 0.0,
                                          cfg.num_tol, cfg.eq_tol));
            } else {
                // discrete convex-order pair
                const DiscretePMF g = gen_logconcave_pmf(rng(), random_disc_config(rng));
                std::int64_t n = 0;
                double best = -1.0;
                for (std::int64_t i = g.support_lo(); i <= g.support_hi(); ++i)
                    if (g.pmf(i) > best) {
                        best = g.pmf(i);
                        n = i;
                    }
                const AsymLaplaceD maj = majorant(g, n);
                const DiscretePMF mg = to_pmf(maj, 1e-15);
                const auto cert = certify_order(g, mg, 2, cfg.num_tol);
                out.push_back(make_report(suite, fmt("pair=%d dcx certified", j),
                                          cert.verdict == Verdict::certified ? 0.0 : 1.0, 0.0,
                                          cfg.num_tol, cfg.eq_tol));
                const auto rep = empirical_order_check(g, mg, OrderClass::convex());
                out.push_back(make_report(suite, fmt("pair=%d dcx bank", j), rep.max_violation, 0.0,
                                          cfg.num_tol, cfg.eq_tol));
            }
        }
    }

    // two-crossing equality rigidity: no generated pair may match second
    // moments without being identical; a rendered family member is the
    // positive control
    {
        const int draws = std::min(cfg.trials, 200);
        int spurious = 0;
        for (int j = 0; j < draws; ++j) {
            std::mt19937_64 rng(mix_seed(cfg.seed ^ 0x2161ull, static_cast<std::uint64_t>(j)));
            const GridDensity f = gen_logconcave(rng(), random_cont_config(rng));
            const double t = pick_matching_point(f, rng);
            const GridDensity mg = to_grid(majorant(f, t), 1e-14);
            const double m2f = f.piece_power_moment(f.support_lo(), f.support_hi(), 0.0, 2);
            const double m2g = mg.piece_power_moment(mg.support_lo(), mg.support_hi(), 0.0, 2);
            if (std::abs(m2f - m2g) <= 1e-12) {
                // premise holds; conclusion must too
                double maxphi = 0.0;
                for (double x : f.knots()) maxphi = std::max(maxphi, std::abs(mg.pdf(x) - f.pdf(x)));
                if (maxphi > 1e-9) ++spurious;
            }
        }
        out.push_back(make_report(suite, fmt("rigidity_counterexamples draws=%d", draws),
                                  static_cast<double>(spurious), 0.0, cfg.num_tol, cfg.eq_tol));

        const GridDensity member = to_grid(AsymLaplaceC(0.7, 1.1, 0.3), 1e-16);
        const GridDensity mg = to_grid(majorant(member, 0.3), 1e-16);
        double maxphi = 0.0;
        for (double x : member.knots()) maxphi = std::max(maxphi, std::abs(mg.pdf(x) - member.pdf(x)));
        out.push_back(make_report(suite, "rigidity_positive_control", maxphi, 0.0, cfg.num_tol, cfg.eq_tol));
    }

    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "thm_variance_point", "orlicz_sandwich",  "acm",
        "discrete_variance_point", "discrete_max", "order_machinery",
    };
    return names;
}

std::vector<InequalityReport> run_suite(std::string_view name, const SuiteConfig& cfg) {
    if (name == "thm_variance_point") return suite_thm_variance_point(cfg);
    if (name == "orlicz_sandwich") return suite_orlicz_sandwich(cfg);
    if (name == "acm") return suite_acm(cfg);
    if (name == "discrete_variance_point") return suite_discrete_variance_point(cfg);
    if (name == "discrete_max") return suite_discrete_max(cfg);
    if (name == "order_machinery") return suite_order_machinery(cfg);
    if (name == "all") {
        std::vector<InequalityReport> all;
        for (const auto& n : suite_names()) {
            auto part = run_suite(n, cfg);
            all.insert(all.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace logconcave
