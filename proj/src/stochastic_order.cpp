#include "logconcave/stochastic_order.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace logconcave {

namespace {

int sign_with_deadband(double v, double eps) {
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
}

// Shared scan: evaluation points with phi values -> crossing pattern; refine
// locates the crossing between two abscissae of opposite sign.
CrossingPattern scan_signs(const std::vector<double>& xs, const std::vector<double>& phis, double eps,
                           const std::function<double(double, double)>& refine) {
    CrossingPattern out;
    int run_sign = 0;
    double run_x = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        const int s = sign_with_deadband(phis[i], eps);
        if (s == 0) continue;
        if (run_sign == 0) {
            out.initial_sign = s;
        } else if (s != run_sign) {
            out.locations.push_back(refine(run_x, xs[i]));
        }
        run_sign = s;
        run_x = xs[i];
    }
    out.final_sign = run_sign;
    if (run_sign == 0) out.initial_sign = 0;
    return out;
}

double auto_eps(const std::vector<double>& phis, double eps) {
    if (eps >= 0.0) return eps;
    double m = 0.0;
    for (double v : phis) m = std::max(m, std::abs(v));
    return 1e-12 * m;
}

double nth_raw_moment(const GridDensity& g, int k) {
    return g.piece_power_moment(g.support_lo(), g.support_hi(), 0.0, k);
}

double nth_raw_moment(const DiscretePMF& g, int k) {
    return expectation(g, [k](double x) { return std::pow(x, k); });
}

// ---- test-function banks -------------------------------------------------

struct BankFunction {
    std::string name;
    std::function<double(double)> f;
    std::vector<double> kinks;  // breakpoints for quadrature
};

std::vector<double> hinge_grid(double lo, double hi, int count) {
    std::vector<double> g(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        g[static_cast<size_t>(i)] = lo + (hi - lo) * (i + 0.5) / count;
    return g;
}

std::vector<BankFunction> build_bank(OrderClass cls, double lo, double hi) {
    std::vector<BankFunction> bank;
    const double span = hi - lo;
    if (!(span > 0.0)) throw std::invalid_argument("order bank: empty support union");
    const auto hinges = hinge_grid(lo, hi, 17);
    auto name_at = [](const char* base, double a) {
        std::ostringstream os;
        os << base << "(a=" << a << ")";
        return os.str();
    };

    switch (cls.kind) {
        case OrderClass::Kind::increasing: {
            bank.push_back({"x", [](double x) { return x; }, {}});
            for (double a : hinges)
                bank.push_back({name_at("hinge", a), [a](double x) { return std::max(x - a, 0.0); }, {a}});
            const double w = span / 50.0;
            for (double a : hinges)
                bank.push_back({name_at("step", a),
                                [a, w](double x) { return 1.0 / (1.0 + std::exp(-(x - a) / w)); },
                                {}});
            const double s = 2.0 / span;
            bank.push_back({"-exp(-sx)", [s](double x) { return -std::exp(-s * x); }, {}});
            break;
        }
        case OrderClass::Kind::convex: {
            bank.push_back({"x", [](double x) { return x; }, {}});
            bank.push_back({"-x", [](double x) { return -x; }, {}});
            bank.push_back({"x^2", [](double x) { return x * x; }, {}});
            for (double a : hinges) {
                bank.push_back({name_at("hinge+", a), [a](double x) { return std::max(x - a, 0.0); }, {a}});
                bank.push_back({name_at("hinge-", a), [a](double x) { return std::max(a - x, 0.0); }, {a}});
                bank.push_back({name_at("abs", a), [a](double x) { return std::abs(x - a); }, {a}});
            }
            const double s = 2.0 / span;
            bank.push_back({"exp(sx)", [s](double x) { return std::exp(s * x); }, {}});
            bank.push_back({"exp(-sx)", [s](double x) { return std::exp(-s * x); }, {}});
            break;
        }
        case OrderClass::Kind::increasing_convex: {
            bank.push_back({"x", [](double x) { return x; }, {}});
            for (double a : hinges)
                bank.push_back({name_at("hinge", a), [a](double x) { return std::max(x - a, 0.0); }, {a}});
            for (double s : {0.5 / span, 2.0 / span})
                bank.push_back({"exp(s x)", [s](double x) { return std::exp(s * x); }, {}});
            break;
        }
        case OrderClass::Kind::nth_derivative: {
            const int n = cls.n;
            if (n == 1) return build_bank(OrderClass::increasing(), lo, hi);
            if (n == 2) return build_bank(OrderClass::convex(), lo, hi);
            if (n > 4) throw std::invalid_argument("order bank: empirical bank covers n <= 4 only");
            // nonnegative n-th distributional derivative: (x-a)_+^{n-1} and x^n
            const int e = n - 1;
            for (double a : hinges)
                bank.push_back({name_at(n == 3 ? "hinge^2" : "hinge^3", a),
                                [a, e](double x) { return std::pow(std::max(x - a, 0.0), e); },
                                {a}});
            bank.push_back({n == 3 ? "x^3" : "x^4",
                            [n](double x) { return std::pow(x, n); },
                            {}});
            break;
        }
    }
    return bank;
}

template <class W>
double bank_expectation(const W& w, const BankFunction& bf, const std::optional<double>& abs_center);

template <>
double bank_expectation(const GridDensity& w, const BankFunction& bf,
                        const std::optional<double>& abs_center) {
    if (!abs_center) return expectation(w, bf.f, bf.kinks);
    const double c = *abs_center;
    std::vector<double> cuts{c};
    for (double k : bf.kinks) {
        cuts.push_back(c + k);
        cuts.push_back(c - k);
    }
    return expectation(w, [&](double x) { return bf.f(std::abs(x - c)); }, cuts);
}

template <>
double bank_expectation(const DiscretePMF& w, const BankFunction& bf,
                        const std::optional<double>& abs_center) {
    if (!abs_center) return expectation(w, bf.f);
    const double c = *abs_center;
    return expectation(w, [&](double x) { return bf.f(std::abs(x - c)); });
}

template <class W>
OrderCheckReport empirical_check_impl(const W& g1, const W& g2, OrderClass cls, double lo, double hi,
                                      const OrderCheckOptions& opt) {
    const auto bank = build_bank(cls, lo, hi);
    OrderCheckReport rep;
    rep.bank_size = static_cast<int>(bank.size());
    bool first = true;
    for (const auto& bf : bank) {
        const double v1 = bank_expectation(g1, bf, opt.abs_center1);
        const double v2 = bank_expectation(g2, bf, opt.abs_center2);
        const double violation = v1 - v2;  // positive means E f(X1) > E f(X2)
        if (first || violation > rep.max_violation) {
            rep.max_violation = violation;
            rep.worst_function = bf.name;
            first = false;
        }
    }
    return rep;
}

template <class W>
OrderCertificate certify_impl(const W& g1, const W& g2, int n, double tol,
                              const std::function<CrossingPattern()>& crossings,
                              const std::function<OrderCheckReport()>& bank_check) {
    if (n < 1) throw std::invalid_argument("certify_order: requires n >= 1");
    OrderCertificate cert;
    cert.order_n = n;
    cert.crossings = crossings();
    for (int k = 0; k < n; ++k) {
        const double gap = std::abs(nth_raw_moment(g1, k) - nth_raw_moment(g2, k));
        cert.moment_gaps.emplace_back(k, gap);
    }
    const bool moments_ok =
        std::all_of(cert.moment_gaps.begin(), cert.moment_gaps.end(),
                    [tol](const auto& kv) { return kv.second <= tol; });

    const auto& cp = cert.crossings;
    const bool degenerate_equal = cp.count() == 0 && cp.initial_sign == 0;
    const bool pattern_ok = cp.count() == static_cast<size_t>(n) && cp.final_sign == 1;

    if (moments_ok && (pattern_ok || degenerate_equal)) {
        cert.verdict = Verdict::certified;
        cert.detail = degenerate_equal ? "densities identical within dead band" : "crossing pattern and moments match";
        return cert;
    }
    const OrderCheckReport rep = bank_check();
    if (rep.max_violation > tol) {
        cert.verdict = Verdict::refuted;
        cert.detail = "bank violation " + std::to_string(rep.max_violation) + " by " + rep.worst_function;
    } else {
        cert.verdict = Verdict::inconclusive;
        cert.detail = pattern_ok ? "moment mismatch" : "crossing pattern mismatch";
    }
    return cert;
}

OrderClass class_for_order(int n) {
    if (n == 1) return OrderClass::increasing();
    if (n == 2) return OrderClass::convex();
    return OrderClass::nth(std::min(n, 4));
}

}  // namespace

CrossingPattern crossing_pattern(const GridDensity& g1, const GridDensity& g2, double eps) {
    // Evaluation points: knots of both plus midpoints. Within a common piece
    // both log-densities are linear, so phi changes sign at most once there.
    std::set<double> pts(g1.knots().begin(), g1.knots().end());
    pts.insert(g2.knots().begin(), g2.knots().end());
    std::vector<double> xs(pts.begin(), pts.end());
    std::vector<double> with_mids;
    with_mids.reserve(xs.size() * 2);
    for (size_t i = 0; i < xs.size(); ++i) {
        with_mids.push_back(xs[i]);
        if (i + 1 < xs.size()) with_mids.push_back(0.5 * (xs[i] + xs[i + 1]));
    }
    std::vector<double> phis(with_mids.size());
    for (size_t i = 0; i < with_mids.size(); ++i) phis[i] = g2.pdf(with_mids[i]) - g1.pdf(with_mids[i]);
    const double band = auto_eps(phis, eps);

    auto refine = [&](double a, double b) {
        auto phi = [&](double x) { return g2.pdf(x) - g1.pdf(x); };
        double fa = phi(a);
        for (int i = 0; i < 80 && b - a > 1e-10; ++i) {
            const double m = 0.5 * (a + b);
            const double fm = phi(m);
            if ((fa <= 0.0) == (fm <= 0.0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        return 0.5 * (a + b);
    };
    return scan_signs(with_mids, phis, band, refine);
}

CrossingPattern crossing_pattern(const DiscretePMF& g1, const DiscretePMF& g2, double eps) {
    const std::int64_t lo = std::min(g1.support_lo(), g2.support_lo());
    const std::int64_t hi = std::max(g1.support_hi(), g2.support_hi());
    std::vector<double> xs, phis;
    xs.reserve(static_cast<size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) {
        xs.push_back(static_cast<double>(n));
        phis.push_back(g2.pmf(n) - g1.pmf(n));
    }
    const double band = auto_eps(phis, eps);
    auto refine = [](double a, double b) { return 0.5 * (a + b); };
    return scan_signs(xs, phis, band, refine);
}

OrderCertificate certify_order(const GridDensity& g1, const GridDensity& g2, int n, double tol) {
    return certify_impl<GridDensity>(
        g1, g2, n, tol, [&] { return crossing_pattern(g1, g2); },
        [&] {
            const double lo = std::min(g1.support_lo(), g2.support_lo());
            const double hi = std::max(g1.support_hi(), g2.support_hi());
            return empirical_check_impl(g1, g2, class_for_order(n), lo, hi, {});
        });
}

OrderCertificate certify_order(const DiscretePMF& g1, const DiscretePMF& g2, int n, double tol) {
    return certify_impl<DiscretePMF>(
        g1, g2, n, tol, [&] { return crossing_pattern(g1, g2); },
        [&] {
            const double lo = static_cast<double>(std::min(g1.support_lo(), g2.support_lo()));
            const double hi = static_cast<double>(std::max(g1.support_hi(), g2.support_hi()));
            return empirical_check_impl(g1, g2, class_for_order(n), lo, hi, {});
        });
}

OrderCheckReport empirical_order_check(const GridDensity& g1, const GridDensity& g2, OrderClass cls,
                                       const OrderCheckOptions& opt) {
    double lo = std::min(g1.support_lo(), g2.support_lo());
    double hi = std::max(g1.support_hi(), g2.support_hi());
    if (opt.abs_center1 || opt.abs_center2) {
        // bank lives on the folded axis |x - c|
        double fhi = 0.0;
        const double c1 = opt.abs_center1.value_or(0.0);
        const double c2 = opt.abs_center2.value_or(0.0);
        fhi = std::max({std::abs(g1.support_hi() - c1), std::abs(g1.support_lo() - c1),
                        std::abs(g2.support_hi() - c2), std::abs(g2.support_lo() - c2)});
        lo = 0.0;
        hi = fhi;
    }
    return empirical_check_impl(g1, g2, cls, lo, hi, opt);
}

OrderCheckReport empirical_order_check(const DiscretePMF& g1, const DiscretePMF& g2, OrderClass cls,
                                       const OrderCheckOptions& opt) {
    double lo = static_cast<double>(std::min(g1.support_lo(), g2.support_lo()));
    double hi = static_cast<double>(std::max(g1.support_hi(), g2.support_hi()));
    if (opt.abs_center1 || opt.abs_center2) {
        const double c1 = opt.abs_center1.value_or(0.0);
        const double c2 = opt.abs_center2.value_or(0.0);
        const double fhi = std::max({std::abs(static_cast<double>(g1.support_hi()) - c1),
                                     std::abs(static_cast<double>(g1.support_lo()) - c1),
                                     std::abs(static_cast<double>(g2.support_hi()) - c2),
                                     std::abs(static_cast<double>(g2.support_lo()) - c2)});
        lo = 0.0;
        hi = fhi;
    }
    return empirical_check_impl(g1, g2, cls, lo, hi, opt);
}

std::vector<double> lagrange_interpolant(const std::function<double(double)>& f,
                                         std::span<const double> nodes) {
    const size_t n = nodes.size();
    if (n == 0) throw std::invalid_argument("lagrange_interpolant: needs at least one node");
    for (size_t i = 0; i + 1 < n; ++i)
        if (!(nodes[i] < nodes[i + 1]))
            throw std::invalid_argument("lagrange_interpolant: nodes must be strictly increasing");

    std::vector<double> coeffs(n, 0.0);
    for (size_t k = 0; k < n; ++k) {
        // expand prod_{j != k} (x - x_j) and scale by f(x_k)/denominator
        std::vector<double> term{1.0};
        double denom = 1.0;
        for (size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            denom *= nodes[k] - nodes[j];
            std::vector<double> next(term.size() + 1, 0.0);
            for (size_t d = 0; d < term.size(); ++d) {
                next[d] -= nodes[j] * term[d];
                next[d + 1] += term[d];
            }
            term = std::move(next);
        }
        const double scale = f(nodes[k]) / denom;
        for (size_t d = 0; d < term.size(); ++d) coeffs[d] += scale * term[d];
    }
    return coeffs;
}

double poly_eval(std::span<const double> coeffs, double x) {
    double v = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

}  // namespace logconcave
