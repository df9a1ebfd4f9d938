#include "logconcave/grid_density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace logconcave {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// J_j(b, h) = ∫_0^h s^j e^{b s} ds for j = 0..jmax, written into out.
// Series for small |b h|, upward recurrence otherwise.
void exp_power_integrals(double b, double h, int jmax, double* out) {
    const double bh = b * h;
    if (std::abs(bh) <= 0.5) {
        // J_j = h^{j+1} sum_m (bh)^m / (m! (j+m+1))
        for (int j = 0; j <= jmax; ++j) {
            double pow_term = 1.0;  // (bh)^m / m!
            double sum = 1.0 / (j + 1.0);
            for (int m = 1; m < 60; ++m) {
                pow_term *= bh / m;
                const double add = pow_term / (j + m + 1.0);
                sum += add;
                if (std::abs(add) < 1e-18 * std::abs(sum)) break;
            }
            out[j] = std::pow(h, j + 1) * sum;
        }
        return;
    }
    const double ebh = std::exp(bh);
    out[0] = std::expm1(bh) / b;
    double hj = 1.0;
    for (int j = 1; j <= jmax; ++j) {
        hj *= h;
        out[j] = (hj * ebh - j * out[j - 1]) / b;
    }
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

GridDensity::GridDensity(std::vector<double> knots, std::vector<double> logvals)
    : knots_(std::move(knots)), logvals_(std::move(logvals)) {
    if (knots_.size() < 2) throw std::invalid_argument("GridDensity: needs at least two knots");
    if (knots_.size() != logvals_.size())
        throw std::invalid_argument("GridDensity: knots and logvals must have equal length");
    for (size_t i = 0; i < knots_.size(); ++i) {
        if (!std::isfinite(knots_[i])) throw std::invalid_argument("GridDensity: knots must be finite");
        if (i + 1 < knots_.size() && !(knots_[i] < knots_[i + 1]))
            throw std::invalid_argument("GridDensity: knots must be strictly increasing");
        const double lv = logvals_[i];
        if (std::isnan(lv) || lv == std::numeric_limits<double>::infinity())
            throw std::invalid_argument("GridDensity: logvals must be finite or -inf");
        if (lv == kNegInf && i != 0 && i + 1 != knots_.size())
            throw std::invalid_argument("GridDensity: -inf logval allowed at endpoints only");
    }
}

double GridDensity::pdf(double x) const {
    if (x < knots_.front() || x > knots_.back()) return 0.0;
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
    size_t i = static_cast<size_t>(it - knots_.begin());
    if (i == 0) i = 1;
    if (i == knots_.size()) i = knots_.size() - 1;
    const double x0 = knots_[i - 1], x1 = knots_[i];
    const double l0 = logvals_[i - 1], l1 = logvals_[i];
    if (x == x0) return std::exp(l0);
    if (x == x1) return std::exp(l1);
    if (l0 == kNegInf || l1 == kNegInf) return 0.0;  // massless edge piece
    const double t = (x - x0) / (x1 - x0);
    return std::exp(l0 + t * (l1 - l0));
}

double GridDensity::max_density() const {
    double m = 0.0;
    for (double lv : logvals_) m = std::max(m, std::exp(lv));
    return m;
}

double GridDensity::integral() const {
    return piece_power_moment(knots_.front(), knots_.back(), 0.0, 0);
}

void GridDensity::normalize() {
    double shift = kNegInf;
    for (double lv : logvals_)
        if (lv > shift) shift = lv;
    if (shift == kNegInf) throw std::domain_error("GridDensity::normalize: density vanishes identically");
    double total = 0.0;
    for (size_t i = 0; i + 1 < knots_.size(); ++i) {
        const double l0 = logvals_[i], l1 = logvals_[i + 1];
        if (l0 == kNegInf || l1 == kNegInf) continue;
        const double h = knots_[i + 1] - knots_[i];
        const double b = (l1 - l0) / h;
        double j0;
        exp_power_integrals(b, h, 0, &j0);
        total += std::exp(l0 - shift) * j0;
    }
    if (!(total > 0.0)) throw std::domain_error("GridDensity::normalize: non-positive mass");
    const double lognorm = shift + std::log(total);
    for (double& lv : logvals_)
        if (lv != kNegInf) lv -= lognorm;
}

double GridDensity::piece_power_moment(double lo, double hi, double center, int power) const {
    if (power < 0) throw std::invalid_argument("piece_power_moment: power must be >= 0");
    lo = std::max(lo, knots_.front());
    hi = std::min(hi, knots_.back());
    if (!(lo < hi)) return 0.0;
    double total = 0.0;
    double js[16];
    if (power > 15) throw std::invalid_argument("piece_power_moment: power too large");
    for (size_t i = 0; i + 1 < knots_.size(); ++i) {
        const double a = std::max(lo, knots_[i]);
        const double b = std::min(hi, knots_[i + 1]);
        if (!(a < b)) continue;
        const double l0 = logvals_[i], l1 = logvals_[i + 1];
        if (l0 == kNegInf || l1 == kNegInf) continue;
        const double slope = (l1 - l0) / (knots_[i + 1] - knots_[i]);
        const double la = l0 + slope * (a - knots_[i]);  // log density at the clipped start
        const double h = b - a;
        exp_power_integrals(slope, h, power, js);
        // (x - center)^power = sum_j C(power,j) (a - center)^{power-j} s^j, s = x - a
        const double d = a - center;
        double piece = 0.0;
        for (int j = 0; j <= power; ++j)
            piece += binomial(power, j) * std::pow(d, power - j) * js[j];
        total += std::exp(la) * piece;
    }
    return total;
}

GridDensity GridDensity::shifted(double c) const {
    std::vector<double> k = knots_;
    for (double& x : k) x += c;
    return GridDensity(std::move(k), logvals_);
}

GridDensity GridDensity::scaled(double c) const {
    if (!(c > 0.0)) throw std::invalid_argument("GridDensity::scaled: requires c > 0");
    std::vector<double> k = knots_;
    for (double& x : k) x *= c;
    std::vector<double> lv = logvals_;
    const double lc = std::log(c);
    for (double& v : lv)
        if (v != kNegInf) v -= lc;
    return GridDensity(std::move(k), std::move(lv));
}

bool is_logconcave(const GridDensity& f, double slope_tol) {
    const auto& k = f.knots();
    const auto& lv = f.logvals();
    double prev = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < k.size(); ++i) {
        double s;
        if (lv[i] == kNegInf && lv[i + 1] == kNegInf) return false;
        if (lv[i] == kNegInf)
            s = std::numeric_limits<double>::infinity();
        else if (lv[i + 1] == kNegInf)
            s = kNegInf;
        else
            s = (lv[i + 1] - lv[i]) / (k[i + 1] - k[i]);
        if (s > prev + slope_tol) return false;
        prev = std::min(prev, s);
    }
    return true;
}

Moments moments(const GridDensity& f, double p) {
    if (!(p >= 1.0)) throw std::domain_error("moments: requires p >= 1");
    const double lo = f.support_lo(), hi = f.support_hi();
    const double mass = f.piece_power_moment(lo, hi, 0.0, 0);
    const double mean = f.piece_power_moment(lo, hi, 0.0, 1) / mass;
    const double var = f.piece_power_moment(lo, hi, mean, 2) / mass;

    double sp;
    const int ip = static_cast<int>(std::lround(p));
    if (p == static_cast<double>(ip)) {
        if (ip % 2 == 0) {
            sp = f.piece_power_moment(lo, hi, mean, ip);
        } else {
            const double right = f.piece_power_moment(mean, hi, mean, ip);
            const double left = f.piece_power_moment(lo, mean, mean, ip);
            sp = right - left;
        }
        sp /= mass;
    } else {
        const double split[] = {mean};
        sp = integrate_split([&](double x) { return std::pow(std::abs(x - mean), p) * f.pdf(x); },
                             lo, hi, split, {1e-12, 1e-10, 4000}) /
             mass;
    }
    return {mean, var, sp};
}

double expectation(const GridDensity& f, const std::function<double(double)>& h,
                   std::span<const double> extra_breakpoints, const QuadratureOptions& opt) {
    std::vector<double> cuts(f.knots().begin(), f.knots().end());
    cuts.insert(cuts.end(), extra_breakpoints.begin(), extra_breakpoints.end());
    std::sort(cuts.begin(), cuts.end());
    const double lo = f.support_lo(), hi = f.support_hi();
    double total = 0.0;
    double prev = lo;
    for (double c : cuts) {
        if (c <= prev || c > hi) continue;
        total += integrate([&](double x) { return h(x) * f.pdf(x); }, prev, c, opt);
        prev = c;
    }
    if (prev < hi) total += integrate([&](double x) { return h(x) * f.pdf(x); }, prev, hi, opt);
    return total;
}

GridDensity to_grid(const AsymLaplaceC& d, double tail_mass) {
    if (!(tail_mass > 0.0) || !(tail_mass < 1.0)) throw std::invalid_argument("to_grid: bad tail_mass");
    const double l1 = d.lambda1(), l2 = d.lambda2(), m = d.mode();
    const double M = d.max_density();
    const double logM = std::log(M);
    std::vector<double> knots, logvals;
    // P(X < m - T1) = (l1 / (l1+l2)) e^{-T1/l1}; choose T1 so each tail loses
    // at most tail_mass / 2.
    if (l1 > 0.0) {
        const double t1 = std::max(l1 * std::log(std::max(2.0 * l1 * M / tail_mass, 2.0)), 1e-12);
        knots.push_back(m - t1);
        logvals.push_back(logM - t1 / l1);
    }
    knots.push_back(m);
    logvals.push_back(logM);
    if (l2 > 0.0) {
        const double t2 = std::max(l2 * std::log(std::max(2.0 * l2 * M / tail_mass, 2.0)), 1e-12);
        knots.push_back(m + t2);
        logvals.push_back(logM - t2 / l2);
    }
    GridDensity g(std::move(knots), std::move(logvals));
    g.normalize();
    return g;
}

GridDensity uniform_grid(double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("uniform_grid: requires lo < hi");
    const double lv = -std::log(hi - lo);
    return GridDensity({lo, hi}, {lv, lv});
}

}  // namespace logconcave
