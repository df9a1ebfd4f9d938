#include "logconcave/discrete_pmf.hpp"

#include <cmath>
#include <stdexcept>

namespace logconcave {

namespace {

// Kahan-compensated accumulator; the sigma4 equality checks sit at 1e-12 and
// plain summation over long geometric tails is too lossy for them.
struct Accum {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

DiscretePMF::DiscretePMF(std::int64_t offset, std::vector<double> weights)
    : offset_(offset), weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("DiscretePMF: empty weight list");
    for (double w : weights_)
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::invalid_argument("DiscretePMF: weights must be finite and nonnegative");
}

double DiscretePMF::pmf(std::int64_t n) const {
    if (n < support_lo() || n > support_hi()) return 0.0;
    return weights_[static_cast<size_t>(n - offset_)];
}

double DiscretePMF::max_mass() const {
    double m = 0.0;
    for (double w : weights_) m = std::max(m, w);
    return m;
}

double DiscretePMF::total_mass() const {
    Accum a;
    for (double w : weights_) a.add(w);
    return a.sum;
}

void DiscretePMF::normalize() {
    const double t = total_mass();
    if (!(t > 0.0)) throw std::domain_error("DiscretePMF::normalize: zero total mass");
    for (double& w : weights_) w /= t;
}

DiscretePMF DiscretePMF::shifted(std::int64_t c) const { return DiscretePMF(offset_ + c, weights_); }

bool is_logconcave(const DiscretePMF& g, double tol) {
    const auto& w = g.weights();
    // positive support must be contiguous
    size_t first = w.size(), last = 0;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] > 0.0) {
            first = std::min(first, i);
            last = i;
        }
    if (first == w.size()) return false;
    for (size_t i = first; i <= last; ++i)
        if (!(w[i] > 0.0)) return false;
    for (size_t i = first + 1; i < last; ++i)
        if (w[i] * w[i] < w[i - 1] * w[i + 1] * (1.0 - tol)) return false;
    return true;
}

Moments moments(const DiscretePMF& g, double p) {
    if (!(p >= 0.0)) throw std::domain_error("moments: requires p >= 0");
    const auto& w = g.weights();
    Accum mass, m1;
    for (size_t i = 0; i < w.size(); ++i) {
        const double n = static_cast<double>(g.offset() + static_cast<std::int64_t>(i));
        mass.add(w[i]);
        m1.add(n * w[i]);
    }
    const double mean = m1.sum / mass.sum;
    Accum var, sp;
    for (size_t i = 0; i < w.size(); ++i) {
        const double d = static_cast<double>(g.offset() + static_cast<std::int64_t>(i)) - mean;
        var.add(d * d * w[i]);
        sp.add(std::pow(std::abs(d), p) * w[i]);
    }
    return {mean, var.sum / mass.sum, sp.sum / mass.sum};
}

double expectation(const DiscretePMF& g, const std::function<double(double)>& h) {
    const auto& w = g.weights();
    Accum a;
    for (size_t i = 0; i < w.size(); ++i)
        a.add(h(static_cast<double>(g.offset() + static_cast<std::int64_t>(i))) * w[i]);
    return a.sum;
}

DiscretePMF to_pmf(const AsymLaplaceD& d, double tail_tol) {
    if (!(tail_tol > 0.0)) throw std::invalid_argument("to_pmf: bad tail_tol");
    const double c = d.normalizer();
    auto tail_len = [&](double r) -> std::int64_t {
        if (r == 0.0) return 0;
        std::int64_t k = 1;
        // residual beyond k, with a (k+1)^4 weight so fourth-moment sums stay
        // accurate: c r^k (k+1)^4 / (1-r)
        while (c * std::pow(r, static_cast<double>(k)) * std::pow(k + 1.0, 4.0) / (1.0 - r) > tail_tol) {
            ++k;
            if (k > 2000000) throw std::runtime_error("to_pmf: truncation did not converge");
        }
        return k;
    };
    const std::int64_t n1 = tail_len(d.p());
    const std::int64_t n2 = tail_len(d.q());
    std::vector<double> w(static_cast<size_t>(n1 + n2 + 1));
    for (std::int64_t n = -n1; n <= n2; ++n) w[static_cast<size_t>(n + n1)] = d.pmf(d.mode() + n);
    DiscretePMF out(d.mode() - n1, std::move(w));
    out.normalize();
    return out;
}

}  // namespace logconcave
