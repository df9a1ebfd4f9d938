#include "logconcave/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace logconcave {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

GridDensity gen_logconcave(std::uint64_t seed, const ContinuousGenConfig& cfg) {
    if (cfg.knot_count < 2) throw std::invalid_argument("gen_logconcave: knot_count must be >= 2");
    if (!(cfg.domain_lo < cfg.domain_hi)) throw std::invalid_argument("gen_logconcave: empty domain");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const int k = cfg.knot_count;
    // Blend sorted uniforms with the regular grid; the regular part keeps the
    // knots strictly increasing.
    std::vector<double> u(static_cast<size_t>(k));
    for (double& v : u) v = unif(rng);
    std::sort(u.begin(), u.end());
    u.front() = 0.0;
    u.back() = 1.0;
    std::vector<double> knots(static_cast<size_t>(k));
    const double span = cfg.domain_hi - cfg.domain_lo;
    for (int i = 0; i < k; ++i) {
        const double frac = static_cast<double>(i) / (k - 1);
        knots[static_cast<size_t>(i)] = cfg.domain_lo + span * (0.5 * frac + 0.5 * u[static_cast<size_t>(i)]);
    }

    // Concave potential: slopes sorted in decreasing order plus a tilt.
    std::vector<double> slopes(static_cast<size_t>(k - 1));
    for (double& s : slopes) s = gauss(rng) * cfg.slope_scale;
    std::sort(slopes.rbegin(), slopes.rend());
    const double tilt = gauss(rng) * cfg.slope_scale * 0.5;

    std::vector<double> logvals(static_cast<size_t>(k), 0.0);
    for (int i = 0; i + 1 < k; ++i)
        logvals[static_cast<size_t>(i + 1)] =
            logvals[static_cast<size_t>(i)] +
            (slopes[static_cast<size_t>(i)] + tilt) * (knots[static_cast<size_t>(i + 1)] - knots[static_cast<size_t>(i)]);

    GridDensity g(std::move(knots), std::move(logvals));
    g.normalize();
    return g;
}

DiscretePMF gen_logconcave_pmf(std::uint64_t seed, const DiscreteGenConfig& cfg) {
    if (cfg.support_len < 1) throw std::invalid_argument("gen_logconcave_pmf: support_len must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> off(-20, 20);

    const int n = cfg.support_len;
    std::vector<double> slopes(static_cast<size_t>(std::max(n - 1, 0)));
    for (double& s : slopes) s = gauss(rng) * cfg.concavity_scale * 10.0 / std::max(n, 2);
    std::sort(slopes.rbegin(), slopes.rend());
    const double tilt = gauss(rng) * cfg.concavity_scale;

    std::vector<double> logw(static_cast<size_t>(n), 0.0);
    for (int i = 0; i + 1 < n; ++i)
        logw[static_cast<size_t>(i + 1)] = logw[static_cast<size_t>(i)] + slopes[static_cast<size_t>(i)] + tilt;
    const double shift = *std::max_element(logw.begin(), logw.end());
    std::vector<double> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = std::exp(logw[static_cast<size_t>(i)] - shift);

    DiscretePMF g(off(rng), std::move(w));
    g.normalize();
    return g;
}

}  // namespace logconcave
