#pragma once

#include <cstdint>

#include "logconcave/discrete_pmf.hpp"
#include "logconcave/grid_density.hpp"

namespace logconcave {

struct ContinuousGenConfig {
    int knot_count = 24;       // >= 2, capped at 256 by the verification suites
    double domain_lo = -3.0;
    double domain_hi = 3.0;
    double slope_scale = 2.0;  // dispersion of the potential slopes
};

struct DiscreteGenConfig {
    int support_len = 31;           // >= 1, capped at 200 by the suites
    double concavity_scale = 0.15;  // dispersion of the log-weight slopes
};

// Draws a random concave piecewise-linear potential (sorted slopes), then
// exponentiates and normalizes. The same seed always yields the same density.
GridDensity gen_logconcave(std::uint64_t seed, const ContinuousGenConfig& cfg = {});

// Discrete analog: concave log-weight sequence, exponentiated and normalized.
DiscretePMF gen_logconcave_pmf(std::uint64_t seed, const DiscreteGenConfig& cfg = {});

// splitmix64 step; used to derive independent per-trial seeds from a base.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

}  // namespace logconcave
