#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "logconcave/discrete_pmf.hpp"
#include "logconcave/grid_density.hpp"

namespace logconcave {

// File formats:
//   grid density: header "x,logf", rows of ascending knots (logf may be -inf)
//   discrete pmf: header "n,p", rows of consecutive integers, p >= 0
// Parsers reject unsorted knots, non-contiguous integers, negative weights
// and malformed rows (std::invalid_argument); inputs are normalized on load.

GridDensity read_grid_density_csv(std::istream& in);
DiscretePMF read_discrete_pmf_csv(std::istream& in);

// Dispatches on the header line.
std::variant<GridDensity, DiscretePMF> read_distribution_csv(std::istream& in);
std::variant<GridDensity, DiscretePMF> read_distribution_file(const std::string& path);

void write_grid_density_csv(std::ostream& out, const GridDensity& g);
void write_discrete_pmf_csv(std::ostream& out, const DiscretePMF& g);

}  // namespace logconcave
