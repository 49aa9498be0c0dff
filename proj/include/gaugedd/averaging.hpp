#pragma once

#include "gaugedd/euler_grid.hpp"
#include "gaugedd/gauge_transform.hpp"

namespace gaugedd {

enum class AveragingMode {
  per_vertex,  // independent element on every vertex
  staggered,   // one element shared by even vertices, one by odd vertices
};

std::string to_string(AveragingMode m);
AveragingMode averaging_mode_from_string(const std::string& s);

// sum_mu w_mu V_x(g_mu)^dag O V_x(g_mu)
SparseOperator group_average_vertex(const GaugeTransformer& gauge, const SparseOperator& o, int x,
                                    const EulerGrid& grid);

// per_vertex: group_average_vertex applied site by site (the site channels commute).
// staggered: double sum over (g_even, g_odd), evaluated as two nested N^3 sums.
SparseOperator group_average_lattice(const GaugeTransformer& gauge, const SparseOperator& o,
                                     const EulerGrid& grid, AveragingMode mode);

}  // namespace gaugedd
