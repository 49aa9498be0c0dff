#include "gaugedd/averaging.hpp"

#include "gaugedd/errors.hpp"

namespace gaugedd {

namespace {

void require_matching(const GaugeTransformer& gauge, const SparseOperator& o) {
  if (o.dim() != gauge.dim()) throw ValidationError("operator dimension does not match the basis");
}

SparseOperator finish(SparseOperator sum, const SparseOperator& source) {
  return source.hermitian() ? sum.as_hermitian() : sum;
}

}  // namespace

std::string to_string(AveragingMode m) { return m == AveragingMode::per_vertex ? "per-vertex" : "staggered"; }

AveragingMode averaging_mode_from_string(const std::string& s) {
  if (s == "per-vertex" || s == "per_vertex") return AveragingMode::per_vertex;
  if (s == "staggered") return AveragingMode::staggered;
  throw ValidationError("unknown averaging mode '" + s + "' (expected per-vertex|staggered)");
}

SparseOperator group_average_vertex(const GaugeTransformer& gauge, const SparseOperator& o, int x,
                                    const EulerGrid& grid) {
  require_matching(gauge, o);
  SparseOperator sum = SparseOperator::zero(o.dim());
  for (const auto& p : grid.points()) {
    sum += conjugate(o, gauge.vertex_unitary(x, p.angles)) * p.weight;
  }
  return finish(std::move(sum), o);
}

SparseOperator group_average_lattice(const GaugeTransformer& gauge, const SparseOperator& o,
                                     const EulerGrid& grid, AveragingMode mode) {
  require_matching(gauge, o);
  const int n_sites = gauge.basis().lattice().n_sites;
  if (mode == AveragingMode::per_vertex) {
    SparseOperator out = o;
    for (int x = 0; x < n_sites; ++x) out = group_average_vertex(gauge, out, x, grid);
    return out;
  }

  std::vector<int> even, odd;
  for (int x = 0; x < n_sites; ++x) (x % 2 == 0 ? even : odd).push_back(x);
  // sum_ij w_i w_j (V_e(i) V_o(j))^dag O V_e(i) V_o(j), nested by linearity:
  // the even average first, then the odd one. V_e and V_o commute.
  auto shared_average = [&](const SparseOperator& in, const std::vector<int>& sites) {
    SparseOperator acc = SparseOperator::zero(in.dim());
    for (const auto& p : grid.points()) acc += conjugate(in, gauge.shared_unitary(sites, p.angles)) * p.weight;
    return acc;
  };
  SparseOperator sum = shared_average(o, even);
  if (!odd.empty()) sum = shared_average(sum, odd);
  return finish(std::move(sum), o);
}

}  // namespace gaugedd
