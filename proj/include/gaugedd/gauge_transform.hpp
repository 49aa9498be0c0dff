#pragma once

#include <span>
#include <vector>

#include "gaugedd/euler_grid.hpp"
#include "gaugedd/hilbert.hpp"
#include "gaugedd/ops.hpp"

namespace gaugedd {

/// Which group element each vertex receives.
struct VertexAssignment {
  std::vector<std::size_t> element_of_site;

  // site x -> element x
  static VertexAssignment per_vertex(int n_sites);
  // even sites -> element 0, odd sites -> element 1
  static VertexAssignment staggered(int n_sites);

  std::size_t n_elements() const;
  void validate(int n_sites, std::size_t available_elements) const;
};

/// Builds local gauge unitaries V_x(g) = exp(-i a G3(x)) exp(-i b G2(x)) exp(-i c G3(x)).
///
/// G_a(x) splits into commuting pieces on the fermion factor (-Q_a(x)), the
/// outgoing link (L_a) and the incoming link (-R_a). Each piece is exponentiated
/// densely on its own factor and the result embedded with a Kronecker product,
/// so the composite matrix never gets exponentiated.
class GaugeTransformer {
 public:
  explicit GaugeTransformer(CompositeBasis basis);

  const CompositeBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  SparseOperator vertex_unitary(int x, const EulerAngles& g) const;

  // Ordered product over `site_order` (default 0..n-1) of V_x(elements[assignment(x)]).
  SparseOperator lattice_unitary(const VertexAssignment& assignment, std::span<const EulerAngles> elements,
                                 std::span<const int> site_order = {}) const;

  // Same product with one element shared by all sites in `sites`.
  SparseOperator shared_unitary(std::span<const int> sites, const EulerAngles& g) const;

 private:
  struct SiteFactors {
    DenseMatrix charge2;  // Q_2(x) on the fermion factor
    DenseMatrix charge3;
  };

  DenseMatrix fermion_rotation(int x, const EulerAngles& g) const;

  CompositeBasis basis_;
  std::vector<SiteFactors> sites_;
};

// Convenience wrapper constructing a transformer for one call.
SparseOperator gauge_unitary(const CompositeBasis& basis, int x, const EulerAngles& g);

// Converts a dense matrix to sparse, dropping only exact zeros.
SparseMatrix sparse_from_dense(const DenseMatrix& m);

}  // namespace gaugedd
