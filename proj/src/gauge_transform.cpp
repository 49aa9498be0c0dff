#include "gaugedd/gauge_transform.hpp"

#include <algorithm>
#include <numeric>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "gaugedd/errors.hpp"

namespace gaugedd {

namespace {

const cplx kI(0.0, 1.0);

// exp(-i a X3) exp(-i b X2) exp(-i c X3) with a sign applied to every angle.
template <typename Mat>
Mat euler_rotation(const Mat& x2, const Mat& x3, const EulerAngles& g, double sign) {
  const Mat ea = (Mat(x3 * (-kI * sign * g.alpha))).exp();
  const Mat eb = (Mat(x2 * (-kI * sign * g.beta))).exp();
  const Mat ec = (Mat(x3 * (-kI * sign * g.gamma))).exp();
  return ea * eb * ec;
}

}  // namespace

VertexAssignment VertexAssignment::per_vertex(int n_sites) {
  VertexAssignment a;
  a.element_of_site.resize(static_cast<std::size_t>(n_sites));
  std::iota(a.element_of_site.begin(), a.element_of_site.end(), std::size_t{0});
  return a;
}

VertexAssignment VertexAssignment::staggered(int n_sites) {
  VertexAssignment a;
  for (int x = 0; x < n_sites; ++x) a.element_of_site.push_back(static_cast<std::size_t>(x % 2));
  return a;
}

std::size_t VertexAssignment::n_elements() const {
  if (element_of_site.empty()) return 0;
  return *std::max_element(element_of_site.begin(), element_of_site.end()) + 1;
}

void VertexAssignment::validate(int n_sites, std::size_t available_elements) const {
  if (static_cast<int>(element_of_site.size()) != n_sites) {
    throw ValidationError("vertex assignment must map every site exactly once");
  }
  for (std::size_t e : element_of_site) {
    if (e >= available_elements) throw ValidationError("vertex assignment refers to a missing group element");
  }
}

SparseMatrix sparse_from_dense(const DenseMatrix& m) {
  std::vector<Triplet> entries;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != cplx(0.0)) entries.emplace_back(static_cast<int>(i), static_cast<int>(j), m(i, j));
    }
  }
  SparseMatrix out(m.rows(), m.cols());
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

GaugeTransformer::GaugeTransformer(CompositeBasis basis) : basis_(std::move(basis)) {
  for (int x = 0; x < basis_.lattice().n_sites; ++x) {
    sites_.push_back({DenseMatrix(charge_factor(basis_.fermion(), x, 2)),
                      DenseMatrix(charge_factor(basis_.fermion(), x, 3))});
  }
}

DenseMatrix GaugeTransformer::fermion_rotation(int x, const EulerAngles& g) const {
  const auto& f = sites_.at(static_cast<std::size_t>(x));
  // G contains -Q, hence the flipped sign.
  return euler_rotation<DenseMatrix>(f.charge2, f.charge3, g, -1.0);
}

SparseOperator GaugeTransformer::vertex_unitary(int x, const EulerAngles& g) const {
  const std::array<int, 1> site = {x};
  return shared_unitary(site, g);
}

SparseOperator GaugeTransformer::shared_unitary(std::span<const int> sites, const EulerAngles& g) const {
  g.validate();
  const auto& lat = basis_.lattice();
  const auto nf = static_cast<Eigen::Index>(basis_.fermion().size());
  const auto nl = static_cast<Eigen::Index>(basis_.link().size());
  SparseMatrix fermion(nf, nf);
  fermion.setIdentity();
  SparseMatrix links(nl, nl);
  links.setIdentity();
  const LinkMatrix l2 = local::left_field(2), l3 = local::left_field(3);
  const LinkMatrix r2 = local::right_field(2), r3 = local::right_field(3);
  for (int x : sites) {
    if (x < 0 || x >= lat.n_sites) throw ValidationError("site index out of range");
    fermion = sparse_from_dense(fermion_rotation(x, g)) * fermion;
    if (const auto out = lat.outgoing_link(x)) {
      links = link_factor(basis_.link(), *out, euler_rotation<LinkMatrix>(l2, l3, g, 1.0)) * links;
    }
    if (const auto in = lat.incoming_link(x)) {
      links = link_factor(basis_.link(), *in, euler_rotation<LinkMatrix>(r2, r3, g, -1.0)) * links;
    }
  }
  SparseMatrix v = Eigen::kroneckerProduct(fermion, links);
  return SparseOperator(std::move(v), false);
}

SparseOperator GaugeTransformer::lattice_unitary(const VertexAssignment& assignment,
                                                 std::span<const EulerAngles> elements,
                                                 std::span<const int> site_order) const {
  const int n = basis_.lattice().n_sites;
  assignment.validate(n, elements.size());
  std::vector<int> order(site_order.begin(), site_order.end());
  if (order.empty()) {
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<int> seen = order;
  std::sort(seen.begin(), seen.end());
  if (static_cast<int>(seen.size()) != n || std::adjacent_find(seen.begin(), seen.end()) != seen.end() ||
      seen.front() != 0 || seen.back() != n - 1) {
    throw ValidationError("site order must list every site exactly once");
  }
  SparseOperator u = SparseOperator::identity(dim());
  for (int x : order) {
    u = u * vertex_unitary(x, elements[assignment.element_of_site[static_cast<std::size_t>(x)]]);
  }
  return u;
}

SparseOperator gauge_unitary(const CompositeBasis& basis, int x, const EulerAngles& g) {
  return GaugeTransformer(basis).vertex_unitary(x, g);
}

}  // namespace gaugedd
