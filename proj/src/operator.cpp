#include "gaugedd/operator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gaugedd/errors.hpp"

namespace gaugedd {

double max_abs(const SparseMatrix& m) {
  double out = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) out = std::max(out, std::abs(it.value()));
  }
  return out;
}

double max_abs(const DenseMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

SparseOperator::SparseOperator(SparseMatrix m, bool hermitian)
    : mat_(std::move(m)), hermitian_(hermitian) {
  if (mat_.rows() != mat_.cols()) throw ValidationError("operator must be square");
  prune_zeros();
  if (hermitian_) require_hermitian();
}

SparseOperator SparseOperator::from_triplets(std::size_t dim, const std::vector<Triplet>& entries,
                                             bool hermitian) {
  const auto n = static_cast<Eigen::Index>(dim);
  for (const auto& t : entries) {
    if (t.row() < 0 || t.row() >= n || t.col() < 0 || t.col() >= n) {
      throw ValidationError("triplet index out of range");
    }
  }
  SparseMatrix m(n, n);
  m.setFromTriplets(entries.begin(), entries.end());
  return SparseOperator(std::move(m), hermitian);
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  SparseMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setIdentity();
  return SparseOperator(std::move(m), true);
}

SparseOperator SparseOperator::zero(std::size_t dim) {
  return SparseOperator(SparseMatrix(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)),
                        true);
}

SparseOperator SparseOperator::adjoint() const {
  SparseMatrix a = mat_.adjoint();
  return SparseOperator(std::move(a), hermitian_);
}

double SparseOperator::hermiticity_defect() const {
  SparseMatrix d = mat_ - SparseMatrix(mat_.adjoint());
  return gaugedd::max_abs(d);
}

cplx SparseOperator::coeff(std::size_t row, std::size_t col) const {
  return mat_.coeff(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

SparseOperator SparseOperator::as_hermitian() const { return SparseOperator(mat_, true); }

SparseOperator& SparseOperator::operator+=(const SparseOperator& other) {
  if (other.dim() != dim()) throw ValidationError("dimension mismatch in operator sum");
  mat_ = mat_ + other.mat_;
  hermitian_ = hermitian_ && other.hermitian_;
  prune_zeros();
  return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& other) {
  if (other.dim() != dim()) throw ValidationError("dimension mismatch in operator difference");
  mat_ = mat_ - other.mat_;
  hermitian_ = hermitian_ && other.hermitian_;
  prune_zeros();
  return *this;
}

SparseOperator& SparseOperator::operator*=(cplx s) {
  mat_ *= s;
  hermitian_ = hermitian_ && s.imag() == 0.0;
  prune_zeros();
  return *this;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) throw ValidationError("dimension mismatch in operator product");
  SparseMatrix p = a.mat_ * b.mat_;
  return SparseOperator(std::move(p), false);
}

void SparseOperator::prune_zeros() {
  mat_.prune([](Eigen::Index, Eigen::Index, const cplx& v) { return v != cplx(0.0, 0.0); });
  mat_.makeCompressed();
}

void SparseOperator::require_hermitian() const {
  const double defect = hermiticity_defect();
  const double scale = std::max(1.0, max_abs());
  if (defect >= kHermitianTolerance * scale) {
    std::ostringstream msg;
    msg << "operator flagged Hermitian violates Hermiticity: ||A - A^dag||_max = " << defect;
    throw NumericalError(msg.str());
  }
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  return a * b - b * a;
}

SparseOperator conjugate(const SparseOperator& o, const SparseOperator& u) {
  if (o.dim() != u.dim()) throw ValidationError("dimension mismatch in conjugation");
  SparseMatrix m = SparseMatrix(u.matrix().adjoint()) * o.matrix() * u.matrix();
  return SparseOperator(std::move(m), false);
}

}  // namespace gaugedd
