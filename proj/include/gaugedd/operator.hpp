#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace gaugedd {

using cplx = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<cplx>;
using DenseMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Triplet = Eigen::Triplet<cplx>;

inline constexpr double kHermitianTolerance = 1e-12;

// Max-norm helpers shared by operators, checks and tests.
double max_abs(const SparseMatrix& m);
double max_abs(const DenseMatrix& m);

/// Complex sparse operator on a composite basis.
///
/// Entries are assembled from triplets in a fixed order with duplicates
/// summed; exact zeros are never stored. When the hermitian flag is set the
/// constructor verifies ||A - A^dag||_max < 1e-12 * max(1, ||A||_max) and
/// throws NumericalError otherwise. Nothing is symmetrized.
class SparseOperator {
 public:
  SparseOperator() = default;
  explicit SparseOperator(SparseMatrix m, bool hermitian = false);

  static SparseOperator from_triplets(std::size_t dim, const std::vector<Triplet>& entries,
                                      bool hermitian = false);
  static SparseOperator identity(std::size_t dim);
  static SparseOperator zero(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }
  const SparseMatrix& matrix() const { return mat_; }
  bool hermitian() const { return hermitian_; }
  std::size_t nonzeros() const { return static_cast<std::size_t>(mat_.nonZeros()); }

  DenseMatrix dense() const { return DenseMatrix(mat_); }
  SparseOperator adjoint() const;
  double max_abs() const { return gaugedd::max_abs(mat_); }
  // ||A - A^dag||_max
  double hermiticity_defect() const;

  cplx coeff(std::size_t row, std::size_t col) const;

  // Returns a copy carrying the hermitian flag; throws if the check fails.
  SparseOperator as_hermitian() const;

  SparseOperator& operator+=(const SparseOperator& other);
  SparseOperator& operator-=(const SparseOperator& other);
  SparseOperator& operator*=(cplx s);

  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
  friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
  friend SparseOperator operator*(SparseOperator a, cplx s) { return a *= s; }
  friend SparseOperator operator*(cplx s, SparseOperator a) { return a *= s; }
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);

 private:
  void prune_zeros();
  void require_hermitian() const;

  SparseMatrix mat_;
  bool hermitian_ = false;
};

// [A, B] = AB - BA
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

// U^dag O U. The result is unflagged; callers re-flag after reductions.
SparseOperator conjugate(const SparseOperator& o, const SparseOperator& u);

}  // namespace gaugedd
