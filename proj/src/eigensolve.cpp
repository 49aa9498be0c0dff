#include "gaugedd/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "gaugedd/errors.hpp"

namespace gaugedd {

namespace {

void require_hermitian_input(const SparseOperator& h) {
  const double defect = h.hermiticity_defect();
  if (defect >= kHermitianTolerance * std::max(1.0, h.max_abs())) {
    std::ostringstream msg;
    msg << "eigensolve requires a Hermitian operator (||H - H^dag||_max = " << defect << ")";
    throw NumericalError(msg.str());
  }
}

void check_residuals(const SparseOperator& h, const Spectrum& s) {
  if (!s.eigenvectors) return;
  const double scale = std::max(1.0, infinity_norm(h.matrix()));
  const auto& v = *s.eigenvectors;
  for (Eigen::Index i = 0; i < v.cols(); ++i) {
    const double r = (h.matrix() * v.col(i) - s.eigenvalues[static_cast<std::size_t>(i)] * v.col(i)).norm();
    if (r > 1e-8 * scale) {
      std::ostringstream msg;
      msg << "eigenpair " << i << " residual " << r << " exceeds 1e-8 * ||H||";
      throw NumericalError(msg.str());
    }
  }
}

Spectrum dense_solve(const SparseOperator& h, std::size_t count, bool vectors) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h.dense(), vectors ? Eigen::ComputeEigenvectors
                                                                    : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("dense eigensolver failed");
  const auto n = static_cast<std::size_t>(es.eigenvalues().size());
  const std::size_t k = count == 0 ? n : std::min(count, n);
  Spectrum s;
  s.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + k);
  if (vectors) s.eigenvectors = es.eigenvectors().leftCols(static_cast<Eigen::Index>(k));
  s.metadata["backend"] = "dense";
  return s;
}

// Removes components along the columns of `basis` (two passes).
void orthogonalize(Vector& w, const DenseMatrix& basis, Eigen::Index cols) {
  if (cols == 0) return;
  for (int pass = 0; pass < 2; ++pass) {
    const Vector c = basis.leftCols(cols).adjoint() * w;
    w -= basis.leftCols(cols) * c;
  }
}

Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  Vector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(dist(rng), dist(rng));
  return v;
}

}  // namespace

double infinity_norm(const SparseMatrix& m) {
  Eigen::VectorXd rows = Eigen::VectorXd::Zero(m.rows());
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) rows(it.row()) += std::abs(it.value());
  }
  return rows.size() == 0 ? 0.0 : rows.maxCoeff();
}

Spectrum lanczos_lowest(const SparseOperator& h, std::size_t count, double tolerance, std::uint64_t seed) {
  require_hermitian_input(h);
  const std::size_t n = h.dim();
  if (count == 0 || count > n) throw ValidationError("Lanczos needs 0 < count <= dim");
  const double scale = std::max(1.0, infinity_norm(h.matrix()));
  const double tol = tolerance * scale;
  std::mt19937_64 rng(seed);

  DenseMatrix locked(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(count) + 64);
  std::vector<double> locked_values;
  const std::size_t max_rounds = 4 * count + 64;
  const std::size_t base_krylov = std::max<std::size_t>(3 * count + 40, 80);
  std::size_t krylov = base_krylov;
  // Explicit restart: a round that locks nothing seeds the next one with its
  // wanted Ritz vectors and a doubled Krylov size.
  std::optional<Vector> restart;

  for (std::size_t round = 0; round < max_rounds; ++round) {
    const std::size_t p = locked_values.size();
    if (p == n) break;
    const auto pe = static_cast<Eigen::Index>(p);
    const std::size_t m_max = std::min<std::size_t>(n - p, krylov);

    DenseMatrix q(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m_max));
    std::vector<double> alpha, beta;
    Vector v = restart ? *restart : random_vector(n, rng);
    restart.reset();
    orthogonalize(v, locked, pe);
    v.normalize();
    q.col(0) = v;

    Eigen::VectorXd theta;
    Eigen::MatrixXd s;
    Eigen::Index m = 0;
    bool exhausted = false;
    for (std::size_t j = 0; j < m_max; ++j) {
      const auto je = static_cast<Eigen::Index>(j);
      Vector w = h.matrix() * q.col(je);
      alpha.push_back((q.col(je).adjoint() * w).value().real());
      orthogonalize(w, q, je + 1);
      orthogonalize(w, locked, pe);
      const double b = w.norm();
      m = je + 1;
      const bool last = (j + 1 == m_max) || b < 1e-12 * scale;
      if (last || (j + 1) % 5 == 0) {
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i) t(i, i) = alpha[static_cast<std::size_t>(i)];
        for (Eigen::Index i = 0; i + 1 < m; ++i) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tes(t);
        theta = tes.eigenvalues();
        s = tes.eigenvectors();
        const std::size_t want = std::min<std::size_t>(count > p ? count - p : 1, static_cast<std::size_t>(m));
        bool done = true;
        for (std::size_t i = 0; i < want; ++i) {
          if (b * std::abs(s(m - 1, static_cast<Eigen::Index>(i))) > tol) done = false;
        }
        if (b < 1e-12 * scale) exhausted = true;
        if (done || last) {
          // residual estimates for locking below
          beta.push_back(b);
          break;
        }
      }
      beta.push_back(b);
      q.col(je + 1) = w / b;
    }

    const double b_last = beta.back();
    std::vector<std::pair<double, Vector>> ritz;
    for (Eigen::Index i = 0; i < m; ++i) {
      const double resid = exhausted ? 0.0 : b_last * std::abs(s(m - 1, i));
      if (resid > tol) break;
      Vector y = q.leftCols(m) * s.col(i).cast<cplx>();
      y.normalize();
      ritz.emplace_back(theta(i), std::move(y));
    }
    if (ritz.empty()) {
      const std::size_t want = std::min<std::size_t>(count > p ? count - p : 1, static_cast<std::size_t>(m));
      Vector seed_vec = Vector::Zero(static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < want; ++i) {
        seed_vec += q.leftCols(m) * s.col(static_cast<Eigen::Index>(i)).cast<cplx>();
      }
      restart = seed_vec;
      krylov = std::min(2 * krylov, n);
      continue;
    }
    krylov = base_krylov;

    if (p >= count) {
      std::vector<double> sorted = locked_values;
      std::sort(sorted.begin(), sorted.end());
      if (ritz.front().first >= sorted[count - 1] - tol) break;
    }
    for (auto& [value, vec] : ritz) {
      const auto col = static_cast<Eigen::Index>(locked_values.size());
      if (col >= locked.cols()) locked.conservativeResize(Eigen::NoChange, locked.cols() + 64);
      Vector y = vec;
      orthogonalize(y, locked, col);
      y.normalize();
      locked.col(col) = y;
      locked_values.push_back(value);
      if (locked_values.size() == n) break;
    }
  }

  if (locked_values.size() < count) {
    std::ostringstream msg;
    msg << "Lanczos did not converge: " << locked_values.size() << " of " << count << " eigenpairs";
    throw NumericalError(msg.str());
  }
  std::vector<std::size_t> order(locked_values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return locked_values[a] < locked_values[b]; });
  Spectrum out;
  DenseMatrix vecs(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(count));
  for (std::size_t i = 0; i < count; ++i) {
    out.eigenvalues.push_back(locked_values[order[i]]);
    vecs.col(static_cast<Eigen::Index>(i)) = locked.col(static_cast<Eigen::Index>(order[i]));
  }
  // Rayleigh-Ritz on the locked set tidies the values.
  const DenseMatrix hv = h.matrix() * vecs;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> small(vecs.adjoint() * hv);
  out.eigenvalues.assign(small.eigenvalues().data(), small.eigenvalues().data() + count);
  out.eigenvectors = vecs * small.eigenvectors();
  out.metadata["backend"] = "lanczos";
  check_residuals(h, out);
  return out;
}

Spectrum eigensolve(const SparseOperator& h, const EigenOptions& options) {
  require_hermitian_input(h);
  const bool dense = options.backend == EigenBackend::dense ||
                     (options.backend == EigenBackend::automatic && h.dim() <= options.dense_threshold);
  if (dense) {
    Spectrum s = dense_solve(h, options.count, options.vectors);
    check_residuals(h, s);
    return s;
  }
  if (options.count == 0) throw ValidationError("iterative eigensolver needs an explicit eigenvalue count");
  Spectrum s = lanczos_lowest(h, options.count, options.tolerance, options.seed);
  if (!options.vectors) s.eigenvectors.reset();
  return s;
}

}  // namespace gaugedd
