#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaugedd/operator.hpp"

namespace gaugedd {

/// Eigenvalues in ascending order, optionally with eigenvectors as columns.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::optional<DenseMatrix> eigenvectors;
  std::map<std::string, std::string> metadata;
};

enum class EigenBackend { automatic, dense, lanczos };

struct EigenOptions {
  std::size_t count = 0;  // 0 = all (dense only)
  bool vectors = false;
  EigenBackend backend = EigenBackend::automatic;
  std::size_t dense_threshold = 4096;
  double tolerance = 1e-10;  // Ritz residual relative to ||H||
  std::uint64_t seed = 20210401;
};

Spectrum eigensolve(const SparseOperator& h, const EigenOptions& options = {});

// Lowest `count` eigenpairs by Lanczos with full reorthogonalization and
// locking; degenerate copies are picked up in later restarts.
Spectrum lanczos_lowest(const SparseOperator& h, std::size_t count, double tolerance = 1e-10,
                        std::uint64_t seed = 20210401);

// Max row sum; bounds the spectral norm.
double infinity_norm(const SparseMatrix& m);

}  // namespace gaugedd
