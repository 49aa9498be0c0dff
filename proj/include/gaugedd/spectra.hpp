#pragma once

#include <string>
#include <vector>

#include "gaugedd/averaging.hpp"
#include "gaugedd/eigensolve.hpp"
#include "gaugedd/model.hpp"

namespace gaugedd {

struct Cluster {
  double value = 0.0;  // mean of the members
  std::size_t multiplicity = 0;
};

struct DegeneracyTable {
  std::vector<Cluster> clusters;
};

inline constexpr double kDefaultClusterRelTol = 1e-8;
inline constexpr double kMergedClusterRelTol = 1e-2;

// rel_tol * spectral range (rel_tol * max(1, |E_0|) for a flat spectrum)
double cluster_tolerance(const std::vector<double>& eigenvalues, double rel_tol = kDefaultClusterRelTol);

// Single-linkage clustering of the sorted eigenvalues: neighbours closer than
// or equal to `tol` share a cluster.
DegeneracyTable cluster_degeneracies(const Spectrum& spectrum, double tol);
DegeneracyTable cluster_degeneracies(const Spectrum& spectrum);

struct GaussSector {
  DenseMatrix basis;      // orthonormal columns spanning ker sum G^2
  DenseMatrix projector;  // basis * basis^dag
  std::size_t dimension = 0;
};

GaussSector gauss_kernel_projector(const CompositeBasis& basis);

// max-norm of AB - BA
double commutator_norm(const SparseOperator& a, const SparseOperator& b);

struct ConvergenceRow {
  int n = 0;
  std::size_t level_index = 0;
  double energy = 0.0;
  std::size_t multiplicity = 0;
  double reference_energy = 0.0;
  double rel_error = 0.0;
  GridScheme scheme = GridScheme::haar_exact;
  Boundary boundary = Boundary::periodic;
};

struct ConvergenceOptions {
  Perturbation perturbation = Perturbation::charge;
  std::vector<int> n_list;
  GridScheme scheme = GridScheme::haar_exact;
  AveragingMode mode = AveragingMode::per_vertex;
  std::size_t levels = 3;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  std::vector<Cluster> reference;  // distinct H_LGT levels
};

// For each N: eigenvalues of H_LGT + Pi_N(H_P) against the H_LGT reference.
ConvergenceTable convergence_study(const LatticeConfig& cfg, const ModelParams& params,
                                   const ConvergenceOptions& options);

}  // namespace gaugedd
