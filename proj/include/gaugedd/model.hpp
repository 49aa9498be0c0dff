#pragma once

#include <array>

#include "gaugedd/hilbert.hpp"
#include "gaugedd/operator.hpp"

namespace gaugedd {

/// Physical couplings in absolute energy units.
struct ModelParams {
  double mass = 1.0;         // M
  double coupling_sq = 1.8;  // g^2
  double hopping = 1.1;      // epsilon
  std::array<double, 3> gamma = {0.0, 0.0, 0.0};
  double t_dir = 0.0;

  void validate() const;

  // Builds absolute couplings from the dimensionless ratios g^2/(2M), eps/M,
  // gamma/M and t_dir/M.
  static ModelParams from_ratios(double mass, double coupling_sq_over_2m, double eps_over_m,
                                 std::array<double, 3> gamma_over_m, double t_dir_over_m);
};

// M sum_x (-1)^x psi^dag_m(x) psi_m(x)
SparseOperator h_fermion(const CompositeBasis& basis, const ModelParams& params);
// g^2/2 sum_links J^2
SparseOperator h_gauge(const CompositeBasis& basis, const ModelParams& params);
// eps sum_links [psi^dag_m(x) U_mn psi_n(x+1) + h.c.]
SparseOperator h_int(const CompositeBasis& basis, const ModelParams& params);
SparseOperator h_lgt(const CompositeBasis& basis, const ModelParams& params);

// G_a(x) = L_a(outgoing link) - R_a(incoming link) - Q_a(x); links missing at
// an open boundary are omitted.
SparseOperator gauss(const CompositeBasis& basis, int x, int a);

// sum_{x,a} gamma_a Q_a(x)
SparseOperator perturbation_charge(const CompositeBasis& basis, const ModelParams& params);
// -t_dir sum_{links,m} [psi^dag_m(x) psi_m(x+1) + h.c.]
SparseOperator perturbation_tunneling(const CompositeBasis& basis, const ModelParams& params);

// sum_{x,a} G_a(x)^2; its kernel is the gauge-invariant sector.
SparseOperator gauge_violation_operator(const CompositeBasis& basis);

enum class Perturbation { none, charge, tunneling };
std::string to_string(Perturbation p);
Perturbation perturbation_from_string(const std::string& s);
SparseOperator perturbation(const CompositeBasis& basis, const ModelParams& params, Perturbation kind);

}  // namespace gaugedd
