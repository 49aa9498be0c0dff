#pragma once

#include <optional>

#include "gaugedd/hilbert.hpp"
#include "gaugedd/operator.hpp"

namespace gaugedd {

using LinkMatrix = Eigen::Matrix<cplx, kLinkDim, kLinkDim>;

// Pauli matrix sigma^a, a in {1,2,3}; row/col 0 is up, 1 is down.
Eigen::Matrix2cd pauli(int a);
int levi_civita(int a, int b, int c);
void validate_generator_index(int a);

// Single-link index set {0, up, down} used to label (ml) pairs.
enum class LinkIndex : int { none = 0, up = 1, down = 2 };
std::optional<LinkMode> link_mode(LinkIndex m, LinkIndex l);

// Operators on the five-level factor of one link.
namespace local {

// b^dag_{created} b_{annihilated}
LinkMatrix link_bilinear(LinkMode created, LinkMode annihilated);
// L_a = 1/2 sum_{lmn} b^dag_{ml} sigma^a_{nm} b_{nl}
LinkMatrix left_field(int a);
// R_a = 1/2 sum_{lmn} b^dag_{lm} sigma^a_{mn} b_{ln}
LinkMatrix right_field(int a);
// J^2 = sum_a R_a R_a
LinkMatrix casimir();
// Truncated link operator U_mn, entries scaled by 1/sqrt(2).
LinkMatrix link_matrix(Spin m, Spin n);

}  // namespace local

// Factor-space builders. The fermion factor uses Jordan-Wigner signs in the
// global site-major mode order.
SparseMatrix fermion_bilinear_factor(const FermionBasis& basis, int x, Spin m, int y, Spin n);
SparseMatrix charge_factor(const FermionBasis& basis, int x, int a);
SparseMatrix link_factor(const LinkBasis& basis, int link, const LinkMatrix& op);

// F (x) B on the composite space, F on the fermion factor, B on the link factor.
SparseOperator kron_fermion_link(const CompositeBasis& basis, const SparseMatrix& f,
                                 const SparseMatrix& b, bool hermitian = false);
SparseOperator lift_fermion(const CompositeBasis& basis, const SparseMatrix& f, bool hermitian = false);
SparseOperator lift_link(const CompositeBasis& basis, int link, const LinkMatrix& op,
                         bool hermitian = false);

// psi^dag_m(x) psi_n(y)
SparseOperator fermion_bilinear(const CompositeBasis& basis, int x, Spin m, int y, Spin n);
// b^dag_{created} b_{annihilated} on one link
SparseOperator boson_bilinear(const CompositeBasis& basis, int link, LinkMode created,
                              LinkMode annihilated);
SparseOperator left_field(const CompositeBasis& basis, int link, int a);
SparseOperator right_field(const CompositeBasis& basis, int link, int a);
SparseOperator casimir(const CompositeBasis& basis, int link);
// Q_a(x) = 1/2 sum_{kl} psi^dag_k(x) sigma^a_{kl} psi_l(x)
SparseOperator charge(const CompositeBasis& basis, int x, int a);
SparseOperator link_matrix(const CompositeBasis& basis, int link, Spin m, Spin n);
SparseOperator total_fermion_number(const CompositeBasis& basis);

}  // namespace gaugedd
