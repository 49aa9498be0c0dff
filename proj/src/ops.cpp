#include "gaugedd/ops.hpp"

#include <bit>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "gaugedd/errors.hpp"

namespace gaugedd {

namespace {

constexpr std::array<LinkIndex, 3> kLinkIndices = {LinkIndex::none, LinkIndex::up, LinkIndex::down};

// sigma^a extended to {0, up, down} with sigma^a_{00} = 0 (and the 0 row/col zero).
cplx extended_pauli(int a, LinkIndex row, LinkIndex col) {
  if (row == LinkIndex::none || col == LinkIndex::none) return 0.0;
  return pauli(a)(static_cast<int>(row) - 1, static_cast<int>(col) - 1);
}

void validate_site(const LatticeConfig& lat, int x) {
  if (x < 0 || x >= lat.n_sites) throw ValidationError("site index out of range");
}

void validate_spin(Spin s) {
  if (s != Spin::up && s != Spin::down) throw ValidationError("spin label must be up or down");
}

void validate_link_mode(LinkMode m) {
  const int v = static_cast<int>(m);
  if (v < 0 || v >= kLinkDim) throw ValidationError("invalid link mode label");
}

int parity_below(std::uint64_t bits, int mode) {
  const std::uint64_t mask = (std::uint64_t{1} << mode) - 1;
  return std::popcount(bits & mask) & 1;
}

}  // namespace

Eigen::Matrix2cd pauli(int a) {
  validate_generator_index(a);
  Eigen::Matrix2cd s;
  switch (a) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cplx(0, -1), cplx(0, 1), 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

int levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  // even permutations of (1,2,3)
  if ((a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1)) return 1;
  return -1;
}

void validate_generator_index(int a) {
  if (a < 1 || a > 3) throw ValidationError("generator index a must be 1, 2 or 3");
}

std::optional<LinkMode> link_mode(LinkIndex m, LinkIndex l) {
  using I = LinkIndex;
  if (m == I::none && l == I::none) return LinkMode::vacuum;
  if (m == I::up && l == I::up) return LinkMode::up_up;
  if (m == I::down && l == I::down) return LinkMode::down_down;
  if (m == I::up && l == I::down) return LinkMode::up_down;
  if (m == I::down && l == I::up) return LinkMode::down_up;
  return std::nullopt;
}

namespace local {

LinkMatrix link_bilinear(LinkMode created, LinkMode annihilated) {
  validate_link_mode(created);
  validate_link_mode(annihilated);
  LinkMatrix m = LinkMatrix::Zero();
  m(static_cast<int>(created), static_cast<int>(annihilated)) = 1.0;
  return m;
}

LinkMatrix left_field(int a) {
  validate_generator_index(a);
  LinkMatrix out = LinkMatrix::Zero();
  for (LinkIndex l : kLinkIndices) {
    for (LinkIndex m : kLinkIndices) {
      for (LinkIndex n : kLinkIndices) {
        const auto ml = link_mode(m, l);
        const auto nl = link_mode(n, l);
        if (!ml || !nl) continue;
        const cplx s = extended_pauli(a, n, m);
        if (s == cplx(0.0)) continue;
        out += 0.5 * s * link_bilinear(*ml, *nl);
      }
    }
  }
  return out;
}

LinkMatrix right_field(int a) {
  validate_generator_index(a);
  LinkMatrix out = LinkMatrix::Zero();
  for (LinkIndex l : kLinkIndices) {
    for (LinkIndex m : kLinkIndices) {
      for (LinkIndex n : kLinkIndices) {
        const auto lm = link_mode(l, m);
        const auto ln = link_mode(l, n);
        if (!lm || !ln) continue;
        const cplx s = extended_pauli(a, m, n);
        if (s == cplx(0.0)) continue;
        out += 0.5 * s * link_bilinear(*lm, *ln);
      }
    }
  }
  return out;
}

LinkMatrix casimir() {
  LinkMatrix out = LinkMatrix::Zero();
  for (int a = 1; a <= 3; ++a) out += right_field(a) * right_field(a);
  return out;
}

LinkMatrix link_matrix(Spin m, Spin n) {
  validate_spin(m);
  validate_spin(n);
  using M = LinkMode;
  const double r = 1.0 / std::sqrt(2.0);
  LinkMatrix u;
  if (m == Spin::up && n == Spin::up) {
    u = link_bilinear(M::up_up, M::vacuum) + link_bilinear(M::vacuum, M::down_down);
  } else if (m == Spin::up && n == Spin::down) {
    u = link_bilinear(M::up_down, M::vacuum) - link_bilinear(M::vacuum, M::down_up);
  } else if (m == Spin::down && n == Spin::up) {
    u = link_bilinear(M::down_up, M::vacuum) - link_bilinear(M::vacuum, M::up_down);
  } else {
    u = link_bilinear(M::vacuum, M::up_up) + link_bilinear(M::down_down, M::vacuum);
  }
  return r * u;
}

}  // namespace local

SparseMatrix fermion_bilinear_factor(const FermionBasis& basis, int x, Spin m, int y, Spin n) {
  validate_site(basis.lattice(), x);
  validate_site(basis.lattice(), y);
  validate_spin(m);
  validate_spin(n);
  const int p = fermion_mode(x, m);
  const int q = fermion_mode(y, n);
  std::vector<Triplet> entries;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const std::uint64_t s = basis.state(col);
    if (!((s >> q) & 1U)) continue;
    const std::uint64_t s1 = s ^ (std::uint64_t{1} << q);
    int sign = parity_below(s1, q);
    if ((s1 >> p) & 1U) continue;
    const std::uint64_t s2 = s1 | (std::uint64_t{1} << p);
    sign ^= parity_below(s1, p);
    const auto row = basis.index(s2);
    entries.emplace_back(static_cast<int>(*row), static_cast<int>(col), sign ? -1.0 : 1.0);
  }
  const auto d = static_cast<Eigen::Index>(basis.size());
  SparseMatrix out(d, d);
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

SparseMatrix charge_factor(const FermionBasis& basis, int x, int a) {
  const auto s = pauli(a);
  const auto d = static_cast<Eigen::Index>(basis.size());
  SparseMatrix out(d, d);
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      if (s(k, l) == cplx(0.0)) continue;
      out += 0.5 * s(k, l) * fermion_bilinear_factor(basis, x, Spin(k), x, Spin(l));
    }
  }
  return out;
}

SparseMatrix link_factor(const LinkBasis& basis, int link, const LinkMatrix& op) {
  if (link < 0 || link >= basis.n_links()) throw ValidationError("link index out of range");
  std::vector<Triplet> entries;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto from = basis.mode(col, link);
    for (int to = 0; to < kLinkDim; ++to) {
      const cplx v = op(to, static_cast<int>(from));
      if (v == cplx(0.0)) continue;
      entries.emplace_back(static_cast<int>(basis.with_mode(col, link, LinkMode(to))),
                           static_cast<int>(col), v);
    }
  }
  const auto d = static_cast<Eigen::Index>(basis.size());
  SparseMatrix out(d, d);
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

SparseOperator kron_fermion_link(const CompositeBasis& basis, const SparseMatrix& f,
                                 const SparseMatrix& b, bool hermitian) {
  if (f.rows() != static_cast<Eigen::Index>(basis.fermion().size()) ||
      b.rows() != static_cast<Eigen::Index>(basis.link().size())) {
    throw ValidationError("factor dimensions do not match the composite basis");
  }
  SparseMatrix k = Eigen::kroneckerProduct(f, b);
  return SparseOperator(std::move(k), hermitian);
}

namespace {

SparseMatrix sparse_identity(std::size_t n) {
  SparseMatrix id(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  id.setIdentity();
  return id;
}

}  // namespace

SparseOperator lift_fermion(const CompositeBasis& basis, const SparseMatrix& f, bool hermitian) {
  return kron_fermion_link(basis, f, sparse_identity(basis.link().size()), hermitian);
}

SparseOperator lift_link(const CompositeBasis& basis, int link, const LinkMatrix& op, bool hermitian) {
  return kron_fermion_link(basis, sparse_identity(basis.fermion().size()),
                           link_factor(basis.link(), link, op), hermitian);
}

SparseOperator fermion_bilinear(const CompositeBasis& basis, int x, Spin m, int y, Spin n) {
  const bool diagonal = (x == y && m == n);
  return lift_fermion(basis, fermion_bilinear_factor(basis.fermion(), x, m, y, n), diagonal);
}

SparseOperator boson_bilinear(const CompositeBasis& basis, int link, LinkMode created,
                              LinkMode annihilated) {
  return lift_link(basis, link, local::link_bilinear(created, annihilated), created == annihilated);
}

SparseOperator left_field(const CompositeBasis& basis, int link, int a) {
  return lift_link(basis, link, local::left_field(a), true);
}

SparseOperator right_field(const CompositeBasis& basis, int link, int a) {
  return lift_link(basis, link, local::right_field(a), true);
}

SparseOperator casimir(const CompositeBasis& basis, int link) {
  return lift_link(basis, link, local::casimir(), true);
}

SparseOperator charge(const CompositeBasis& basis, int x, int a) {
  return lift_fermion(basis, charge_factor(basis.fermion(), x, a), true);
}

SparseOperator link_matrix(const CompositeBasis& basis, int link, Spin m, Spin n) {
  return lift_link(basis, link, local::link_matrix(m, n), false);
}

SparseOperator total_fermion_number(const CompositeBasis& basis) {
  SparseOperator n = SparseOperator::zero(basis.size());
  for (int x = 0; x < basis.lattice().n_sites; ++x) {
    for (Spin s : {Spin::up, Spin::down}) n += fermion_bilinear(basis, x, s, x, s);
  }
  return n;
}

}  // namespace gaugedd
