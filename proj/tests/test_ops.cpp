#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gaugedd/errors.hpp"
#include "gaugedd/ops.hpp"
#include "oracle.hpp"

using namespace gaugedd;

namespace {

const cplx kI(0.0, 1.0);

int inversions(const std::vector<int>& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
  return n;
}

// First-quantized Slater determinant of the occupied modes (ascending), as a
// vector on n_modes^N. The ascending order carries sign +1.
Eigen::VectorXcd slater(std::uint64_t bits, int n_modes) {
  std::vector<int> occ;
  for (int k = 0; k < n_modes; ++k)
    if ((bits >> k) & 1U) occ.push_back(k);
  const int n = static_cast<int>(occ.size());
  Eigen::Index dim = 1;
  for (int i = 0; i < n; ++i) dim *= n_modes;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  std::vector<int> perm(occ.size());
  std::iota(perm.begin(), perm.end(), 0);
  double count = 0.0;
  do {
    Eigen::Index idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * n_modes + occ[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    v(idx) += (inversions(perm) % 2 == 0) ? 1.0 : -1.0;
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return v / std::sqrt(count);
}

// sum_i |p><q| acting on particle i
Eigen::VectorXcd one_body(const Eigen::VectorXcd& v, int n_modes, int n, int p, int q) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
    if (v(idx) == cplx(0.0)) continue;
    Eigen::Index rest = idx, place = 1;
    for (int i = 0; i < n; ++i) {
      const int digit = static_cast<int>(rest % n_modes);
      if (digit == q) out(idx + (p - q) * place) += v(idx);
      rest /= n_modes;
      place *= n_modes;
    }
  }
  return out;
}

DenseMatrix antisymmetrized_bilinear(const FermionBasis& fb, int p, int q) {
  const auto n = static_cast<Eigen::Index>(fb.size());
  DenseMatrix m(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const auto col = one_body(slater(fb.state(static_cast<std::size_t>(c)), fb.n_modes()), fb.n_modes(),
                              fb.n_fermions(), p, q);
    for (Eigen::Index r = 0; r < n; ++r) m(r, c) = slater(fb.state(static_cast<std::size_t>(r)), fb.n_modes()).dot(col);
  }
  return m;
}

LinkMatrix as_link(const oracle::Mat& m) { return m; }

}  // namespace

TEST_CASE("number operator diagonal") {
  const auto fb = build_fermion_basis(LatticeConfig{2, Boundary::open}, 2);
  const DenseMatrix n0 = DenseMatrix(fermion_bilinear_factor(fb, 0, Spin::up, 0, Spin::up));
  for (std::size_t k = 0; k < fb.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    CHECK(n0(i, i).real() == doctest::Approx((fb.state(k) & 1U) ? 1.0 : 0.0));
  }
}

TEST_CASE("hop across an occupied mode picks up a minus sign") {
  const auto fb = build_fermion_basis(LatticeConfig{2, Boundary::open}, 2);
  // modes 0 and 1 occupied; move 0 -> 2 across occupied mode 1
  const auto from = *fb.index(0b0011);
  const auto to = *fb.index(0b0110);
  const DenseMatrix lib = DenseMatrix(fermion_bilinear_factor(fb, 1, Spin::up, 0, Spin::up));
  const DenseMatrix ref = antisymmetrized_bilinear(fb, 2, 0);
  CHECK(ref(static_cast<Eigen::Index>(to), static_cast<Eigen::Index>(from)).real() == doctest::Approx(-1.0));
  CHECK(lib(static_cast<Eigen::Index>(to), static_cast<Eigen::Index>(from)).real() == doctest::Approx(-1.0));
}

TEST_CASE("all bilinears match the antisymmetrized wavefunction oracle") {
  for (int sites : {2, 3}) {
    const auto fb = build_fermion_basis(LatticeConfig{sites, Boundary::open}, sites);
    for (int p = 0; p < 2 * sites; ++p) {
      for (int q = 0; q < 2 * sites; ++q) {
        const DenseMatrix lib =
            DenseMatrix(fermion_bilinear_factor(fb, p / 2, static_cast<Spin>(p % 2), q / 2, static_cast<Spin>(q % 2)));
        CHECK(oracle::max_abs(lib - antisymmetrized_bilinear(fb, p, q)) < 1e-14);
      }
    }
  }
}

TEST_CASE("bilinears match Pauli-string Jordan-Wigner") {
  const int sites = 3;
  const auto fb = build_fermion_basis(LatticeConfig{sites, Boundary::periodic}, sites);
  const auto idx = oracle::sector(2 * sites, sites);
  for (int p = 0; p < 2 * sites; ++p) {
    for (int q = 0; q < 2 * sites; ++q) {
      const oracle::Mat full = oracle::annihilator(2 * sites, p).adjoint() * oracle::annihilator(2 * sites, q);
      const DenseMatrix lib =
          DenseMatrix(fermion_bilinear_factor(fb, p / 2, static_cast<Spin>(p % 2), q / 2, static_cast<Spin>(q % 2)));
      CHECK(oracle::max_abs(lib - oracle::restrict_to(full, idx)) < 1e-14);
    }
  }
}

TEST_CASE("link bilinear bookkeeping") {
  const LinkMatrix b = local::link_bilinear(LinkMode::up_up, LinkMode::vacuum);
  CHECK(b(1, 0) == cplx(1.0));
  CHECK(b.col(2).isZero());
  LinkMatrix sum = LinkMatrix::Zero();
  for (int k = 0; k < kLinkDim; ++k) sum += local::link_bilinear(static_cast<LinkMode>(k), static_cast<LinkMode>(k));
  CHECK((sum - LinkMatrix::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("link fields against the Kronecker oracle") {
  for (int a = 1; a <= 3; ++a) {
    CHECK((local::left_field(a) - as_link(oracle::left(a))).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((local::right_field(a) - as_link(oracle::right(a))).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(local::left_field(a).col(0).isZero());
    CHECK(local::right_field(a).col(0).isZero());
  }
}

TEST_CASE("link field algebra") {
  const auto r = [](int a) { return local::right_field(a); };
  const auto l = [](int a) { return local::left_field(a); };
  const LinkMatrix c12 = r(1) * r(2) - r(2) * r(1);
  CHECK((c12 - kI * r(3)).cwiseAbs().maxCoeff() < 1e-12);
  const LinkMatrix d12 = l(1) * l(2) - l(2) * l(1);
  CHECK((d12 + kI * l(3)).cwiseAbs().maxCoeff() < 1e-12);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) CHECK((l(a) * r(b) - r(b) * l(a)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("casimir") {
  const LinkMatrix j2 = local::casimir();
  CHECK(std::abs(j2(0, 0)) == 0.0);
  const auto ud = static_cast<int>(LinkMode::up_down);
  CHECK(j2(ud, ud).real() == doctest::Approx(0.75));
  oracle::Mat ref = oracle::Mat::Zero(5, 5);
  for (int a = 1; a <= 3; ++a) ref += oracle::right(a) * oracle::right(a);
  CHECK(std::abs(ref(ud, ud) - 0.75) < 1e-15);
  LinkMatrix rr = LinkMatrix::Zero(), ll = LinkMatrix::Zero();
  for (int a = 1; a <= 3; ++a) {
    rr += local::right_field(a) * local::right_field(a);
    ll += local::left_field(a) * local::left_field(a);
  }
  CHECK((rr - ll).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((j2 - rr).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("charge operator") {
  const auto fb = build_fermion_basis(LatticeConfig{2, Boundary::open}, 2);
  const DenseMatrix q3 = DenseMatrix(charge_factor(fb, 0, 3));
  // one up fermion on site 0, one on site 1
  const auto single = static_cast<Eigen::Index>(*fb.index(0b0101));
  CHECK(q3(single, single).real() == doctest::Approx(0.5));
  const auto doubly = static_cast<Eigen::Index>(*fb.index(0b0011));
  CHECK(std::abs(q3(doubly, doubly)) < 1e-15);
  const DenseMatrix q1 = DenseMatrix(charge_factor(fb, 0, 1));
  const DenseMatrix q2 = DenseMatrix(charge_factor(fb, 0, 2));
  CHECK(oracle::max_abs(q1 * q2 - q2 * q1 - kI * q3) < 1e-12);
  const DenseMatrix q1_other = DenseMatrix(charge_factor(fb, 1, 1));
  CHECK(oracle::max_abs(q1_other * q2 - q2 * q1_other) < 1e-12);
}

TEST_CASE("link operator entries") {
  const double r = 1.0 / std::sqrt(2.0);
  const auto v = static_cast<int>(LinkMode::vacuum);
  const auto uu = static_cast<int>(LinkMode::up_up);
  const auto du = static_cast<int>(LinkMode::down_up);
  CHECK(local::link_matrix(Spin::up, Spin::up)(uu, v).real() == doctest::Approx(r));
  CHECK(local::link_matrix(Spin::up, Spin::down)(v, du).real() == doctest::Approx(-r));
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      const LinkMatrix lib = local::link_matrix(static_cast<Spin>(m), static_cast<Spin>(n));
      CHECK((lib - as_link(oracle::link_u(m, n))).cwiseAbs().maxCoeff() < 1e-15);
    }
  }
}

TEST_CASE("weight of U acting on |ud>") {
  const auto ud = static_cast<int>(LinkMode::up_down);
  double lib = 0.0, ref = 0.0;
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      lib += local::link_matrix(static_cast<Spin>(m), static_cast<Spin>(n)).col(ud).squaredNorm();
      ref += oracle::link_u(m, n).col(ud).squaredNorm();
    }
  }
  CHECK(lib == doctest::Approx(ref).epsilon(1e-15));
  CHECK(ref == doctest::Approx(0.5));
}

TEST_CASE("lifted operators match the dense composite oracle") {
  for (bool periodic : {false, true}) {
    const LatticeConfig cfg{2, periodic ? Boundary::periodic : Boundary::open};
    const auto basis = build_half_filled_basis(cfg);
    const oracle::Model model(2, periodic);
    REQUIRE(static_cast<Eigen::Index>(basis.size()) == model.dim());
    for (int link = 0; link < cfg.n_links(); ++link) {
      for (int a = 1; a <= 3; ++a) {
        CHECK(oracle::max_abs(left_field(basis, link, a).dense() - model.lift_l(link, oracle::left(a))) < 1e-15);
        CHECK(oracle::max_abs(right_field(basis, link, a).dense() - model.lift_l(link, oracle::right(a))) < 1e-15);
      }
      CHECK(oracle::max_abs(link_matrix(basis, link, Spin::down, Spin::up).dense() -
                            model.lift_l(link, oracle::link_u(1, 0))) < 1e-15);
    }
    for (int x = 0; x < 2; ++x)
      for (int a = 1; a <= 3; ++a) CHECK(oracle::max_abs(charge(basis, x, a).dense() - model.charge(x, a)) < 1e-15);
    const DenseMatrix n = total_fermion_number(basis).dense();
    CHECK(oracle::max_abs(n - 2.0 * DenseMatrix::Identity(n.rows(), n.cols())) < 1e-15);
  }
}

TEST_CASE("invalid indices are rejected") {
  CHECK_THROWS_AS(local::left_field(0), ValidationError);
  CHECK_THROWS_AS(local::right_field(4), ValidationError);
  const auto basis = build_half_filled_basis(LatticeConfig{2, Boundary::open});
  CHECK_THROWS_AS(left_field(basis, 1, 1), ValidationError);
  CHECK_THROWS_AS(charge(basis, 2, 1), ValidationError);
  CHECK_FALSE(link_mode(LinkIndex::none, LinkIndex::up).has_value());
  CHECK(link_mode(LinkIndex::none, LinkIndex::none) == LinkMode::vacuum);
  CHECK(link_mode(LinkIndex::down, LinkIndex::up) == LinkMode::down_up);
}
