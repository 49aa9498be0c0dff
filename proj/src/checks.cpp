#include "gaugedd/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gaugedd/averaging.hpp"
#include "gaugedd/errors.hpp"
#include "gaugedd/ops.hpp"
#include "gaugedd/spectra.hpp"

namespace gaugedd {

namespace {

constexpr double kAlgebraTol = 1e-12;

const cplx kI(0.0, 1.0);

template <typename Mat>
double max_abs_dense(const Mat& m) {
  return m.cwiseAbs().maxCoeff();
}

// max_{a,b} |[X_a, X_b] - sign * i eps_abc X_c|
template <typename Get>
double algebra_residual(Get&& get, double sign) {
  double worst = 0.0;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      DenseMatrix lhs = get(a) * get(b) - get(b) * get(a);
      for (int c = 1; c <= 3; ++c) {
        const int e = levi_civita(a, b, c);
        if (e != 0) lhs -= (sign * e * kI) * get(c);
      }
      worst = std::max(worst, max_abs_dense(lhs));
    }
  }
  return worst;
}

CheckResult make(std::string name, double residual, double tol) {
  return {std::move(name), residual, tol, residual < tol};
}

}  // namespace

bool CheckReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::string to_string(Corruption c) {
  switch (c) {
    case Corruption::none: return "none";
    case Corruption::left_sign: return "left-sign";
    case Corruption::link_sign: return "link-sign";
  }
  return "none";
}

Corruption corruption_from_string(const std::string& s) {
  if (s == "none") return Corruption::none;
  if (s == "left-sign") return Corruption::left_sign;
  if (s == "link-sign") return Corruption::link_sign;
  throw ValidationError("unknown corruption '" + s + "' (expected none|left-sign|link-sign)");
}

CheckReport run_check_suite(const CheckOptions& options) {
  options.lattice.validate();
  options.params.validate();
  CheckReport report;
  auto& out = report.results;

  const double left_sign = options.corruption == Corruption::left_sign ? -1.0 : 1.0;
  auto left = [&](int a) -> LinkMatrix { return left_sign * local::left_field(a); };
  auto right = [](int a) -> LinkMatrix { return local::right_field(a); };

  out.push_back(make("right_field_algebra", algebra_residual(right, 1.0), kAlgebraTol));
  out.push_back(make("left_field_algebra", algebra_residual(left, -1.0), kAlgebraTol));
  {
    double worst = 0.0;
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        const LinkMatrix c = left(a) * right(b) - right(b) * left(a);
        worst = std::max(worst, max_abs_dense(c));
      }
    }
    out.push_back(make("left_right_commute", worst, kAlgebraTol));
  }
  {
    LinkMatrix rr = LinkMatrix::Zero(), ll = LinkMatrix::Zero();
    for (int a = 1; a <= 3; ++a) {
      rr += right(a) * right(a);
      ll += left(a) * left(a);
    }
    out.push_back(make("casimir_identity", max_abs_dense(LinkMatrix(rr - ll)), kAlgebraTol));
  }

  const CompositeBasis basis = build_half_filled_basis(options.lattice);
  const int n_sites = options.lattice.n_sites;
  {
    double worst = 0.0;
    for (int x = 0; x < n_sites; ++x) {
      auto q = [&](int a) { return DenseMatrix(charge_factor(basis.fermion(), x, a)); };
      worst = std::max(worst, algebra_residual(q, 1.0));
    }
    out.push_back(make("charge_algebra", worst, kAlgebraTol));
  }

  std::vector<std::vector<SparseOperator>> g(static_cast<std::size_t>(n_sites));
  for (int x = 0; x < n_sites; ++x) {
    for (int a = 1; a <= 3; ++a) g[static_cast<std::size_t>(x)].push_back(gauss(basis, x, a));
  }
  {
    double worst = 0.0;
    for (int x = 0; x < n_sites; ++x) {
      for (int y = 0; y < n_sites; ++y) {
        for (int a = 1; a <= 3; ++a) {
          for (int b = 1; b <= 3; ++b) {
            SparseOperator c = commutator(g[x][a - 1], g[y][b - 1]);
            if (x == y) {
              for (int k = 1; k <= 3; ++k) {
                const int e = levi_civita(a, b, k);
                if (e != 0) c += g[x][k - 1] * (static_cast<double>(e) * kI);
              }
            }
            worst = std::max(worst, c.max_abs());
          }
        }
      }
    }
    out.push_back(make("gauss_algebra", worst, kAlgebraTol));
  }

  SparseOperator h = h_lgt(basis, options.params);
  if (options.corruption == Corruption::link_sign) {
    // flip the relative sign inside U_{up,down}
    const auto& lat = options.lattice;
    SparseOperator extra = SparseOperator::zero(basis.size());
    for (int k = 0; k < lat.n_links(); ++k) {
      const LinkMatrix bad = std::sqrt(2.0) * local::link_bilinear(LinkMode::vacuum, LinkMode::down_up);
      extra += kron_fermion_link(basis,
                                 fermion_bilinear_factor(basis.fermion(), lat.link_left_site(k), Spin::up,
                                                         lat.link_right_site(k), Spin::down),
                                 link_factor(basis.link(), k, bad));
    }
    h = (h + (extra + extra.adjoint()) * options.params.hopping).as_hermitian();
  }
  const double h_scale = std::max(1.0, h.max_abs());
  {
    double worst = 0.0;
    for (const auto& site : g) {
      for (const auto& ga : site) worst = std::max(worst, commutator_norm(ga, h));
    }
    out.push_back(make("gauge_invariance", worst, kAlgebraTol * h_scale));
  }
  {
    double worst = h.hermiticity_defect();
    for (const auto& site : g) {
      for (const auto& ga : site) worst = std::max(worst, ga.hermiticity_defect());
    }
    worst = std::max(worst, perturbation_charge(basis, options.params).hermiticity_defect());
    worst = std::max(worst, perturbation_tunneling(basis, options.params).hermiticity_defect());
    out.push_back(make("hermiticity", worst, kAlgebraTol * h_scale));
  }

  const SparseOperator hp_charge = perturbation_charge(basis, options.params);
  {
    // The charge term must be detected as gauge-variant (when gamma != 0).
    double worst = 0.0;
    for (const auto& site : g) {
      for (const auto& ga : site) worst = std::max(worst, commutator_norm(ga, hp_charge));
    }
    const bool any_gamma = std::any_of(options.params.gamma.begin(), options.params.gamma.end(),
                                       [](double v) { return v != 0.0; });
    out.push_back({"charge_perturbation_detected", worst, 0.0, !any_gamma || worst > 1e-6});
  }

  const GaugeTransformer gauge(basis);
  {
    // Rearrangement: the alpha rotations exp(-i alpha_l G3(0)) close under
    // conjugation, so their average is invariant under each of them.
    constexpr int n_alpha = 5;
    SparseOperator avg = SparseOperator::zero(basis.size());
    const SparseOperator o = h + hp_charge;
    std::vector<SparseOperator> rot;
    for (int l = 0; l < n_alpha; ++l) {
      rot.push_back(gauge.vertex_unitary(0, {2.0 * std::numbers::pi * l / n_alpha, 0.0, 0.0}));
      avg += conjugate(o, rot.back()) * (1.0 / n_alpha);
    }
    double worst = 0.0;
    for (const auto& r : rot) worst = std::max(worst, (conjugate(avg, r) - avg).max_abs());
    out.push_back(make("discrete_rearrangement", worst, kAlgebraTol * h_scale));
  }
  {
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double worst = 0.0;
    for (int x = 0; x < n_sites; ++x) {
      const EulerAngles gr{2.0 * std::numbers::pi * u01(rng), std::numbers::pi * u01(rng),
                           4.0 * std::numbers::pi * u01(rng)};
      const auto v = gauge.vertex_unitary(x, gr);
      worst = std::max(worst, (v.adjoint() * v - SparseOperator::identity(basis.size())).max_abs());
      worst = std::max(worst, (conjugate(h, v) - h).max_abs() / h_scale);
    }
    out.push_back(make("gauge_unitary_invariance", worst, kAlgebraTol));
  }
  {
    ModelParams p = options.params;
    if (p.t_dir == 0.0) p.t_dir = 1.0;
    const SparseOperator tun = perturbation_tunneling(basis, p);
    const auto avg = group_average_lattice(gauge, tun, EulerGrid(3, GridScheme::haar_exact),
                                           AveragingMode::per_vertex);
    out.push_back(make("tunneling_cancellation", avg.max_abs(), 1e-13));
  }
  return report;
}

}  // namespace gaugedd
