#include "gaugedd/model.hpp"

#include <cmath>

#include "gaugedd/errors.hpp"
#include "gaugedd/ops.hpp"

namespace gaugedd {

void ModelParams::validate() const {
  const bool finite = std::isfinite(mass) && std::isfinite(coupling_sq) && std::isfinite(hopping) &&
                      std::isfinite(gamma[0]) && std::isfinite(gamma[1]) && std::isfinite(gamma[2]) &&
                      std::isfinite(t_dir);
  if (!finite) throw ValidationError("model parameters must be finite");
  if (coupling_sq < 0.0) throw ValidationError("g^2 must be non-negative");
}

ModelParams ModelParams::from_ratios(double mass, double coupling_sq_over_2m, double eps_over_m,
                                     std::array<double, 3> gamma_over_m, double t_dir_over_m) {
  ModelParams p;
  p.mass = mass;
  p.coupling_sq = 2.0 * mass * coupling_sq_over_2m;
  p.hopping = eps_over_m * mass;
  for (std::size_t a = 0; a < 3; ++a) p.gamma[a] = gamma_over_m[a] * mass;
  p.t_dir = t_dir_over_m * mass;
  p.validate();
  return p;
}

SparseOperator h_fermion(const CompositeBasis& basis, const ModelParams& params) {
  SparseOperator h = SparseOperator::zero(basis.size());
  for (int x = 0; x < basis.lattice().n_sites; ++x) {
    const double sign = (x % 2 == 0) ? 1.0 : -1.0;
    for (Spin m : {Spin::up, Spin::down}) h += (params.mass * sign) * fermion_bilinear(basis, x, m, x, m);
  }
  return h.as_hermitian();
}

SparseOperator h_gauge(const CompositeBasis& basis, const ModelParams& params) {
  SparseOperator h = SparseOperator::zero(basis.size());
  for (int k = 0; k < basis.lattice().n_links(); ++k) h += casimir(basis, k);
  return (h * (0.5 * params.coupling_sq)).as_hermitian();
}

SparseOperator h_int(const CompositeBasis& basis, const ModelParams& params) {
  const auto& lat = basis.lattice();
  SparseOperator forward = SparseOperator::zero(basis.size());
  for (int k = 0; k < lat.n_links(); ++k) {
    const int x = lat.link_left_site(k);
    const int y = lat.link_right_site(k);
    for (Spin m : {Spin::up, Spin::down}) {
      for (Spin n : {Spin::up, Spin::down}) {
        forward += kron_fermion_link(basis, fermion_bilinear_factor(basis.fermion(), x, m, y, n),
                                     link_factor(basis.link(), k, local::link_matrix(m, n)));
      }
    }
  }
  SparseOperator h = (forward + forward.adjoint()) * params.hopping;
  return h.as_hermitian();
}

SparseOperator h_lgt(const CompositeBasis& basis, const ModelParams& params) {
  params.validate();
  return (h_fermion(basis, params) + h_gauge(basis, params) + h_int(basis, params)).as_hermitian();
}

SparseOperator gauss(const CompositeBasis& basis, int x, int a) {
  const auto& lat = basis.lattice();
  if (x < 0 || x >= lat.n_sites) throw ValidationError("site index out of range");
  validate_generator_index(a);
  SparseOperator g = charge(basis, x, a) * -1.0;
  if (const auto out = lat.outgoing_link(x)) g += left_field(basis, *out, a);
  if (const auto in = lat.incoming_link(x)) g -= right_field(basis, *in, a);
  return g.as_hermitian();
}

SparseOperator perturbation_charge(const CompositeBasis& basis, const ModelParams& params) {
  SparseOperator h = SparseOperator::zero(basis.size());
  for (int x = 0; x < basis.lattice().n_sites; ++x) {
    for (int a = 1; a <= 3; ++a) {
      const double g = params.gamma[static_cast<std::size_t>(a - 1)];
      if (g != 0.0) h += charge(basis, x, a) * g;
    }
  }
  return h.as_hermitian();
}

SparseOperator perturbation_tunneling(const CompositeBasis& basis, const ModelParams& params) {
  const auto& lat = basis.lattice();
  SparseOperator forward = SparseOperator::zero(basis.size());
  for (int k = 0; k < lat.n_links(); ++k) {
    const int x = lat.link_left_site(k);
    const int y = lat.link_right_site(k);
    for (Spin m : {Spin::up, Spin::down}) forward += fermion_bilinear(basis, x, m, y, m);
  }
  return ((forward + forward.adjoint()) * -params.t_dir).as_hermitian();
}

SparseOperator gauge_violation_operator(const CompositeBasis& basis) {
  SparseOperator v = SparseOperator::zero(basis.size());
  for (int x = 0; x < basis.lattice().n_sites; ++x) {
    for (int a = 1; a <= 3; ++a) {
      const auto g = gauss(basis, x, a);
      v += g * g;
    }
  }
  return v.as_hermitian();
}

std::string to_string(Perturbation p) {
  switch (p) {
    case Perturbation::none: return "none";
    case Perturbation::charge: return "charge";
    case Perturbation::tunneling: return "tunneling";
  }
  return "none";
}

Perturbation perturbation_from_string(const std::string& s) {
  if (s == "none") return Perturbation::none;
  if (s == "charge") return Perturbation::charge;
  if (s == "tunneling") return Perturbation::tunneling;
  throw ValidationError("unknown perturbation '" + s + "' (expected none|charge|tunneling)");
}

SparseOperator perturbation(const CompositeBasis& basis, const ModelParams& params, Perturbation kind) {
  switch (kind) {
    case Perturbation::charge: return perturbation_charge(basis, params);
    case Perturbation::tunneling: return perturbation_tunneling(basis, params);
    case Perturbation::none: break;
  }
  return SparseOperator::zero(basis.size());
}

}  // namespace gaugedd
