#include "gaugedd/drive.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/SVD>

#include "gaugedd/errors.hpp"

namespace gaugedd {

namespace {

void require_dense_ok(std::size_t dim, std::size_t max_dim) {
  if (dim > max_dim) {
    std::ostringstream msg;
    msg << "dimension " << dim << " exceeds the dense propagator limit " << max_dim
        << "; use a smaller lattice";
    throw ValidationError(msg.str());
  }
}

std::size_t checked_power(std::size_t base, int exponent) {
  std::size_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > kMaxScheduleSteps / base) throw ValidationError("drive schedule too long; reduce N or the lattice");
    out *= base;
  }
  return out;
}

double expectation(const SparseOperator& o, const Vector& psi) {
  return (psi.adjoint() * (o.matrix() * psi)).value().real();
}

}  // namespace

std::string to_string(DriveMode m) {
  switch (m) {
    case DriveMode::single_vertex: return "single-vertex";
    case DriveMode::staggered: return "staggered";
    case DriveMode::per_vertex: return "per-vertex";
  }
  return "per-vertex";
}

DriveMode drive_mode_for(AveragingMode mode) {
  return mode == AveragingMode::staggered ? DriveMode::staggered : DriveMode::per_vertex;
}

DriveSchedule build_schedule(const GaugeTransformer& gauge, const EulerGrid& grid, DriveMode mode,
                             double period, int site) {
  if (!(period > 0.0) || !std::isfinite(period)) throw ValidationError("drive period must be positive");
  // equal time steps realize the average only for equal weights
  if (!grid.uniform_weights()) throw ValidationError("drive schedule needs a uniformly weighted grid");
  const int n_sites = gauge.basis().lattice().n_sites;
  const std::size_t g = grid.size();

  DriveSchedule schedule;
  schedule.period = period;
  switch (mode) {
    case DriveMode::single_vertex: {
      for (const auto& p : grid.points()) schedule.steps.push_back(gauge.vertex_unitary(site, p.angles));
      break;
    }
    case DriveMode::staggered: {
      checked_power(g, 2);
      std::vector<int> even, odd;
      for (int x = 0; x < n_sites; ++x) (x % 2 == 0 ? even : odd).push_back(x);
      std::vector<SparseOperator> v_odd;
      for (const auto& p : grid.points()) v_odd.push_back(gauge.shared_unitary(odd, p.angles));
      for (const auto& pe : grid.points()) {
        const auto v_even = gauge.shared_unitary(even, pe.angles);
        for (const auto& vo : v_odd) schedule.steps.push_back(v_even * vo);
      }
      break;
    }
    case DriveMode::per_vertex: {
      const std::size_t total = checked_power(g, n_sites);
      std::vector<std::vector<SparseOperator>> local(static_cast<std::size_t>(n_sites));
      for (int x = 0; x < n_sites; ++x) {
        for (const auto& p : grid.points()) local[static_cast<std::size_t>(x)].push_back(gauge.vertex_unitary(x, p.angles));
      }
      schedule.steps.reserve(total);
      for (std::size_t nu = 0; nu < total; ++nu) {
        SparseOperator u = SparseOperator::identity(gauge.dim());
        std::size_t rest = nu;
        for (int x = n_sites - 1; x >= 0; --x) {
          u = local[static_cast<std::size_t>(x)][rest % g] * u;
          rest /= g;
        }
        schedule.steps.push_back(std::move(u));
      }
      break;
    }
  }
  return schedule;
}

SparseOperator effective_hamiltonian(const SparseOperator& h0, const DriveSchedule& schedule) {
  if (schedule.steps.empty()) throw ValidationError("drive schedule has no steps");
  SparseOperator sum = SparseOperator::zero(h0.dim());
  const double w = 1.0 / static_cast<double>(schedule.steps.size());
  for (const auto& u : schedule.steps) {
    if (u.dim() != h0.dim()) throw ValidationError("schedule dimension does not match the Hamiltonian");
    sum += conjugate(h0, u) * w;
  }
  return h0.hermitian() ? sum.as_hermitian() : sum;
}

DenseMatrix hermitian_propagator(const SparseOperator& h, double t, std::size_t max_dim) {
  require_dense_ok(h.dim(), max_dim);
  if (h.hermiticity_defect() >= kHermitianTolerance * std::max(1.0, h.max_abs())) {
    throw NumericalError("propagator requires a Hermitian generator");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h.dense());
  if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  const Eigen::VectorXcd phases =
      (es.eigenvalues().cast<cplx>() * cplx(0.0, -t)).array().exp().matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

DenseMatrix stroboscopic_propagator(const SparseOperator& h0, const DriveSchedule& schedule,
                                    std::size_t max_dim) {
  require_dense_ok(h0.dim(), max_dim);
  if (schedule.steps.empty()) throw ValidationError("drive schedule has no steps");
  const DenseMatrix step = hermitian_propagator(h0, schedule.dt(), max_dim);
  DenseMatrix u = DenseMatrix::Identity(static_cast<Eigen::Index>(h0.dim()), static_cast<Eigen::Index>(h0.dim()));
  for (const auto& v : schedule.steps) {
    if (v.dim() != h0.dim()) throw ValidationError("schedule dimension does not match the Hamiltonian");
    // exp(-i V^dag H V dt) = V^dag exp(-i H dt) V
    const DenseMatrix vd = v.dense();
    const DenseMatrix tmp = step * (vd * u);
    u.noalias() = vd.adjoint() * tmp;
  }
  return u;
}

TimeSeries evolve_and_measure(const Vector& psi0, const DenseMatrix& one_period, double period,
                              int n_periods, const std::vector<SparseOperator>& observables) {
  if (std::abs(psi0.norm() - 1.0) > 1e-10) throw ValidationError("initial state is not normalized");
  if (n_periods < 0) throw ValidationError("number of periods must be non-negative");
  if (one_period.rows() != psi0.size()) throw ValidationError("state dimension does not match the propagator");
  TimeSeries ts;
  Vector psi = psi0;
  for (int n = 0; n <= n_periods; ++n) {
    if (n > 0) psi = one_period * psi;
    ts.times.push_back(n * period);
    std::vector<double> row;
    for (const auto& o : observables) row.push_back(expectation(o, psi));
    ts.values.push_back(std::move(row));
  }
  return ts;
}

TimeSeries evolve_and_measure(const Vector& psi0, const SparseOperator& h0, const DriveSchedule& schedule,
                              int n_periods, const std::vector<SparseOperator>& observables) {
  return evolve_and_measure(psi0, stroboscopic_propagator(h0, schedule), schedule.period, n_periods,
                            observables);
}

double spectral_norm(const DenseMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<DenseMatrix> svd(m);
  return svd.singularValues()(0);
}

std::vector<MagnusRow> magnus_scaling(const GaugeTransformer& gauge, const SparseOperator& h0,
                                      const EulerGrid& grid, DriveMode mode, double period, int halvings,
                                      int site) {
  if (halvings < 0) throw ValidationError("number of halvings must be non-negative");
  auto schedule = build_schedule(gauge, grid, mode, period, site);
  const SparseOperator h_bar = effective_hamiltonian(h0, schedule);
  std::vector<MagnusRow> rows;
  double t = period;
  for (int k = 0; k <= halvings; ++k) {
    schedule.period = t;
    const DenseMatrix strob = stroboscopic_propagator(h0, schedule);
    const DenseMatrix eff = hermitian_propagator(h_bar, t);
    MagnusRow row;
    row.period = t;
    row.error = spectral_norm(strob - eff);
    row.ratio = rows.empty() ? 0.0 : rows.back().error / row.error;
    rows.push_back(row);
    t *= 0.5;
  }
  return rows;
}

}  // namespace gaugedd
