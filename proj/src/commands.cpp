#include "gaugedd/commands.hpp"

#include "gaugedd/drive.hpp"
#include "gaugedd/errors.hpp"
#include "gaugedd/spectra.hpp"

namespace gaugedd {

namespace {

Report start(const std::string& command, const ExperimentConfig& config) {
  config.validate();
  Report r;
  r.command = command;
  r.config = config.to_json();
  // where the report goes is not part of the experiment
  r.config["run"].erase("out");
  return r;
}

Table cluster_table(const std::string& name, const std::vector<Cluster>& clusters) {
  Table t{name, {"level", "energy", "multiplicity"}, {}};
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    t.rows.push_back({static_cast<std::int64_t>(k), clusters[k].value,
                      static_cast<std::int64_t>(clusters[k].multiplicity)});
  }
  return t;
}

}  // namespace

Report cmd_check(const ExperimentConfig& config, CheckReport* details) {
  Report r = start("check", config);
  CheckOptions opt;
  opt.lattice = config.lattice_config();
  opt.params = config.model();
  opt.seed = config.run.seed;
  opt.corruption = config.run.corrupt;
  const CheckReport checks = run_check_suite(opt);
  Table t{"checks", {"name", "residual", "tolerance", "passed"}, {}};
  for (const auto& c : checks.results) {
    t.rows.push_back({c.name, c.residual, c.tolerance, static_cast<std::int64_t>(c.passed ? 1 : 0)});
  }
  r.tables.push_back(std::move(t));
  if (details) *details = checks;
  return r;
}

Report cmd_spectrum(const ExperimentConfig& config) {
  Report r = start("spectrum", config);
  const auto basis = build_half_filled_basis(config.lattice_config());
  const auto params = config.model();
  SparseOperator h = h_lgt(basis, params);
  const SparseOperator hp = perturbation(basis, params, config.run.perturbation);
  if (config.run.perturbation != Perturbation::none) {
    if (config.run.averaged) {
      const GaugeTransformer gauge(basis);
      h += group_average_lattice(gauge, hp, EulerGrid(config.grid.n, config.grid.scheme), config.grid.mode);
    } else {
      h += hp;
    }
  }
  const Spectrum s = eigensolve(h.as_hermitian());
  Table spec{"spectrum", {"index", "energy"}, {}};
  for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
    spec.rows.push_back({static_cast<std::int64_t>(k), s.eigenvalues[k]});
  }
  r.tables.push_back(std::move(spec));
  r.tables.push_back(cluster_table("degeneracies", cluster_degeneracies(s).clusters));
  r.tables.push_back(cluster_table(
      "degeneracies_merged",
      cluster_degeneracies(s, cluster_tolerance(s.eigenvalues, kMergedClusterRelTol)).clusters));
  return r;
}

Report cmd_converge(const ExperimentConfig& config) {
  Report r = start("converge", config);
  if (config.grid.n_list.empty()) throw ValidationError("converge needs a non-empty n_list");
  ConvergenceOptions opt;
  opt.perturbation = config.run.perturbation;
  opt.n_list = config.grid.n_list;
  opt.scheme = config.grid.scheme;
  opt.mode = config.grid.mode;
  opt.levels = config.run.levels;
  const auto table = convergence_study(config.lattice_config(), config.model(), opt);
  Table t{"convergence",
          {"N", "level_index", "energy", "multiplicity", "reference_energy", "rel_error", "scheme", "boundary"},
          {}};
  for (const auto& row : table.rows) {
    t.rows.push_back({static_cast<std::int64_t>(row.n), static_cast<std::int64_t>(row.level_index), row.energy,
                      static_cast<std::int64_t>(row.multiplicity), row.reference_energy, row.rel_error,
                      to_string(row.scheme), to_string(row.boundary)});
  }
  r.tables.push_back(std::move(t));
  r.tables.push_back(cluster_table("reference", table.reference));
  return r;
}

Report cmd_drive(const ExperimentConfig& config) {
  Report r = start("drive", config);
  const auto basis = build_half_filled_basis(config.lattice_config());
  const auto params = config.model();
  const SparseOperator h = h_lgt(basis, params);
  const SparseOperator h0 = (h + perturbation(basis, params, config.run.perturbation)).as_hermitian();
  const GaugeTransformer gauge(basis);
  const EulerGrid grid(config.grid.n, config.grid.scheme);
  const DriveMode mode = drive_mode_for(config.grid.mode);
  const double period = config.run.period;

  const DriveSchedule schedule = build_schedule(gauge, grid, mode, period);
  const SparseOperator h_bar = effective_hamiltonian(h0, schedule);

  // lowest H_LGT state inside the Gauss-law kernel
  const GaussSector sector = gauss_kernel_projector(basis);
  if (sector.dimension == 0) throw NumericalError("Gauss-law kernel is empty");
  const DenseMatrix hk = sector.basis.adjoint() * (h.matrix() * sector.basis);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(hk);
  Vector psi0 = sector.basis * es.eigenvectors().col(0);
  psi0.normalize();

  const DenseMatrix u_strob = stroboscopic_propagator(h0, schedule);
  const DenseMatrix u_static = hermitian_propagator(h0, period);
  const DenseMatrix u_eff = hermitian_propagator(h_bar, period);
  const std::vector<SparseOperator> obs = {gauge_violation_operator(basis)};
  const auto driven = evolve_and_measure(psi0, u_strob, period, config.run.n_periods, obs);
  const auto undriven = evolve_and_measure(psi0, u_static, period, config.run.n_periods, obs);
  const auto effective = evolve_and_measure(psi0, u_eff, period, config.run.n_periods, obs);

  Table evo{"evolution",
            {"period", "time", "violation_driven", "violation_undriven", "violation_effective",
             "propagator_distance"},
            {}};
  DenseMatrix us = DenseMatrix::Identity(u_strob.rows(), u_strob.cols());
  DenseMatrix ue = us;
  for (std::size_t n = 0; n < driven.times.size(); ++n) {
    if (n > 0) {
      us = u_strob * us;
      ue = u_eff * ue;
    }
    evo.rows.push_back({static_cast<std::int64_t>(n), driven.times[n], driven.values[n][0], undriven.values[n][0],
                        effective.values[n][0], spectral_norm(us - ue)});
  }
  r.tables.push_back(std::move(evo));

  Table scaling{"scaling", {"T", "error", "ratio"}, {}};
  for (const auto& row : magnus_scaling(gauge, h0, grid, mode, period, config.run.halvings)) {
    scaling.rows.push_back({row.period, row.error, row.ratio});
  }
  r.tables.push_back(std::move(scaling));
  return r;
}

}  // namespace gaugedd
