#include "gaugedd/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "gaugedd/errors.hpp"

namespace gaugedd {

double cluster_tolerance(const std::vector<double>& eigenvalues, double rel_tol) {
  if (eigenvalues.empty()) return rel_tol;
  const auto [lo, hi] = std::minmax_element(eigenvalues.begin(), eigenvalues.end());
  const double range = *hi - *lo;
  if (range > 0.0) return rel_tol * range;
  return rel_tol * std::max(1.0, std::abs(*lo));
}

DegeneracyTable cluster_degeneracies(const Spectrum& spectrum, double tol) {
  if (!(tol > 0.0)) throw ValidationError("clustering tolerance must be positive");
  std::vector<double> e = spectrum.eigenvalues;
  std::sort(e.begin(), e.end());
  DegeneracyTable table;
  double sum = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0 && e[i] - e[i - 1] > tol) {
      auto& c = table.clusters.back();
      c.value = sum / static_cast<double>(c.multiplicity);
      sum = 0.0;
    }
    if (i == 0 || e[i] - e[i - 1] > tol) table.clusters.push_back({e[i], 0});
    table.clusters.back().multiplicity += 1;
    sum += e[i];
  }
  if (!table.clusters.empty()) {
    auto& c = table.clusters.back();
    c.value = sum / static_cast<double>(c.multiplicity);
  }
  return table;
}

DegeneracyTable cluster_degeneracies(const Spectrum& spectrum) {
  return cluster_degeneracies(spectrum, cluster_tolerance(spectrum.eigenvalues));
}

GaussSector gauss_kernel_projector(const CompositeBasis& basis) {
  const SparseOperator v = gauge_violation_operator(basis);
  EigenOptions opt;
  opt.vectors = true;
  opt.backend = EigenBackend::dense;
  const Spectrum s = eigensolve(v, opt);
  std::size_t k = 0;
  while (k < s.eigenvalues.size() && s.eigenvalues[k] < 1e-10) ++k;
  GaussSector sector;
  sector.dimension = k;
  sector.basis = s.eigenvectors->leftCols(static_cast<Eigen::Index>(k));
  sector.projector = sector.basis * sector.basis.adjoint();
  return sector;
}

double commutator_norm(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) throw ValidationError("commutator of operators with different dimensions");
  return commutator(a, b).max_abs();
}

namespace {

double relative_error(double value, double reference, double range) {
  const double denom = reference != 0.0 ? std::abs(reference) : std::max(range, 1.0);
  return std::abs(value - reference) / denom;
}

}  // namespace

ConvergenceTable convergence_study(const LatticeConfig& cfg, const ModelParams& params,
                                   const ConvergenceOptions& options) {
  if (options.n_list.empty()) throw ValidationError("convergence study needs a non-empty N list");
  for (int n : options.n_list) {
    if (n < 1) throw ValidationError("grid size N must be positive");
  }
  const CompositeBasis basis = build_half_filled_basis(cfg);
  const SparseOperator h = h_lgt(basis, params);
  const SparseOperator hp = perturbation(basis, params, options.perturbation);
  const GaugeTransformer gauge(basis);

  const Spectrum ref_spec = eigensolve(h);
  ConvergenceTable table;
  table.reference = cluster_degeneracies(ref_spec).clusters;
  const double range = ref_spec.eigenvalues.back() - ref_spec.eigenvalues.front();

  // Each N is independent; results are collected in n_list order.
  std::vector<std::future<std::vector<ConvergenceRow>>> jobs;
  for (int n : options.n_list) {
    jobs.push_back(std::async(std::launch::async, [&, n] {
      const EulerGrid grid(n, options.scheme);
      const SparseOperator averaged = h + group_average_lattice(gauge, hp, grid, options.mode);
      const Spectrum spec = eigensolve(averaged.as_hermitian());
      const auto levels =
          cluster_degeneracies(spec, cluster_tolerance(spec.eigenvalues, kMergedClusterRelTol)).clusters;
      std::vector<ConvergenceRow> rows;
      const std::size_t count = std::min({options.levels, levels.size(), table.reference.size()});
      for (std::size_t k = 0; k < count; ++k) {
        ConvergenceRow r;
        r.n = n;
        r.level_index = k;
        r.energy = levels[k].value;
        r.multiplicity = levels[k].multiplicity;
        r.reference_energy = table.reference[k].value;
        r.rel_error = relative_error(r.energy, r.reference_energy, range);
        r.scheme = options.scheme;
        r.boundary = cfg.boundary;
        rows.push_back(r);
      }
      return rows;
    }));
  }
  for (auto& job : jobs) {
    auto rows = job.get();
    table.rows.insert(table.rows.end(), rows.begin(), rows.end());
  }
  return table;
}

}  // namespace gaugedd
