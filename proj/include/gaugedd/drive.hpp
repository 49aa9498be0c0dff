#pragma once

#include <string>
#include <vector>

#include "gaugedd/averaging.hpp"

namespace gaugedd {

enum class DriveMode {
  single_vertex,  // N^3 steps acting on one site
  staggered,      // N^6 steps, nu = nu_even * N^3 + nu_odd
  per_vertex,     // N^(3 n_sites) steps, site 0 slowest
};

std::string to_string(DriveMode m);

/// Piecewise-constant drive: U_1(t) = steps[nu] for nu*dt <= t < (nu+1)*dt.
struct DriveSchedule {
  double period = 0.0;
  std::vector<SparseOperator> steps;

  double dt() const { return period / static_cast<double>(steps.size()); }
};

inline constexpr std::size_t kMaxScheduleSteps = std::size_t{1} << 20;
inline constexpr std::size_t kMaxDenseDim = 4096;

DriveSchedule build_schedule(const GaugeTransformer& gauge, const EulerGrid& grid, DriveMode mode,
                             double period, int site = 0);

// Drive realizing group_average_lattice(grid, mode).
DriveMode drive_mode_for(AveragingMode mode);

// (1/K) sum_nu U_nu^dag H0 U_nu
SparseOperator effective_hamiltonian(const SparseOperator& h0, const DriveSchedule& schedule);

// exp(-i H t) for Hermitian H, by eigendecomposition.
DenseMatrix hermitian_propagator(const SparseOperator& h, double t, std::size_t max_dim = kMaxDenseDim);

// prod_nu exp(-i U_nu^dag H0 U_nu dt), later steps to the left.
DenseMatrix stroboscopic_propagator(const SparseOperator& h0, const DriveSchedule& schedule,
                                    std::size_t max_dim = kMaxDenseDim);

struct TimeSeries {
  std::vector<double> times;
  // values[period][observable]
  std::vector<std::vector<double>> values;
};

// Applies the one-period propagator n_periods times, recording <O> at t = 0, T, ..., n T.
TimeSeries evolve_and_measure(const Vector& psi0, const DenseMatrix& one_period, double period,
                              int n_periods, const std::vector<SparseOperator>& observables);

// Driven evolution of psi0 under H0 and the schedule.
TimeSeries evolve_and_measure(const Vector& psi0, const SparseOperator& h0, const DriveSchedule& schedule,
                              int n_periods, const std::vector<SparseOperator>& observables);

struct MagnusRow {
  double period = 0.0;
  double error = 0.0;  // ||U_strob(T) - exp(-i Hbar T)||_2
  double ratio = 0.0;  // error(previous row) / error(this row); 0 on the first row
};

// Errors at T, T/2, T/4, ... (`halvings` + 1 rows).
std::vector<MagnusRow> magnus_scaling(const GaugeTransformer& gauge, const SparseOperator& h0,
                                      const EulerGrid& grid, DriveMode mode, double period,
                                      int halvings = 2, int site = 0);

double spectral_norm(const DenseMatrix& m);

}  // namespace gaugedd
