#pragma once

#include "gaugedd/checks.hpp"
#include "gaugedd/config.hpp"
#include "gaugedd/output.hpp"

namespace gaugedd {

// Tables: checks(name, residual, tolerance, passed).
Report cmd_check(const ExperimentConfig& config, CheckReport* details = nullptr);

// Tables: spectrum, degeneracies, degeneracies_merged.
Report cmd_spectrum(const ExperimentConfig& config);

// Tables: convergence(N, level_index, energy, multiplicity, reference_energy,
// rel_error, scheme, boundary), reference(level_index, energy, multiplicity).
Report cmd_converge(const ExperimentConfig& config);

// Tables: evolution(period, time, violation_driven, violation_undriven,
// violation_effective, propagator_distance), scaling(T, error, ratio).
Report cmd_drive(const ExperimentConfig& config);

}  // namespace gaugedd
