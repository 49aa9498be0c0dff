#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaugedd/averaging.hpp"
#include "gaugedd/checks.hpp"
#include "gaugedd/model.hpp"

namespace gaugedd {

/// Resolved experiment configuration. Couplings are given as ratios to the
/// mass M; the library works in absolute units with M taken from `mass`.
struct ExperimentConfig {
  struct Lattice {
    int n_sites = 2;
    Boundary boundary = Boundary::periodic;
  } lattice;

  struct Params {
    double mass = 1.0;
    double coupling_sq_over_2M = 0.9;
    double eps_over_M = 1.1;
    std::array<double, 3> gamma_over_M = {0.5, 1.5, 3.5};
    double t_dir_over_M = 0.5;
  } params;

  struct Grid {
    int n = 10;
    std::vector<int> n_list = {2, 3, 4, 5, 6, 7, 8, 9, 10};
    GridScheme scheme = GridScheme::haar_exact;
    AveragingMode mode = AveragingMode::per_vertex;
  } grid;

  struct Run {
    Perturbation perturbation = Perturbation::charge;
    bool averaged = true;
    std::uint64_t seed = 1234;
    std::string out;
    std::string format = "csv";
    std::size_t levels = 3;
    double period = 0.5;
    int n_periods = 20;
    int halvings = 2;
    Corruption corrupt = Corruption::none;
  } run;

  void validate() const;
  LatticeConfig lattice_config() const;
  ModelParams model() const;

  nlohmann::json to_json() const;
  // Missing keys keep their defaults; unknown keys are rejected.
  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig from_file(const std::string& path);
};

std::vector<int> parse_n_list(const std::string& text);

}  // namespace gaugedd
