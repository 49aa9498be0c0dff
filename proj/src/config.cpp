#include "gaugedd/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "gaugedd/errors.hpp"

namespace gaugedd {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ValidationError("config section '" + where + "' must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ValidationError("unknown config key '" + where + "." + key + "'");
  }
}

template <typename T>
void read(const json& j, const char* key, T& out, const std::string& where) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError("config key '" + where + "." + key + "' has the wrong type");
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  lattice_config().validate();
  model();
  if (!(params.mass > 0.0)) throw ValidationError("mass must be positive (it sets the energy unit)");
  if (params.coupling_sq_over_2M < 0.0) throw ValidationError("g^2/(2M) must be non-negative");
  if (grid.n < 1) throw ValidationError("grid.n must be positive");
  for (int n : grid.n_list) {
    if (n < 1) throw ValidationError("grid.n_list entries must be positive");
  }
  if (run.format != "csv" && run.format != "json") throw ValidationError("format must be csv or json");
  if (run.levels == 0) throw ValidationError("run.levels must be positive");
  if (!(run.period > 0.0) || !std::isfinite(run.period)) throw ValidationError("run.period must be positive");
  if (run.n_periods < 0) throw ValidationError("run.n_periods must be non-negative");
  if (run.halvings < 0) throw ValidationError("run.halvings must be non-negative");
}

LatticeConfig ExperimentConfig::lattice_config() const { return {lattice.n_sites, lattice.boundary}; }

ModelParams ExperimentConfig::model() const {
  return ModelParams::from_ratios(params.mass, params.coupling_sq_over_2M, params.eps_over_M,
                                  params.gamma_over_M, params.t_dir_over_M);
}

json ExperimentConfig::to_json() const {
  json j;
  j["lattice"] = {{"n_sites", lattice.n_sites}, {"boundary", to_string(lattice.boundary)}};
  j["params"] = {{"mass", params.mass},
                 {"coupling_sq_over_2M", params.coupling_sq_over_2M},
                 {"eps_over_M", params.eps_over_M},
                 {"gamma_over_M", params.gamma_over_M},
                 {"t_dir_over_M", params.t_dir_over_M}};
  j["grid"] = {{"n", grid.n},
               {"n_list", grid.n_list},
               {"scheme", to_string(grid.scheme)},
               {"mode", to_string(grid.mode)}};
  j["run"] = {{"perturbation", to_string(run.perturbation)},
              {"averaged", run.averaged},
              {"seed", run.seed},
              {"out", run.out},
              {"format", run.format},
              {"levels", run.levels},
              {"period", run.period},
              {"n_periods", run.n_periods},
              {"halvings", run.halvings},
              {"corrupt", to_string(run.corrupt)}};
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig c;
  reject_unknown(j, {"lattice", "params", "grid", "run"}, "config");
  if (j.contains("lattice")) {
    const auto& s = j["lattice"];
    reject_unknown(s, {"n_sites", "boundary"}, "lattice");
    read(s, "n_sites", c.lattice.n_sites, "lattice");
    std::string b = to_string(c.lattice.boundary);
    read(s, "boundary", b, "lattice");
    c.lattice.boundary = boundary_from_string(b);
  }
  if (j.contains("params")) {
    const auto& s = j["params"];
    reject_unknown(s, {"mass", "coupling_sq_over_2M", "eps_over_M", "gamma_over_M", "t_dir_over_M"}, "params");
    read(s, "mass", c.params.mass, "params");
    read(s, "coupling_sq_over_2M", c.params.coupling_sq_over_2M, "params");
    read(s, "eps_over_M", c.params.eps_over_M, "params");
    read(s, "gamma_over_M", c.params.gamma_over_M, "params");
    read(s, "t_dir_over_M", c.params.t_dir_over_M, "params");
  }
  if (j.contains("grid")) {
    const auto& s = j["grid"];
    reject_unknown(s, {"n", "n_list", "scheme", "mode"}, "grid");
    read(s, "n", c.grid.n, "grid");
    read(s, "n_list", c.grid.n_list, "grid");
    std::string scheme = to_string(c.grid.scheme), mode = to_string(c.grid.mode);
    read(s, "scheme", scheme, "grid");
    read(s, "mode", mode, "grid");
    c.grid.scheme = grid_scheme_from_string(scheme);
    c.grid.mode = averaging_mode_from_string(mode);
  }
  if (j.contains("run")) {
    const auto& s = j["run"];
    reject_unknown(s,
                   {"perturbation", "averaged", "seed", "out", "format", "levels", "period", "n_periods",
                    "halvings", "corrupt"},
                   "run");
    std::string pert = to_string(c.run.perturbation), corrupt = to_string(c.run.corrupt);
    read(s, "perturbation", pert, "run");
    read(s, "averaged", c.run.averaged, "run");
    read(s, "seed", c.run.seed, "run");
    read(s, "out", c.run.out, "run");
    read(s, "format", c.run.format, "run");
    read(s, "levels", c.run.levels, "run");
    read(s, "period", c.run.period, "run");
    read(s, "n_periods", c.run.n_periods, "run");
    read(s, "halvings", c.run.halvings, "run");
    read(s, "corrupt", corrupt, "run");
    c.run.perturbation = perturbation_from_string(pert);
    c.run.corrupt = corruption_from_string(corrupt);
  }
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return from_json(j);
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    try {
      if (dots != std::string::npos) {
        const int lo = std::stoi(item.substr(0, dots));
        const int hi = std::stoi(item.substr(dots + 2));
        if (hi < lo) throw ValidationError("empty N range '" + item + "'");
        for (int n = lo; n <= hi; ++n) out.push_back(n);
      } else {
        out.push_back(std::stoi(item));
      }
    } catch (const std::logic_error&) {
      throw ValidationError("cannot parse N list entry '" + item + "'");
    }
  }
  if (out.empty()) throw ValidationError("N list is empty");
  return out;
}

}  // namespace gaugedd
