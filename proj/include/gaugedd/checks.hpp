#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaugedd/model.hpp"

namespace gaugedd {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct CheckReport {
  std::vector<CheckResult> results;
  bool all_passed() const;
};

// Deliberate defects for negative-control runs of the suite.
enum class Corruption { none, left_sign, link_sign };
std::string to_string(Corruption c);
Corruption corruption_from_string(const std::string& s);

struct CheckOptions {
  LatticeConfig lattice;
  ModelParams params;
  std::uint64_t seed = 1234;
  Corruption corruption = Corruption::none;
};

// Operator algebra, Gauss law, gauge invariance, Hermiticity and group-averaging
// identities. Each entry carries its max residual.
CheckReport run_check_suite(const CheckOptions& options);

}  // namespace gaugedd
