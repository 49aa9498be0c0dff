#include "gaugedd/euler_grid.hpp"

#include <cmath>
#include <numbers>

#include "gaugedd/errors.hpp"

namespace gaugedd {

void EulerAngles::validate() const {
  constexpr double pi = std::numbers::pi;
  const bool ok = alpha >= 0.0 && alpha < 2.0 * pi && beta >= 0.0 && beta <= pi && gamma >= 0.0 &&
                  gamma < 4.0 * pi;
  if (!ok) throw ValidationError("Euler angles out of range");
}

std::string to_string(GridScheme s) { return s == GridScheme::cube_uniform ? "cube" : "haar"; }

GridScheme grid_scheme_from_string(const std::string& s) {
  if (s == "cube" || s == "cube_uniform") return GridScheme::cube_uniform;
  if (s == "haar" || s == "haar_exact") return GridScheme::haar_exact;
  throw ValidationError("unknown grid scheme '" + s + "' (expected cube|haar)");
}

std::size_t multi_to_linear(const MultiIndex& mu, int n) {
  if (n < 1) throw ValidationError("grid size N must be positive");
  for (int m : mu) {
    if (m < 0 || m >= n) throw ValidationError("multi-index component out of range");
  }
  const auto nn = static_cast<std::size_t>(n);
  return static_cast<std::size_t>(mu[0]) * nn * nn + static_cast<std::size_t>(mu[1]) * nn +
         static_cast<std::size_t>(mu[2]);
}

MultiIndex linear_to_multi(std::size_t nu, int n) {
  if (n < 1) throw ValidationError("grid size N must be positive");
  const auto nn = static_cast<std::size_t>(n);
  if (nu >= nn * nn * nn) throw ValidationError("linear index out of range");
  return {static_cast<int>(nu / (nn * nn)), static_cast<int>((nu / nn) % nn), static_cast<int>(nu % nn)};
}

EulerGrid::EulerGrid(int n, GridScheme scheme) : n_(n), scheme_(scheme) {
  if (n < 1) throw ValidationError("grid size N must be positive");
  constexpr double pi = std::numbers::pi;
  const double nd = static_cast<double>(n);
  std::vector<double> alpha(n), beta(n), gamma(n);
  for (int i = 0; i < n; ++i) {
    alpha[i] = 2.0 * pi * i / nd;
    gamma[i] = 4.0 * pi * i / nd;
    beta[i] = scheme == GridScheme::cube_uniform ? pi * (i + 0.5) / nd
                                                 : std::acos(-1.0 + (2.0 * i + 1.0) / nd);
  }
  const double w = 1.0 / (nd * nd * nd);
  points_.reserve(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) points_.push_back({{alpha[a], beta[b], gamma[c]}, w});
    }
  }
}

bool EulerGrid::uniform_weights() const {
  for (const auto& p : points_) {
    if (p.weight != points_.front().weight) return false;
  }
  return true;
}

std::string EulerGrid::descriptor() const { return to_string(scheme_) + ":N=" + std::to_string(n_); }

}  // namespace gaugedd
