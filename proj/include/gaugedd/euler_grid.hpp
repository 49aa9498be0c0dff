#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace gaugedd {

/// SU(2) element in the Euler parametrization exp(-i a G3) exp(-i b G2) exp(-i c G3).
struct EulerAngles {
  double alpha = 0.0;  // [0, 2pi)
  double beta = 0.0;   // [0, pi]
  double gamma = 0.0;  // [0, 4pi)

  void validate() const;
};

enum class GridScheme {
  cube_uniform,  // midpoints in beta
  haar_exact,    // midpoints in cos(beta)
};

std::string to_string(GridScheme s);
GridScheme grid_scheme_from_string(const std::string& s);

using MultiIndex = std::array<int, 3>;

// Row-major linearization nu = mu1*N^2 + mu2*N + mu3.
std::size_t multi_to_linear(const MultiIndex& mu, int n);
MultiIndex linear_to_multi(std::size_t nu, int n);

struct GridPoint {
  EulerAngles angles;
  double weight = 0.0;
};

/// N^3 Euler-angle grid with uniform weights 1/N^3, ordered by linear index.
class EulerGrid {
 public:
  EulerGrid(int n, GridScheme scheme);

  int n() const { return n_; }
  GridScheme scheme() const { return scheme_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<GridPoint>& points() const { return points_; }
  const GridPoint& point(std::size_t nu) const { return points_.at(nu); }
  const GridPoint& point(const MultiIndex& mu) const { return points_.at(multi_to_linear(mu, n_)); }
  bool uniform_weights() const;
  std::string descriptor() const;

 private:
  int n_;
  GridScheme scheme_;
  std::vector<GridPoint> points_;
};

}  // namespace gaugedd
