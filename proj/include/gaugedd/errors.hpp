#pragma once

#include <stdexcept>
#include <string>

namespace gaugedd {

// Bad input: invalid lattice, out-of-range indices, malformed config.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical contract violated: Hermiticity, non-convergence, size limits.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gaugedd
