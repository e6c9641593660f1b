// errors.hpp — exception types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace tripod {

// Invalid user-supplied parameters or arguments. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failure: degenerate steady state, eigensolver non-convergence,
// unstable time step. The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tripod
