#pragma once

#include <stdexcept>
#include <string>

namespace gdnls {

// Bad user-supplied configuration (grid sizes, parameter ranges, ...).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid physical/mathematical parameters (branch mismatch, zero data, ...).
struct ParamError : std::runtime_error {
  explicit ParamError(const std::string& what) : std::runtime_error(what) {}
};

// Operands living on different grids.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// NaN/Inf produced by a numerical operation.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Box truncation too aggressive: the field is not negligible at the boundary.
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gdnls
