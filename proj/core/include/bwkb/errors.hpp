#pragma once

#include <stdexcept>
#include <string>

namespace bwkb {

/// Invalid user-facing configuration (bad dimensions, malformed files, ...).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid data handed to a solver (domain violations, incompatible data).
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure inside a solver.
class SolverError : public std::runtime_error {
public:
  SolverError(const std::string& what, int mode_index = -1, int pivot_index = -1)
      : std::runtime_error(what), mode(mode_index), pivot(pivot_index) {}

  int mode;   // Fourier mode of the failing system, -1 if not applicable
  int pivot;  // pivot index for singular factorizations, -1 otherwise
};

/// Violation of an internal structural invariant (signals a bug upstream).
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bwkb
