#pragma once

#include <stdexcept>
#include <string>

namespace cavity {

/// Numerical failure inside an eigensolve or matrix assembly. Signals a bug
/// or an ill-posed request, not a user input problem.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested state has no bound free-space limit (or convergence to it is
/// unreachable within the search window).
struct UnboundStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A root search could not bracket a sign change.
struct NoRootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Failure inside the shooting-method verifier.
struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration (CLI or config file).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cavity
