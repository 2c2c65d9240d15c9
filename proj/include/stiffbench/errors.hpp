#pragma once

#include <stdexcept>
#include <string>

#include "stiffbench/linalg.hpp"

namespace stiffbench {

/// Base for recoverable numerical failures. Benchmark drivers catch these and
/// record the step as diverged instead of aborting the run.
struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Matrix exponential would contain non-finite entries.
struct ExpmOverflow : NumericsError {
  using NumericsError::NumericsError;
};

struct SingularMatrix : NumericsError {
  using NumericsError::NumericsError;
};

/// Newton iteration matrix could not be factorized.
struct SingularNewtonMatrix : NumericsError {
  using NumericsError::NumericsError;
};

/// A resolvent (I + c*L*h) required by a rational scheme is singular.
struct SingularResolvent : NumericsError {
  using NumericsError::NumericsError;
};

/// Newton ran out of iterations; carries the last iterate and its residual
/// norm so callers can inspect how close the solve got.
struct NewtonNonConvergence : NumericsError {
  NewtonNonConvergence(const std::string& what, Vec last, double resid)
      : NumericsError(what), last_iterate(std::move(last)), residual_norm(resid) {}
  Vec last_iterate;
  double residual_norm = 0.0;
};

/// Reference trajectory failed its self-consistency check even after the
/// substep-count retry.
struct ReferenceNotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Convergence-study errors hit the floating-point floor; the fit would be
/// meaningless. Callers should shrink the span or enlarge the steps.
struct DegenerateFit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stiffbench
