#pragma once

// Classical explicit baselines: fixed-step RK4 for the benchmark runs and
// the adaptive Runge-Kutta-Fehlberg 4(5) pair for the stiffness demo.

#include <cstdint>
#include <vector>

#include "stiffbench/problems.hpp"

namespace stiffbench {

struct AdaptiveStats {
  std::int64_t accepted_steps = 0;
  std::int64_t rejected_steps = 0;
  std::int64_t function_evaluations = 0;  // every rhs call, rejected attempts included
  double final_time = 0.0;
};

struct AdaptiveTrajectory {
  std::vector<double> times;
  std::vector<Vec> states;
  AdaptiveStats stats;
};

/// One classical four-stage step; exactly four rhs evaluations.
Vec rk4_step(const OdeProblem& p, double t0, const Vec& y0, double h);

/// Integrates the full problem span with Fehlberg 4(5) embedded error
/// control: a step is accepted when the scaled error estimate is <= 1, the
/// next step is scaled by 0.9 * est^(-1/5) clamped to [0.2, 5], and the
/// fourth-order solution is propagated. Throws NumericsError if the step
/// size underflows below 1e-14 * span.
AdaptiveTrajectory rkf45_integrate(const OdeProblem& p, double rtol, double atol);

/// Scaled max-norm error estimate for one RKF45 attempt from (t0, y0) with
/// step h (exposed so tests can re-check accepted steps).
double rkf45_error_estimate(const OdeProblem& p, double t0, const Vec& y0, double h,
                            double rtol, double atol);

}  // namespace stiffbench
