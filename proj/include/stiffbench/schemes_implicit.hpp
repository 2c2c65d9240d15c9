#pragma once

// Single-step implicit schemes. Every step is self-contained: the Newton
// iteration starts fresh and no factorization is carried between steps, so
// steps may be evaluated independently and in parallel.

#include "stiffbench/problems.hpp"
#include "stiffbench/tableau.hpp"

namespace stiffbench {

struct NewtonConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_iters = 50;
};

struct StepStats {
  int newton_iters = 0;
  int phi_evals = 0;
};

/// y1 = y0 + h f(t0+h, y1), solved by full Newton with the analytic Jacobian.
/// Throws NewtonNonConvergence / SingularNewtonMatrix.
Vec backward_euler_step(const OdeProblem& p, double t0, const Vec& y0, double h,
                        const NewtonConfig& cfg = {}, StepStats* stats = nullptr);

/// y1 = y0 + h/2 (f(t0,y0) + f(t0+h,y1)).
Vec trapezoid_step(const OdeProblem& p, double t0, const Vec& y0, double h,
                   const NewtonConfig& cfg = {}, StepStats* stats = nullptr);

/// Fully-implicit Runge-Kutta step for a given tableau (Radau IIA here).
/// All stages are solved together; the Newton matrix is the exact block
/// Jacobian I - h (a (x) J) with J evaluated at each stage.
Vec radau_step(const OdeProblem& p, double t0, const Vec& y0, double h,
               const ButcherTableau& tab, const NewtonConfig& cfg = {},
               StepStats* stats = nullptr);

}  // namespace stiffbench
