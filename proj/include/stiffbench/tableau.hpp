#pragma once

#include "stiffbench/linalg.hpp"

namespace stiffbench {

/// Coefficients of an s-stage Runge-Kutta method. Row sums of `a` must equal
/// `c` and the weights must sum to one; `order_condition_residual` checks the
/// classical order conditions so hard-coded tables need not be trusted.
struct ButcherTableau {
  int stages = 0;
  Mat a;
  Vec b;
  Vec c;
  int order = 0;
};

/// Two-stage Radau IIA, order 3.
const ButcherTableau& radau3_tableau();

/// Three-stage Radau IIA, order 5. Entries are sqrt(6) expressions evaluated
/// in double precision.
const ButcherTableau& radau5_tableau();

/// Classical RK4 (used to cross-check the condition evaluator itself).
const ButcherTableau& rk4_tableau();

/// Max absolute residual over all rooted-tree order conditions up to
/// `order` (supported through order 5).
double order_condition_residual(const ButcherTableau& t, int order);

/// Max deviation of sum(b)-1 and of row sums of `a` against `c`.
double consistency_residual(const ButcherTableau& t);

}  // namespace stiffbench
