#pragma once

// The benchmark ODE systems. Each problem carries its right-hand side, a
// hand-coded analytic Jacobian, initial state, time span, and the rule used
// to lay out benchmark grids over that span.

#include <functional>
#include <string>
#include <vector>

#include "stiffbench/linalg.hpp"

namespace stiffbench {

enum class GridRule { Linear, Logarithmic };

struct OdeProblem {
  std::string name;
  int dim = 0;
  std::function<Vec(double t, const Vec& y)> f;
  std::function<Mat(double t, const Vec& y)> jacobian;
  Vec y0;
  double t_start = 0.0;
  double t_end = 0.0;
  GridRule grid_rule = GridRule::Linear;
  int reference_substeps = 100;

  /// Closed-form solution when one exists (only the smooth test problem);
  /// empty otherwise.
  std::function<Vec(double t)> exact;

  /// Box the solution stays inside, per component [lo, hi]. Used to draw
  /// plausible random states for Jacobian checks.
  std::vector<std::pair<double, double>> envelope;
};

/// Van der Pol oscillator with mu = 1000: x' = y, y' = 1000(1 - x^2)y - x.
OdeProblem vanderpol();

/// Eight-species HIRES photochemical reaction network.
OdeProblem hires();

/// Robertson autocatalytic kinetics; logarithmic time range [1e-5, 1e7].
/// Its Jacobian is exactly singular (mass conservation).
OdeProblem robertson();

/// Nonstiff, nonlinear fixture with a closed-form solution, used for
/// convergence-order studies: y' = (y1^2 + y2^2) * [-y2, y1]. From [1, 0]
/// the radius is 1 and the solution is [cos t, sin t].
OdeProblem smooth_test();

/// Lookup by CLI name ("vanderpol", "hires", "robertson", "smooth").
/// Throws std::invalid_argument for unknown names.
OdeProblem problem_by_name(const std::string& name);

const std::vector<std::string>& problem_names();

}  // namespace stiffbench
