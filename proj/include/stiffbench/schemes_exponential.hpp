#pragma once

// Explicit exponential single-step schemes. Each step linearizes the problem
// at its own start state: L is the analytic Jacobian at (t0, y0) and
// N(t, y) = f(t, y) - L y is the nonlinear remainder. Divisions by L that
// appear in the classical formulations are evaluated as phi-function
// products, so exactly singular Jacobians are handled without regularization.

#include <functional>
#include <map>

#include "stiffbench/matfun.hpp"
#include "stiffbench/problems.hpp"
#include "stiffbench/schemes_implicit.hpp"  // StepStats

namespace stiffbench {

/// Per-step linear/nonlinear split of the right-hand side. Tests may build
/// one directly (e.g. with L = 0) instead of going through a problem.
struct Linearization {
  double t0 = 0.0;
  Vec y0;
  Mat L;
  Vec f0;
  std::function<Vec(double t, const Vec& y)> f;

  Vec N(double t, const Vec& y) const { return f(t, y) - L * y; }
  Vec n0() const { return f0 - L * y0; }
};

Linearization linearize(const OdeProblem& p, double t0, const Vec& y0);

/// Scratch for one step: phi bundles keyed by the multiple of h they were
/// computed at. Never reused across steps (L changes every step).
class ExpWorkspace {
 public:
  ExpWorkspace(const Mat& L, double h, StepStats* stats = nullptr)
      : L_(&L), h_(h), stats_(stats) {}

  /// Bundle for (scale * h) * L, computed on first use.
  const PhiBundle& at(double scale);

 private:
  const Mat* L_;
  double h_;
  StepStats* stats_;
  std::map<double, PhiBundle> cache_;
};

/// The rational scheme below is written with resolvents (I + c L h)^-1 while
/// its underlying approximation targets e^{-z}; the two conventions differ by
/// the sign of L h. Both are available; `etd_rdp_default_sign_mode()` picks
/// the one that tracks the exact flow on a scalar linear test.
enum class EtdRdpSignMode { PaperVerbatim, Negated };

EtdRdpSignMode etd_rdp_default_sign_mode();
const char* to_string(EtdRdpSignMode m);

// ---- step functions -------------------------------------------------------
// All return the new state after one step of size h > 0 taken from
// (lin.t0, lin.y0); overflow inside the matrix functions propagates as
// ExpmOverflow, and non-finite results are returned as-is for the caller to
// flag. `stats`, when given, counts matrix-function evaluations.

/// y1 = e^{Lh} (y0 + h N0). First order; does not preserve fixed points.
Vec if_euler_step(const Linearization& lin, double h, StepStats* stats = nullptr);

/// Second-order integrating factor Runge-Kutta (Heun on the transformed
/// equation).
Vec if2rk_step(const Linearization& lin, double h, StepStats* stats = nullptr);

/// y1 = e^{Lh} y0 + h phi1(Lh) N0.
Vec etd1_step(const Linearization& lin, double h, StepStats* stats = nullptr);

/// ETD1 predictor plus h phi2(Lh) (N(t0+h, a) - N0) corrector.
Vec etd2rk_step(const Linearization& lin, double h, StepStats* stats = nullptr);

/// Four-stage exponential time differencing scheme built on half-step
/// exponentials; the update weights are phi1 - 3 phi2 + 4 phi3,
/// 2 phi2 - 4 phi3 and 4 phi3 - phi2 at Lh.
Vec etd4rk_step(const Linearization& lin, double h, StepStats* stats = nullptr);

/// Exponential Runge-Kutta scheme averaging the remainder at the predictor:
/// y1 = e^{Lh} y0 + (h/2) phi1(Lh) (N(t0+h, a) + N0).
Vec rkmk2e_step(const Linearization& lin, double h, StepStats* stats = nullptr);

/// Second-order real-distinct-poles rational scheme; three LU solves and no
/// matrix exponential. Throws SingularResolvent if any (I +- c L h) is
/// singular at working precision.
Vec etd_rdp_step(const Linearization& lin, double h, EtdRdpSignMode mode,
                 StepStats* stats = nullptr);

/// Exponential Rosenbrock-Euler update y1 = y0 + h phi1(Lh) f0.
Vec epi2_step(const Linearization& lin, double h, StepStats* stats = nullptr);

/// Third-order exponential propagation scheme: Rosenbrock-Euler update plus
/// 2 h phi3(Lh) R(r1), where R(y) = f(t,y) - f0 - L (y - y0) and r1 is the
/// predictor y0 + h phi1(Lh/2) f0.
Vec epirk3_step(const Linearization& lin, double h, StepStats* stats = nullptr);

/// Generalized integrating factor scheme combining a frozen-remainder
/// exponential flow with RK4-style corrections; reduces to classical RK4 at
/// L = 0.
Vec etd1rk4_step(const Linearization& lin, double h, StepStats* stats = nullptr);

/// Integrating-factor form of the three-stage SSP Runge-Kutta method. Its
/// middle stage needs e^{-Lh/2}, which overflows for strongly stiff L; the
/// overflow is reported (ExpmOverflow) and recorded as divergence upstream.
Vec essprk_step(const Linearization& lin, double h, StepStats* stats = nullptr);

/// SSP integrating-factor variant with nondecreasing abscissas; avoids
/// negative exponents.
Vec essprk_plus_step(const Linearization& lin, double h, StepStats* stats = nullptr);

}  // namespace stiffbench
