#include "stiffbench/schemes_classical.hpp"

#include <algorithm>
#include <cmath>

#include "stiffbench/errors.hpp"

namespace stiffbench {

Vec rk4_step(const OdeProblem& p, double t0, const Vec& y0, double h) {
  const Vec k1 = p.f(t0, y0);
  const Vec k2 = p.f(t0 + 0.5 * h, y0 + (0.5 * h) * k1);
  const Vec k3 = p.f(t0 + 0.5 * h, y0 + (0.5 * h) * k2);
  const Vec k4 = p.f(t0 + h, y0 + h * k3);
  return y0 + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

namespace {

// Fehlberg 4(5) coefficients.
constexpr double c2 = 1.0 / 4.0, c3 = 3.0 / 8.0, c4 = 12.0 / 13.0, c5 = 1.0,
                 c6 = 1.0 / 2.0;
constexpr double a21 = 1.0 / 4.0;
constexpr double a31 = 3.0 / 32.0, a32 = 9.0 / 32.0;
constexpr double a41 = 1932.0 / 2197.0, a42 = -7200.0 / 2197.0, a43 = 7296.0 / 2197.0;
constexpr double a51 = 439.0 / 216.0, a52 = -8.0, a53 = 3680.0 / 513.0,
                 a54 = -845.0 / 4104.0;
constexpr double a61 = -8.0 / 27.0, a62 = 2.0, a63 = -3544.0 / 2565.0,
                 a64 = 1859.0 / 4104.0, a65 = -11.0 / 40.0;
constexpr double b41 = 25.0 / 216.0, b43 = 1408.0 / 2565.0, b44 = 2197.0 / 4104.0,
                 b45 = -1.0 / 5.0;
constexpr double b51 = 16.0 / 135.0, b53 = 6656.0 / 12825.0, b54 = 28561.0 / 56430.0,
                 b55 = -9.0 / 50.0, b56 = 2.0 / 55.0;

struct Rkf45Attempt {
  Vec y4;       // fourth-order solution (propagated)
  double est;   // scaled error estimate; accept when <= 1
};

Rkf45Attempt rkf45_attempt(const OdeProblem& p, double t0, const Vec& y0, double h,
                           double rtol, double atol) {
  const Vec k1 = p.f(t0, y0);
  const Vec k2 = p.f(t0 + c2 * h, y0 + (h * a21) * k1);
  const Vec k3 = p.f(t0 + c3 * h, y0 + h * (a31 * k1 + a32 * k2));
  const Vec k4 = p.f(t0 + c4 * h, y0 + h * (a41 * k1 + a42 * k2 + a43 * k3));
  const Vec k5 = p.f(t0 + c5 * h, y0 + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
  const Vec k6 = p.f(t0 + c6 * h,
                     y0 + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));

  Rkf45Attempt out;
  out.y4 = y0 + h * (b41 * k1 + b43 * k3 + b44 * k4 + b45 * k5);
  const Vec y5 = y0 + h * (b51 * k1 + b53 * k3 + b54 * k4 + b55 * k5 + b56 * k6);

  double est = 0.0;
  for (int i = 0; i < y0.size(); ++i) {
    const double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y5[i]));
    est = std::max(est, std::abs(y5[i] - out.y4[i]) / scale);
  }
  out.est = est;
  return out;
}

}  // namespace

double rkf45_error_estimate(const OdeProblem& p, double t0, const Vec& y0, double h,
                            double rtol, double atol) {
  return rkf45_attempt(p, t0, y0, h, rtol, atol).est;
}

AdaptiveTrajectory rkf45_integrate(const OdeProblem& p, double rtol, double atol) {
  if (rtol <= 0.0 || atol <= 0.0)
    throw std::invalid_argument("rkf45_integrate: tolerances must be positive");

  const double span = p.t_end - p.t_start;
  const double h_min = 1e-14 * span;

  AdaptiveTrajectory traj;
  double t = p.t_start;
  Vec y = p.y0;
  traj.times.push_back(t);
  traj.states.push_back(y);

  double h = 1e-4 * span;
  while (t < p.t_end) {
    h = std::min(h, p.t_end - t);
    if (h < h_min)
      throw NumericsError("rkf45_integrate: step size underflow (MinStepReached)");

    const Rkf45Attempt att = rkf45_attempt(p, t, y, h, rtol, atol);
    traj.stats.function_evaluations += 6;

    double factor = att.est > 0.0 ? 0.9 * std::pow(att.est, -0.2) : 5.0;
    factor = std::clamp(factor, 0.2, 5.0);

    if (att.est <= 1.0 && all_finite(att.y4)) {
      t += h;
      y = att.y4;
      traj.times.push_back(t);
      traj.states.push_back(y);
      ++traj.stats.accepted_steps;
    } else {
      ++traj.stats.rejected_steps;
      if (!all_finite(att.y4)) factor = 0.2;
    }
    h *= factor;
  }
  traj.stats.final_time = t;
  return traj;
}

}  // namespace stiffbench
