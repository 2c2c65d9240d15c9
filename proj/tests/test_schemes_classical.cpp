#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "stiffbench/errors.hpp"
#include "stiffbench/schemes_classical.hpp"
#include "support.hpp"

using namespace stiffbench;

namespace {

OdeProblem scalar_linear(double lambda) {
  OdeProblem p;
  p.name = "scalar";
  p.dim = 1;
  p.y0 = {1.0};
  p.t_start = 0.0;
  p.t_end = 1.0;
  p.f = [lambda](double, const Vec& y) { return Vec{lambda * y[0]}; };
  p.jacobian = [lambda](double, const Vec&) {
    Mat j(1, 1);
    j(0, 0) = lambda;
    return j;
  };
  p.exact = [lambda](double t) { return Vec{std::exp(lambda * t)}; };
  return p;
}

double rk4_amplification(double z) {
  // One step on y' = z*y with h = 1 evaluates the quartic stability polynomial.
  const OdeProblem p = scalar_linear(z);
  return rk4_step(p, 0.0, p.y0, 1.0)[0];
}

}  // namespace

TEST_CASE("rk4 basics") {
  OdeProblem zero;
  zero.dim = 2;
  zero.y0 = {1.0, -2.0};
  zero.f = [](double, const Vec&) { return Vec{0.0, 0.0}; };
  const Vec y = rk4_step(zero, 0.0, zero.y0, 3.0);
  CHECK(y[0] == 1.0);
  CHECK(y[1] == -2.0);

  const OdeProblem p = scalar_linear(-1.0);
  const Vec y1 = rk4_step(p, 0.0, p.y0, 0.1);
  // Degree-4 Taylor value of e^{-0.1}.
  CHECK(std::abs(y1[0] - 0.90483750) <= 1e-9);
}

TEST_CASE("rk4 stability boundary near -2.785") {
  CHECK(std::abs(rk4_amplification(-2.78)) < 1.0);
  CHECK(std::abs(rk4_amplification(-2.8)) > 1.0);
  CHECK(std::abs(rk4_amplification(-3.0)) > 1.0);
}

TEST_CASE("adaptive integration of the smooth problem") {
  const OdeProblem p = smooth_test();
  const AdaptiveTrajectory traj = rkf45_integrate(p, 1e-6, 1e-9);
  const Vec& yf = traj.states.back();
  CHECK(std::abs(yf[0] - std::cos(1.0)) <= 1e-5);
  CHECK(std::abs(yf[1] - std::sin(1.0)) <= 1e-5);
  CHECK(traj.stats.function_evaluations >=
        6 * (traj.stats.accepted_steps + traj.stats.rejected_steps));
  CHECK(traj.stats.final_time == doctest::Approx(1.0));
}

TEST_CASE("nonstiff scalar problem needs few steps") {
  const OdeProblem p = scalar_linear(-1.0);
  const AdaptiveTrajectory traj = rkf45_integrate(p, 1e-6, 1e-9);
  CHECK(traj.stats.accepted_steps < 100);
  CHECK(std::abs(traj.states.back()[0] - std::exp(-1.0)) <= 1e-6);
}

TEST_CASE("accepted steps re-estimate below twice the tolerance") {
  const OdeProblem p = smooth_test();
  const double rtol = 1e-5, atol = 1e-8;
  const AdaptiveTrajectory traj = rkf45_integrate(p, rtol, atol);
  for (size_t i = 0; i + 1 < traj.times.size(); ++i) {
    const double h = traj.times[i + 1] - traj.times[i];
    CHECK(rkf45_error_estimate(p, traj.times[i], traj.states[i], h, rtol, atol) <= 2.0);
  }
}

TEST_CASE("step-size underflow raises MinStepReached") {
  OdeProblem p;
  p.dim = 1;
  p.y0 = {1.0};
  p.t_start = 0.0;
  p.t_end = 1.0;
  // Unbounded blow-up before t=1 forces h toward zero.
  p.f = [](double, const Vec& y) { return Vec{y[0] * y[0] * 10.0}; };
  p.jacobian = [](double, const Vec& y) {
    Mat j(1, 1);
    j(0, 0) = 20.0 * y[0];
    return j;
  };
  CHECK_THROWS_AS(rkf45_integrate(p, 1e-6, 1e-9), NumericsError);
}
