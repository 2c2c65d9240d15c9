#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "stiffbench/problems.hpp"
#include "support.hpp"

using namespace stiffbench;
namespace ts = stiffbench::testsupport;

namespace {

Vec random_state(const OdeProblem& p) {
  Vec y(p.dim);
  for (int i = 0; i < p.dim; ++i)
    y[i] = ts::uniform(p.envelope[static_cast<size_t>(i)].first,
                       p.envelope[static_cast<size_t>(i)].second);
  return y;
}

}  // namespace

TEST_CASE("vanderpol values") {
  const OdeProblem p = vanderpol();
  CHECK(p.dim == 2);
  CHECK(p.t_start == 0.0);
  CHECK(p.t_end == 1300.0);
  CHECK(p.grid_rule == GridRule::Linear);

  const Vec f0 = p.f(0.0, p.y0);
  CHECK(f0[0] == 0.0);
  CHECK(f0[1] == -1.0);

  const Mat j = p.jacobian(0.0, p.y0);
  CHECK(j(0, 0) == 0.0);
  CHECK(j(0, 1) == 1.0);
  CHECK(j(1, 0) == -1.0);
  CHECK(j(1, 1) == 0.0);

  const Vec fo = p.f(0.0, Vec{0.0, 0.0});
  CHECK(fo[0] == 0.0);
  CHECK(fo[1] == 0.0);
}

TEST_CASE("hires values") {
  const OdeProblem p = hires();
  CHECK(p.dim == 8);
  CHECK(p.t_end == doctest::Approx(321.8122));
  CHECK(p.y0[4] == 1.0);
  CHECK(p.y0[7] == 0.0057);

  const Vec f0 = p.f(0.0, p.y0);
  CHECK(f0[0] == doctest::Approx(-1.7093).epsilon(1e-12));
  CHECK(f0[1] == doctest::Approx(1.71).epsilon(1e-12));

  const Mat j = p.jacobian(0.0, p.y0);
  CHECK(j(6, 5) == doctest::Approx(280.0 * 0.0057).epsilon(1e-14));

  SUBCASE("the last two components are exactly conservative") {
    for (int trial = 0; trial < 50; ++trial) {
      const Vec y = random_state(p);
      const Vec f = p.f(0.0, y);
      CHECK(f[6] + f[7] == 0.0);
    }
  }
}

TEST_CASE("robertson values") {
  const OdeProblem p = robertson();
  CHECK(p.dim == 3);
  CHECK(p.t_start == 1e-5);
  CHECK(p.t_end == 1e7);
  CHECK(p.grid_rule == GridRule::Logarithmic);

  const Vec f0 = p.f(0.0, p.y0);
  CHECK(f0[0] == -0.04);
  CHECK(f0[1] == 0.04);
  CHECK(f0[2] == 0.0);

  const Mat j = p.jacobian(0.0, p.y0);
  CHECK(j(0, 0) == -0.04);
  CHECK(j(1, 0) == 0.04);
  CHECK(j(2, 2) == 0.0);
  CHECK(lu_factor(j).singular);

  SUBCASE("mass conservation at ulp level") {
    for (int trial = 0; trial < 50; ++trial) {
      const Vec y = random_state(p);
      const Vec f = p.f(0.0, y);
      double rates = 0.0;
      for (double x : f) rates += std::abs(x);
      CHECK(std::abs(f[0] + f[1] + f[2]) <= 1e-15 * (1.0 + rates));
      // Jacobian columns sum to zero the same way.
      const Mat jj = p.jacobian(0.0, y);
      for (int c = 0; c < 3; ++c) {
        double colabs = 0.0, col = 0.0;
        for (int r = 0; r < 3; ++r) {
          col += jj(r, c);
          colabs += std::abs(jj(r, c));
        }
        CHECK(std::abs(col) <= 1e-15 * (1.0 + colabs));
      }
    }
  }
}

TEST_CASE("smooth test problem") {
  const OdeProblem p = smooth_test();
  const Vec f0 = p.f(0.0, p.y0);
  CHECK(f0[0] == 0.0);
  CHECK(f0[1] == 1.0);

  const Vec q = p.exact(M_PI / 2.0);
  CHECK(q[0] == doctest::Approx(0.0));
  CHECK(q[1] == doctest::Approx(1.0));

  SUBCASE("radius is a first integral of the vector field") {
    for (int trial = 0; trial < 50; ++trial) {
      const Vec y = random_state(p);
      const Vec f = p.f(0.0, y);
      CHECK(std::abs(y[0] * f[0] + y[1] * f[1]) <= 1e-14);
    }
  }
  SUBCASE("closed form stays on the unit circle") {
    for (double t = 0.0; t <= 6.4; t += 0.37) {
      const Vec y = p.exact(t);
      CHECK(y[0] * y[0] + y[1] * y[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("analytic Jacobians agree with central differences") {
  for (const auto& name : problem_names()) {
    const OdeProblem p = problem_by_name(name);
    for (int trial = 0; trial < 50; ++trial) {
      const Vec y = random_state(p);
      const Mat ja = p.jacobian(0.0, y);
      const Mat jf = ts::fd_jacobian(p, 0.0, y);
      const double tol = 1e-5 * std::max(1.0, inf_norm(ja));
      CHECK_MESSAGE(inf_norm(ja - jf) <= tol, "model ", name);
    }
  }
}

TEST_CASE("lookup by name") {
  CHECK(problem_by_name("vanderpol").name == "vanderpol");
  CHECK(problem_by_name("smooth").name == "smooth");
  CHECK_THROWS_AS(problem_by_name("nonsense"), std::invalid_argument);
}
