#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "stiffbench/errors.hpp"
#include "stiffbench/matfun.hpp"
#include "stiffbench/problems.hpp"
#include "support.hpp"

using namespace stiffbench;
namespace ts = stiffbench::testsupport;

TEST_CASE("expm at zero is the identity") {
  const Mat e = expm(Mat::zero(3, 3));
  CHECK(inf_norm(e - Mat::identity(3)) <= 1e-15);
}

TEST_CASE("expm of a nilpotent matrix terminates the series") {
  Mat a(2, 2, 0.0);
  a(0, 1) = 1.0;
  const Mat e = expm(a);
  CHECK(e(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e(0, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e(1, 0) == doctest::Approx(0.0));
  CHECK(e(1, 1) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("expm of a diagonal matrix is the scalar exponential") {
  Mat a(2, 2, 0.0);
  a(0, 0) = 1.0;
  a(1, 1) = -2.0;
  const Mat e = expm(a);
  CHECK(e(0, 0) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(e(1, 1) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  CHECK(std::abs(e(0, 1)) <= 1e-14);
  CHECK(std::abs(e(1, 0)) <= 1e-14);
}

TEST_CASE("expm tracks the truncated series for moderate norms") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const Mat a = ts::random_mat_with_norm(n, ts::uniform(0.01, 5.0));
    const Mat want = ts::expm_series(a, 40);
    CHECK(ts::rel_mat_err(expm(a), want) <= 1e-10);
  }
}

TEST_CASE("phi bundle at zero hits the limiting values") {
  const PhiBundle b = phi_bundle(Mat::zero(3, 3));
  CHECK(inf_norm(b.exp - Mat::identity(3)) <= 1e-15);
  CHECK(inf_norm(b.phi1 - Mat::identity(3)) <= 1e-15);
  CHECK(inf_norm(b.phi2 - 0.5 * Mat::identity(3)) <= 1e-15);
  CHECK(inf_norm(b.phi3 - (1.0 / 6.0) * Mat::identity(3)) <= 1e-15);
}

TEST_CASE("scalar phi values at z = 1") {
  Mat a(1, 1);
  a(0, 0) = 1.0;
  const PhiBundle b = phi_bundle(a);
  const double e = std::exp(1.0);
  CHECK(b.phi1(0, 0) == doctest::Approx(e - 1.0).epsilon(1e-13));
  CHECK(b.phi2(0, 0) == doctest::Approx(e - 2.0).epsilon(1e-13));
  CHECK(b.phi3(0, 0) == doctest::Approx(e - 2.5).epsilon(1e-13));
}

TEST_CASE("series agreement at small norm, 1e-12 relative") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    const Mat a = ts::random_mat_with_norm(n, ts::uniform(0.01, 1.0));
    const PhiBundle b = phi_bundle(a);
    CHECK(ts::rel_mat_err(b.exp, ts::expm_series(a)) <= 1e-12);
    CHECK(ts::rel_mat_err(b.phi1, ts::phi_series(a, 1)) <= 1e-12);
    CHECK(ts::rel_mat_err(b.phi2, ts::phi_series(a, 2)) <= 1e-12);
    CHECK(ts::rel_mat_err(b.phi3, ts::phi_series(a, 3)) <= 1e-12);
  }
}

TEST_CASE("recurrence phi_k = (1/k!) I + A phi_{k+1}") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 8;
    const Mat a = ts::random_mat_with_norm(n, ts::uniform(0.1, 10.0));
    const PhiBundle b = phi_bundle(a);
    const Mat id = Mat::identity(n);
    // k = 0 reads phi_0 = e^A.
    CHECK(ts::rel_mat_err(id + a * b.phi1, b.exp) <= 1e-11);
    CHECK(ts::rel_mat_err(id + a * b.phi2, b.phi1) <= 1e-11);
    CHECK(ts::rel_mat_err(0.5 * id + a * b.phi3, b.phi2) <= 1e-11);
  }
}

TEST_CASE("singular argument: kinetics Jacobian at the initial state") {
  const OdeProblem rob = robertson();
  const Mat a = rob.jacobian(0.0, rob.y0);  // columns 2 and 3 are zero
  REQUIRE(lu_factor(a).singular);

  const PhiBundle b = phi_bundle(a);
  for (int i = 0; i < 3; ++i) {
    for (int j = 1; j < 3; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      CHECK(b.phi1(i, j) == doctest::Approx(want).epsilon(1e-13));
    }
  }
  CHECK(ts::rel_mat_err(b.phi1, ts::phi_series(a, 1)) <= 1e-12);
  CHECK(ts::rel_mat_err(b.phi2, ts::phi_series(a, 2)) <= 1e-12);
}

TEST_CASE("scaling robustness across twelve decades of h") {
  const OdeProblem rob = robertson();
  const Mat j = rob.jacobian(0.0, rob.y0);
  for (double h = 1e-8; h <= 1.001e7; h *= 10.0) {
    const Mat a = h * j;
    const PhiBundle b = phi_bundle(a);
    CHECK(all_finite(b.exp));
    CHECK(all_finite(b.phi1));
    CHECK(all_finite(b.phi2));
    CHECK(all_finite(b.phi3));
    const Mat id = Mat::identity(3);
    const double scale = inf_norm(b.exp) + inf_norm(a * b.phi1) + 1.0;
    CHECK(inf_norm(id + a * b.phi1 - b.exp) <= 1e-9 * scale);
    CHECK(inf_norm(id + a * b.phi2 - b.phi1) <= 1e-9 * (inf_norm(b.phi1) + inf_norm(a * b.phi2) + 1.0));
  }
}

TEST_CASE("overflow is reported, not returned") {
  Mat a(1, 1);
  a(0, 0) = 1e4;  // e^{10000} overflows double
  CHECK_THROWS_AS(expm(a), ExpmOverflow);
  Mat nan_arg(1, 1);
  nan_arg(0, 0) = std::nan("");
  CHECK_THROWS_AS(expm(nan_arg), ExpmOverflow);
}
