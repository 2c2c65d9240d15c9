#include "stiffbench/tableau.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace stiffbench {

namespace {

ButcherTableau make_radau3() {
  ButcherTableau t;
  t.stages = 2;
  t.order = 3;
  t.a = Mat(2, 2);
  t.a(0, 0) = 5.0 / 12.0;
  t.a(0, 1) = -1.0 / 12.0;
  t.a(1, 0) = 3.0 / 4.0;
  t.a(1, 1) = 1.0 / 4.0;
  t.b = {3.0 / 4.0, 1.0 / 4.0};
  t.c = {1.0 / 3.0, 1.0};
  return t;
}

ButcherTableau make_radau5() {
  const double r6 = std::sqrt(6.0);
  ButcherTableau t;
  t.stages = 3;
  t.order = 5;
  t.a = Mat(3, 3);
  t.a(0, 0) = (88.0 - 7.0 * r6) / 360.0;
  t.a(0, 1) = (296.0 - 169.0 * r6) / 1800.0;
  t.a(0, 2) = (-2.0 + 3.0 * r6) / 225.0;
  t.a(1, 0) = (296.0 + 169.0 * r6) / 1800.0;
  t.a(1, 1) = (88.0 + 7.0 * r6) / 360.0;
  t.a(1, 2) = (-2.0 - 3.0 * r6) / 225.0;
  t.a(2, 0) = (16.0 - r6) / 36.0;
  t.a(2, 1) = (16.0 + r6) / 36.0;
  t.a(2, 2) = 1.0 / 9.0;
  t.b = {(16.0 - r6) / 36.0, (16.0 + r6) / 36.0, 1.0 / 9.0};
  t.c = {(4.0 - r6) / 10.0, (4.0 + r6) / 10.0, 1.0};
  return t;
}

ButcherTableau make_rk4() {
  ButcherTableau t;
  t.stages = 4;
  t.order = 4;
  t.a = Mat(4, 4, 0.0);
  t.a(1, 0) = 0.5;
  t.a(2, 1) = 0.5;
  t.a(3, 2) = 1.0;
  t.b = {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0};
  t.c = {0.0, 0.5, 0.5, 1.0};
  return t;
}

Vec hadamard(const Vec& x, const Vec& y) {
  Vec z(x.size());
  for (int i = 0; i < x.size(); ++i) z[i] = x[i] * y[i];
  return z;
}

Vec powv(const Vec& x, int k) {
  Vec z(x.size(), 1.0);
  for (int j = 0; j < k; ++j) z = hadamard(z, x);
  return z;
}

double dot(const Vec& x, const Vec& y) {
  double s = 0.0;
  for (int i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

const ButcherTableau& radau3_tableau() {
  static const ButcherTableau t = make_radau3();
  return t;
}

const ButcherTableau& radau5_tableau() {
  static const ButcherTableau t = make_radau5();
  return t;
}

const ButcherTableau& rk4_tableau() {
  static const ButcherTableau t = make_rk4();
  return t;
}

double consistency_residual(const ButcherTableau& t) {
  double r = 0.0;
  double bsum = 0.0;
  for (int j = 0; j < t.stages; ++j) bsum += t.b[j];
  r = std::abs(bsum - 1.0);
  for (int i = 0; i < t.stages; ++i) {
    double row = 0.0;
    for (int j = 0; j < t.stages; ++j) row += t.a(i, j);
    r = std::max(r, std::abs(row - t.c[i]));
  }
  return r;
}

double order_condition_residual(const ButcherTableau& t, int order) {
  if (order < 1 || order > 5)
    throw std::invalid_argument("order_condition_residual: supported orders are 1..5");

  const Vec& b = t.b;
  const Vec& c = t.c;
  const Mat& A = t.a;
  const Vec Ac = A * c;
  const Vec Ac2 = A * powv(c, 2);
  const Vec Ac3 = A * powv(c, 3);
  const Vec AAc = A * Ac;

  // (elementary weight, 1/gamma) pairs grouped by tree order.
  std::vector<std::pair<double, double>> conds;
  conds.emplace_back(dot(b, Vec(t.stages, 1.0)), 1.0);
  if (order >= 2) conds.emplace_back(dot(b, c), 1.0 / 2.0);
  if (order >= 3) {
    conds.emplace_back(dot(b, powv(c, 2)), 1.0 / 3.0);
    conds.emplace_back(dot(b, Ac), 1.0 / 6.0);
  }
  if (order >= 4) {
    conds.emplace_back(dot(b, powv(c, 3)), 1.0 / 4.0);
    conds.emplace_back(dot(b, hadamard(c, Ac)), 1.0 / 8.0);
    conds.emplace_back(dot(b, Ac2), 1.0 / 12.0);
    conds.emplace_back(dot(b, AAc), 1.0 / 24.0);
  }
  if (order >= 5) {
    conds.emplace_back(dot(b, powv(c, 4)), 1.0 / 5.0);
    conds.emplace_back(dot(b, hadamard(powv(c, 2), Ac)), 1.0 / 10.0);
    conds.emplace_back(dot(b, hadamard(Ac, Ac)), 1.0 / 20.0);
    conds.emplace_back(dot(b, hadamard(c, Ac2)), 1.0 / 15.0);
    conds.emplace_back(dot(b, hadamard(c, AAc)), 1.0 / 30.0);
    conds.emplace_back(dot(b, Ac3), 1.0 / 20.0);
    conds.emplace_back(dot(b, A * hadamard(c, Ac)), 1.0 / 40.0);
    conds.emplace_back(dot(b, A * Ac2), 1.0 / 60.0);
    conds.emplace_back(dot(b, A * AAc), 1.0 / 120.0);
  }

  double r = 0.0;
  for (const auto& [w, target] : conds) r = std::max(r, std::abs(w - target));
  return r;
}

}  // namespace stiffbench
