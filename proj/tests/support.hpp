#pragma once

// Shared helpers for the test suites: deterministic random data, the
// truncated-series oracles for the matrix functions, and a central-difference
// Jacobian used to cross-check the hand-coded analytic ones. These stay in
// test code on purpose; nothing here is reachable from the library.

#include <cmath>
#include <random>

#include "stiffbench/linalg.hpp"
#include "stiffbench/problems.hpp"

namespace stiffbench::testsupport {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed1234u);
  return gen;
}

inline double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng());
}

inline Vec random_vec(int n, double lo = -1.0, double hi = 1.0) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = uniform(lo, hi);
  return v;
}

inline Mat random_mat(int rows, int cols, double lo = -1.0, double hi = 1.0) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

/// Random square matrix rescaled to a requested inf-norm.
inline Mat random_mat_with_norm(int n, double target_norm) {
  Mat m = random_mat(n, n);
  const double norm = inf_norm(m);
  if (norm > 0.0) m *= target_norm / norm;
  return m;
}

/// Truncated Taylor series of e^A.
inline Mat expm_series(const Mat& a, int terms = 30) {
  const int n = a.rows();
  Mat sum = Mat::identity(n);
  Mat power = Mat::identity(n);
  for (int k = 1; k <= terms; ++k) {
    power = (1.0 / k) * (power * a);
    sum += power;
  }
  return sum;
}

/// Truncated series of phi_k(A) = sum_{j>=0} A^j / (j + k)!.
inline Mat phi_series(const Mat& a, int k, int terms = 30) {
  const int n = a.rows();
  double coef = 1.0;
  for (int j = 2; j <= k; ++j) coef /= j;  // 1/k!
  Mat sum = coef * Mat::identity(n);
  Mat power = Mat::identity(n);
  for (int j = 1; j <= terms; ++j) {
    power = power * a;
    coef /= (j + k);  // 1/(j+k)!
    sum += coef * power;
  }
  return sum;
}

/// Central-difference Jacobian with per-component step 1e-6 * (1 + |y_i|).
inline Mat fd_jacobian(const OdeProblem& p, double t, const Vec& y) {
  Mat j(p.dim, p.dim);
  for (int c = 0; c < p.dim; ++c) {
    const double step = 1e-6 * (1.0 + std::abs(y[c]));
    Vec yp = y, ym = y;
    yp[c] += step;
    ym[c] -= step;
    const Vec fp = p.f(t, yp);
    const Vec fm = p.f(t, ym);
    for (int r = 0; r < p.dim; ++r) j(r, c) = (fp[r] - fm[r]) / (2.0 * step);
  }
  return j;
}

inline double rel_mat_err(const Mat& got, const Mat& want) {
  const double scale = std::max(1e-300, inf_norm(want));
  return inf_norm(got - want) / scale;
}

}  // namespace stiffbench::testsupport
