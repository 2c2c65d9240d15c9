#include "stiffbench/schemes_implicit.hpp"

#include <cmath>
#include <functional>

#include "stiffbench/errors.hpp"

namespace stiffbench {

namespace {

// Plain full-Newton loop: residual and Jacobian recomputed every iteration.
Vec newton_solve(const std::function<Vec(const Vec&)>& resid,
                 const std::function<Mat(const Vec&)>& jac, Vec x,
                 const NewtonConfig& cfg, StepStats* stats) {
  int iters = 0;
  for (;;) {
    Vec r = resid(x);
    const double rnorm = inf_norm(r);
    if (rnorm <= cfg.abs_tol + cfg.rel_tol * inf_norm(x)) {
      if (stats) stats->newton_iters += iters;
      return x;
    }
    if (iters >= cfg.max_iters) {
      if (stats) stats->newton_iters += iters;
      throw NewtonNonConvergence("Newton: iteration budget exhausted", std::move(x),
                                 rnorm);
    }
    LuFactors f = lu_factor(jac(x));
    if (f.singular)
      throw SingularNewtonMatrix("Newton: singular iteration matrix");
    x -= lu_solve(f, std::move(r));
    ++iters;
  }
}

}  // namespace

Vec backward_euler_step(const OdeProblem& p, double t0, const Vec& y0, double h,
                        const NewtonConfig& cfg, StepStats* stats) {
  const double t1 = t0 + h;
  const Mat id = Mat::identity(p.dim);
  auto resid = [&](const Vec& y) { return y - y0 - h * p.f(t1, y); };
  auto jac = [&](const Vec& y) { return id - h * p.jacobian(t1, y); };
  return newton_solve(resid, jac, y0, cfg, stats);
}

Vec trapezoid_step(const OdeProblem& p, double t0, const Vec& y0, double h,
                   const NewtonConfig& cfg, StepStats* stats) {
  const double t1 = t0 + h;
  const Vec f0 = p.f(t0, y0);
  const Mat id = Mat::identity(p.dim);
  auto resid = [&](const Vec& y) { return y - y0 - (0.5 * h) * (f0 + p.f(t1, y)); };
  auto jac = [&](const Vec& y) { return id - (0.5 * h) * p.jacobian(t1, y); };
  return newton_solve(resid, jac, y0, cfg, stats);
}

Vec radau_step(const OdeProblem& p, double t0, const Vec& y0, double h,
               const ButcherTableau& tab, const NewtonConfig& cfg,
               StepStats* stats) {
  const int s = tab.stages;
  const int n = p.dim;

  // Stages are stacked into one unknown of length s*n.
  auto stage = [n](const Vec& z, int i) {
    Vec y(n);
    for (int k = 0; k < n; ++k) y[k] = z[i * n + k];
    return y;
  };

  auto resid = [&](const Vec& z) {
    std::vector<Vec> fs(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i)
      fs[static_cast<size_t>(i)] = p.f(t0 + tab.c[i] * h, stage(z, i));
    Vec r(s * n);
    for (int i = 0; i < s; ++i) {
      for (int k = 0; k < n; ++k) {
        double acc = z[i * n + k] - y0[k];
        for (int j = 0; j < s; ++j) acc -= h * tab.a(i, j) * fs[static_cast<size_t>(j)][k];
        r[i * n + k] = acc;
      }
    }
    return r;
  };

  auto jac = [&](const Vec& z) {
    Mat m = Mat::identity(s * n);
    for (int j = 0; j < s; ++j) {
      const Mat jf = p.jacobian(t0 + tab.c[j] * h, stage(z, j));
      for (int i = 0; i < s; ++i) {
        const double w = -h * tab.a(i, j);
        if (w == 0.0) continue;
        for (int r = 0; r < n; ++r)
          for (int cidx = 0; cidx < n; ++cidx)
            m(i * n + r, j * n + cidx) += w * jf(r, cidx);
      }
    }
    return m;
  };

  Vec z0(s * n);
  for (int i = 0; i < s; ++i)
    for (int k = 0; k < n; ++k) z0[i * n + k] = y0[k];

  const Vec z = newton_solve(resid, jac, std::move(z0), cfg, stats);

  Vec y1 = y0;
  for (int j = 0; j < s; ++j) {
    const Vec fj = p.f(t0 + tab.c[j] * h, stage(z, j));
    for (int k = 0; k < n; ++k) y1[k] += h * tab.b[j] * fj[k];
  }
  return y1;
}

}  // namespace stiffbench
