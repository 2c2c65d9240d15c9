#include "stiffbench/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace stiffbench {

OdeProblem vanderpol() {
  OdeProblem p;
  p.name = "vanderpol";
  p.dim = 2;
  p.y0 = {1.0, 0.0};
  p.t_start = 0.0;
  p.t_end = 1300.0;
  p.grid_rule = GridRule::Linear;
  p.reference_substeps = 100;
  p.f = [](double, const Vec& y) {
    return Vec{y[1], 1000.0 * y[1] - 1000.0 * y[0] * y[0] * y[1] - y[0]};
  };
  p.jacobian = [](double, const Vec& y) {
    Mat j(2, 2);
    j(0, 0) = 0.0;
    j(0, 1) = 1.0;
    j(1, 0) = -2000.0 * y[0] * y[1] - 1.0;
    j(1, 1) = 1000.0 - 1000.0 * y[0] * y[0];
    return j;
  };
  p.envelope = {{-2.5, 2.5}, {-1500.0, 1500.0}};
  return p;
}

OdeProblem hires() {
  OdeProblem p;
  p.name = "hires";
  p.dim = 8;
  p.y0 = {1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0057};
  p.t_start = 0.0;
  p.t_end = 321.8122;
  p.grid_rule = GridRule::Linear;
  p.reference_substeps = 100;
  p.f = [](double, const Vec& y) {
    Vec d(8);
    d[0] = -1.71 * y[0] + 0.43 * y[1] + 8.32 * y[2] + 0.0007;
    d[1] = 1.71 * y[0] - 8.75 * y[1];
    d[2] = -10.03 * y[2] + 0.43 * y[3] + 0.035 * y[4];
    d[3] = 8.32 * y[1] + 1.71 * y[2] - 1.12 * y[3];
    d[4] = -1.745 * y[4] + 0.43 * y[5] + 0.43 * y[6];
    d[5] = -280.0 * y[5] * y[7] + 0.69 * y[3] + 1.71 * y[4] - 0.43 * y[5] + 0.69 * y[6];
    d[6] = 280.0 * y[5] * y[7] - 1.81 * y[6];
    d[7] = -280.0 * y[5] * y[7] + 1.81 * y[6];
    return d;
  };
  p.jacobian = [](double, const Vec& y) {
    Mat j(8, 8, 0.0);
    j(0, 0) = -1.71;
    j(0, 1) = 0.43;
    j(0, 2) = 8.32;
    j(1, 0) = 1.71;
    j(1, 1) = -8.75;
    j(2, 2) = -10.03;
    j(2, 3) = 0.43;
    j(2, 4) = 0.035;
    j(3, 1) = 8.32;
    j(3, 2) = 1.71;
    j(3, 3) = -1.12;
    j(4, 4) = -1.745;
    j(4, 5) = 0.43;
    j(4, 6) = 0.43;
    j(5, 3) = 0.69;
    j(5, 4) = 1.71;
    j(5, 5) = -280.0 * y[7] - 0.43;
    j(5, 6) = 0.69;
    j(5, 7) = -280.0 * y[5];
    j(6, 5) = 280.0 * y[7];
    j(6, 6) = -1.81;
    j(6, 7) = 280.0 * y[5];
    j(7, 5) = -280.0 * y[7];
    j(7, 6) = 1.81;
    j(7, 7) = -280.0 * y[5];
    return j;
  };
  p.envelope = {{0.0, 1.2}, {0.0, 0.3}, {0.0, 0.3}, {0.0, 0.6},
                {0.0, 1.2}, {0.0, 0.1}, {0.0, 0.01}, {0.0, 0.01}};
  return p;
}

OdeProblem robertson() {
  OdeProblem p;
  p.name = "robertson";
  p.dim = 3;
  p.y0 = {1.0, 0.0, 0.0};
  p.t_start = 1e-5;
  p.t_end = 1e7;
  p.grid_rule = GridRule::Logarithmic;
  p.reference_substeps = 100;
  p.f = [](double, const Vec& y) {
    const double r1 = 0.04 * y[0];
    const double r2 = 1e4 * y[1] * y[2];
    const double r3 = 3e7 * y[1] * y[1];
    return Vec{-r1 + r2, r1 - r2 - r3, r3};
  };
  p.jacobian = [](double, const Vec& y) {
    Mat j(3, 3, 0.0);
    j(0, 0) = -0.04;
    j(0, 1) = 1e4 * y[2];
    j(0, 2) = 1e4 * y[1];
    j(1, 0) = 0.04;
    j(1, 1) = -1e4 * y[2] - 6e7 * y[1];
    j(1, 2) = -1e4 * y[1];
    j(2, 1) = 6e7 * y[1];
    return j;
  };
  p.envelope = {{0.0, 1.0}, {0.0, 4e-5}, {0.0, 1.0}};
  return p;
}

OdeProblem smooth_test() {
  OdeProblem p;
  p.name = "smooth";
  p.dim = 2;
  p.y0 = {1.0, 0.0};
  p.t_start = 0.0;
  p.t_end = 1.0;
  p.grid_rule = GridRule::Linear;
  p.reference_substeps = 100;
  p.f = [](double, const Vec& y) {
    const double r2 = y[0] * y[0] + y[1] * y[1];
    return Vec{-y[1] * r2, y[0] * r2};
  };
  p.jacobian = [](double, const Vec& y) {
    Mat j(2, 2);
    j(0, 0) = -2.0 * y[0] * y[1];
    j(0, 1) = -(y[0] * y[0] + 3.0 * y[1] * y[1]);
    j(1, 0) = 3.0 * y[0] * y[0] + y[1] * y[1];
    j(1, 1) = 2.0 * y[0] * y[1];
    return j;
  };
  // Radius is a first integral, so from y0 = [1,0] the angular speed is
  // exactly 1 and the flow is plain rotation.
  p.exact = [](double t) { return Vec{std::cos(t), std::sin(t)}; };
  p.envelope = {{-1.5, 1.5}, {-1.5, 1.5}};
  return p;
}

OdeProblem problem_by_name(const std::string& name) {
  if (name == "vanderpol") return vanderpol();
  if (name == "hires") return hires();
  if (name == "robertson") return robertson();
  if (name == "smooth") return smooth_test();
  throw std::invalid_argument("unknown model '" + name + "'");
}

const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names = {"vanderpol", "hires", "robertson",
                                                 "smooth"};
  return names;
}

}  // namespace stiffbench
