#include "stiffbench/matfun.hpp"

#include <cmath>

#include "stiffbench/errors.hpp"

namespace stiffbench {

namespace {

// Numerator coefficients of the (13,13) Pade approximant to e^z; the
// denominator uses the same coefficients with alternating signs.
constexpr double kPade13[] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

Mat pade13(const Mat& a) {
  const int n = a.rows();
  const Mat id = Mat::identity(n);
  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a2 * a4;

  Mat u = a6 * (kPade13[13] * a6 + kPade13[11] * a4 + kPade13[9] * a2);
  u += kPade13[7] * a6 + kPade13[5] * a4 + kPade13[3] * a2 + kPade13[1] * id;
  u = a * u;

  Mat v = a6 * (kPade13[12] * a6 + kPade13[10] * a4 + kPade13[8] * a2);
  v += kPade13[6] * a6 + kPade13[4] * a4 + kPade13[2] * a2 + kPade13[0] * id;

  LuFactors denom = lu_factor(v - u);
  if (denom.singular)
    throw ExpmOverflow("expm: Pade denominator is singular");
  return lu_solve(denom, v + u);
}

}  // namespace

Mat expm(const Mat& a) {
  if (a.rows() != a.cols()) throw std::logic_error("expm: matrix must be square");
  if (!all_finite(a)) throw ExpmOverflow("expm: argument has non-finite entries");

  const double norm = one_norm(a);
  int s = 0;
  if (norm > 5.4) s = static_cast<int>(std::ceil(std::log2(norm / 5.4)));

  Mat x = pade13(std::ldexp(1.0, -s) * a);
  for (int k = 0; k < s; ++k) x = x * x;

  if (!all_finite(x)) throw ExpmOverflow("expm: result overflowed");
  return x;
}

PhiBundle phi_bundle(const Mat& a) {
  if (a.rows() != a.cols()) throw std::logic_error("phi_bundle: matrix must be square");
  const int n = a.rows();

  Mat m = Mat::zero(4 * n, 4 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = 1.0;
    m(n + i, 2 * n + i) = 1.0;
    m(2 * n + i, 3 * n + i) = 1.0;
  }

  const Mat em = expm(m);

  PhiBundle b{Mat(n, n), Mat(n, n), Mat(n, n), Mat(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b.exp(i, j) = em(i, j);
      b.phi1(i, j) = em(i, n + j);
      b.phi2(i, j) = em(i, 2 * n + j);
      b.phi3(i, j) = em(i, 3 * n + j);
    }
  }
  return b;
}

}  // namespace stiffbench
