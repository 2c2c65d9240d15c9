#include "stiffbench/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "stiffbench/errors.hpp"

namespace stiffbench {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

}  // namespace

Vec& Vec::operator+=(const Vec& o) {
  require(size() == o.size(), "Vec +=: size mismatch");
  for (int i = 0; i < size(); ++i) (*this)[i] += o[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require(size() == o.size(), "Vec -=: size mismatch");
  for (int i = 0; i < size(); ++i) (*this)[i] -= o[i];
  return *this;
}

Vec& Vec::operator*=(double s) {
  for (auto& x : *this) x *= s;
  return *this;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator*(double s, Vec a) { return a *= s; }
Vec operator-(Vec a) { return a *= -1.0; }

Mat Mat::identity(int n) {
  Mat m(n, n, 0.0);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "Mat +=: shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "Mat -=: shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Mat& Mat::operator*=(double s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(double s, Mat a) { return a *= s; }

Mat mat_mul(const Mat& a, const Mat& b) {
  require(a.cols() == b.rows(), "mat_mul: inner dimension mismatch");
  Mat c(a.rows(), b.cols(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  require(a.cols() == x.size(), "mat_vec: dimension mismatch");
  Vec y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double inf_norm(const Vec& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double two_norm(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double inf_norm(const Mat& m) {
  double best = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (int j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

double one_norm(const Mat& m) {
  double best = 0.0;
  for (int j = 0; j < m.cols(); ++j) {
    double col = 0.0;
    for (int i = 0; i < m.rows(); ++i) col += std::abs(m(i, j));
    best = std::max(best, col);
  }
  return best;
}

bool all_finite(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

bool all_finite(const Mat& m) {
  const double* p = m.data();
  const size_t n = static_cast<size_t>(m.rows()) * m.cols();
  for (size_t i = 0; i < n; ++i)
    if (!std::isfinite(p[i])) return false;
  return true;
}

LuFactors lu_factor(Mat a) {
  require(a.rows() == a.cols(), "lu_factor: matrix must be square");
  const int n = a.rows();
  const double pivot_floor = 1e-14 * inf_norm(a);

  LuFactors f;
  f.swaps.assign(static_cast<size_t>(n), 0);

  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    f.swaps[static_cast<size_t>(k)] = p;
    if (p != k)
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));

    if (std::abs(a(k, k)) <= pivot_floor) {
      f.singular = true;
      continue;  // leave the column uneliminated
    }
    for (int i = k + 1; i < n; ++i) {
      const double m = a(i, k) / a(k, k);
      a(i, k) = m;
      if (m == 0.0) continue;
      for (int j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
    }
  }
  f.lu = std::move(a);
  return f;
}

// Row swaps must be applied to the right-hand side in full before the
// triangular solves: the stored multipliers sit in their final (post-swap)
// row positions.
Vec lu_solve(const LuFactors& f, Vec b) {
  if (f.singular) throw SingularMatrix("lu_solve: factorization is singular");
  const int n = f.lu.rows();
  require(b.size() == n, "lu_solve: right-hand side size mismatch");

  for (int k = 0; k < n; ++k) {
    const int p = f.swaps[static_cast<size_t>(k)];
    if (p != k) std::swap(b[k], b[p]);
  }
  for (int k = 0; k < n; ++k)
    for (int i = k + 1; i < n; ++i) b[i] -= f.lu(i, k) * b[k];
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= f.lu(i, j) * b[j];
    b[i] = s / f.lu(i, i);
  }
  return b;
}

Mat lu_solve(const LuFactors& f, Mat b) {
  if (f.singular) throw SingularMatrix("lu_solve: factorization is singular");
  const int n = f.lu.rows();
  require(b.rows() == n, "lu_solve: right-hand side row mismatch");

  for (int k = 0; k < n; ++k) {
    const int p = f.swaps[static_cast<size_t>(k)];
    if (p != k)
      for (int j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(p, j));
  }
  for (int k = 0; k < n; ++k) {
    for (int i = k + 1; i < n; ++i) {
      const double m = f.lu(i, k);
      if (m == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) b(i, j) -= m * b(k, j);
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    const double d = f.lu(i, i);
    for (int j = 0; j < b.cols(); ++j) {
      double s = b(i, j);
      for (int k = i + 1; k < n; ++k) s -= f.lu(i, k) * b(k, j);
      b(i, j) = s / d;
    }
  }
  return b;
}

}  // namespace stiffbench
