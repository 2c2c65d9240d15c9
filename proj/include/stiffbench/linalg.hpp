#pragma once

// Minimal dense linear algebra for small systems (n <= ~32): vectors,
// row-major matrices, LU with partial pivoting, and the norms used by the
// solvers. Everything is double precision and value-semantic.

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace stiffbench {

class Vec {
 public:
  Vec() = default;
  explicit Vec(int n, double fill = 0.0) : data_(static_cast<size_t>(n), fill) {}
  Vec(std::initializer_list<double> xs) : data_(xs) {}

  int size() const { return static_cast<int>(data_.size()); }
  double& operator[](int i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int i) const { return data_[static_cast<size_t>(i)]; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(double s);

 private:
  std::vector<double> data_;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(double s, Vec a);
Vec operator-(Vec a);

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols, 0.0); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(double s);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(double s, Mat a);

Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);
inline Mat operator*(const Mat& a, const Mat& b) { return mat_mul(a, b); }
inline Vec operator*(const Mat& a, const Vec& x) { return mat_vec(a, x); }

double inf_norm(const Vec& v);
double two_norm(const Vec& v);
double inf_norm(const Mat& m);  // max absolute row sum
double one_norm(const Mat& m);  // max absolute column sum

bool all_finite(const Vec& v);
bool all_finite(const Mat& m);

/// Combined L/U storage plus the row-swap sequence applied during
/// factorization. Singularity is data, not an error: callers that can fall
/// back (or that factor matrices which are legitimately rank-deficient)
/// branch on `singular` before solving.
struct LuFactors {
  Mat lu;
  std::vector<int> swaps;  // row k was swapped with swaps[k]
  bool singular = false;
};

/// PA = LU with partial pivoting. A pivot below 1e-14 * inf_norm(a) marks the
/// factorization singular; elimination of that column is skipped.
LuFactors lu_factor(Mat a);

/// Solves A x = b from the factorization. Throws SingularMatrix when the
/// factors are flagged singular.
Vec lu_solve(const LuFactors& f, Vec b);

/// Column-wise solve A X = B (used for matrix rational approximations).
Mat lu_solve(const LuFactors& f, Mat b);

}  // namespace stiffbench
