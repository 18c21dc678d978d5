#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace yamabe {

using Vec = std::vector<double>;

// Dense square matrix, row-major.
struct Mat {
  int n = 0;
  std::vector<double> a;

  Mat() = default;
  explicit Mat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// Dense rank-3 array T[i][j][k] over an n-dimensional index range.
struct Rank3 {
  int n = 0;
  std::vector<double> a;

  Rank3() = default;
  explicit Rank3(int n_) : n(n_), a(static_cast<size_t>(n_) * n_ * n_, 0.0) {}

  double& operator()(int i, int j, int k) {
    return a[(static_cast<size_t>(i) * n + j) * n + k];
  }
  double operator()(int i, int j, int k) const {
    return a[(static_cast<size_t>(i) * n + j) * n + k];
  }
};

// Dense rank-4 array T[i][j][k][l].
struct Rank4 {
  int n = 0;
  std::vector<double> a;

  Rank4() = default;
  explicit Rank4(int n_) : n(n_), a(static_cast<size_t>(n_) * n_ * n_ * n_, 0.0) {}

  double& operator()(int i, int j, int k, int l) {
    return a[((static_cast<size_t>(i) * n + j) * n + k) * n + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return a[((static_cast<size_t>(i) * n + j) * n + k) * n + l];
  }
};

inline double dot(const Vec& x, const Vec& y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double norm2_sq(const Vec& x) { return dot(x, x); }

inline Mat mat_mul(const Mat& A, const Mat& B) {
  Mat C(A.n);
  for (int i = 0; i < A.n; ++i)
    for (int k = 0; k < A.n; ++k) {
      const double aik = A(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < A.n; ++j) C(i, j) += aik * B(k, j);
    }
  return C;
}

inline Vec mat_vec(const Mat& A, const Vec& x) {
  Vec y(A.n, 0.0);
  for (int i = 0; i < A.n; ++i) {
    double s = 0.0;
    for (int j = 0; j < A.n; ++j) s += A(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

// Gaussian elimination with partial pivoting; throws on (numerically) singular input.
Mat mat_inverse(const Mat& A);

double mat_det(const Mat& A);

// exp(M) for symmetric M by scaling-and-squaring with a truncated Taylor series.
Mat expm_sym(const Mat& M);

}  // namespace yamabe
