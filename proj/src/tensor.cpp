#include "yamabe/tensor.hpp"

#include <cmath>

namespace yamabe {

namespace {

// LU factorization with partial pivoting; returns pivot sign, throws if singular.
int lu_factor(Mat& A, std::vector<int>& piv) {
  const int n = A.n;
  piv.resize(n);
  int sign = 1;
  for (int i = 0; i < n; ++i) piv[i] = i;
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::fabs(A(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::fabs(A(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == 0.0) throw std::runtime_error("mat_inverse: singular matrix");
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
      std::swap(piv[k], piv[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      A(i, k) /= A(k, k);
      const double lik = A(i, k);
      for (int j = k + 1; j < n; ++j) A(i, j) -= lik * A(k, j);
    }
  }
  return sign;
}

}  // namespace

Mat mat_inverse(const Mat& A) {
  const int n = A.n;
  Mat LU = A;
  std::vector<int> piv;
  lu_factor(LU, piv);
  Mat inv(n);
  std::vector<double> col(n), y(n);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) col[i] = (piv[i] == c) ? 1.0 : 0.0;
    for (int i = 0; i < n; ++i) {
      double s = col[i];
      for (int j = 0; j < i; ++j) s -= LU(i, j) * y[j];
      y[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = y[i];
      for (int j = i + 1; j < n; ++j) s -= LU(i, j) * y[j];
      y[i] = s / LU(i, i);
    }
    for (int i = 0; i < n; ++i) inv(i, c) = y[i];
  }
  return inv;
}

double mat_det(const Mat& A) {
  Mat LU = A;
  std::vector<int> piv;
  int sign;
  try {
    sign = lu_factor(LU, piv);
  } catch (const std::runtime_error&) {
    return 0.0;
  }
  double d = sign;
  for (int i = 0; i < LU.n; ++i) d *= LU(i, i);
  return d;
}

Mat expm_sym(const Mat& M) {
  const int n = M.n;
  double fro = 0.0;
  for (double v : M.a) fro += v * v;
  fro = std::sqrt(fro);
  int squarings = 0;
  double scale = 1.0;
  while (fro * scale > 0.25) {
    ++squarings;
    scale *= 0.5;
  }
  Mat T(n);
  for (size_t i = 0; i < T.a.size(); ++i) T.a[i] = M.a[i] * scale;

  Mat result(n), term(n);
  for (int i = 0; i < n; ++i) {
    result(i, i) = 1.0;
    term(i, i) = 1.0;
  }
  for (int k = 1; k <= 32; ++k) {
    term = mat_mul(term, T);
    for (size_t i = 0; i < term.a.size(); ++i) term.a[i] /= k;
    double mx = 0.0;
    for (size_t i = 0; i < term.a.size(); ++i) {
      result.a[i] += term.a[i];
      mx = std::max(mx, std::fabs(term.a[i]));
    }
    if (mx < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = mat_mul(result, result);
  // restore exact symmetry lost to rounding
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double m = 0.5 * (result(i, j) + result(j, i));
      result(i, j) = m;
      result(j, i) = m;
    }
  return result;
}

}  // namespace yamabe
