#include "yamabe/weyl.hpp"

#include "yamabe/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace yamabe {

double WeylForm::norm_sq() const {
  double s = 0.0;
  for (double v : w.a) s += v * v;
  return s;
}

double WeylValidation::max_residual() const {
  double m = antisym_first;
  m = std::max(m, antisym_second);
  m = std::max(m, pair_sym);
  m = std::max(m, bianchi);
  m = std::max(m, trace);
  return m;
}

WeylValidation validate_weyl(const WeylForm& W, double tol) {
  const int n = W.n;
  if (W.w.n != n || W.w.a.size() != static_cast<size_t>(n) * n * n * n)
    throw std::invalid_argument("validate_weyl: shape mismatch");
  WeylValidation r;
  r.norm_sq = W.norm_sq();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double w = W.w(i, j, k, l);
          r.antisym_first = std::max(r.antisym_first, std::fabs(w + W.w(j, i, k, l)));
          r.antisym_second = std::max(r.antisym_second, std::fabs(w + W.w(i, j, l, k)));
          r.pair_sym = std::max(r.pair_sym, std::fabs(w - W.w(k, l, i, j)));
          r.bianchi =
              std::max(r.bianchi, std::fabs(w + W.w(j, k, i, l) + W.w(k, i, j, l)));
        }
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      double tr = 0.0;
      for (int i = 0; i < n; ++i) tr += W.w(i, j, i, l);
      r.trace = std::max(r.trace, std::fabs(tr));
    }
  const double scale = std::max(1.0, std::sqrt(r.norm_sq));
  r.accepted = r.max_residual() <= tol * scale;
  r.trivial = r.accepted && r.norm_sq == 0.0;
  return r;
}

WeylForm diagonal_weyl(const Mat& A) {
  const int n = A.n;
  if (n < 2) throw std::invalid_argument("diagonal_weyl: matrix too small");
  double scale = 0.0;
  for (double v : A.a) scale = std::max(scale, std::fabs(v));
  const double tol = 1e-12 * std::max(1.0, scale);
  for (int i = 0; i < n; ++i) {
    if (std::fabs(A(i, i)) > tol)
      throw std::invalid_argument("diagonal_weyl: diagonal entries must vanish");
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      row += A(i, j);
      if (std::fabs(A(i, j) - A(j, i)) > tol)
        throw std::invalid_argument("diagonal_weyl: matrix must be symmetric");
      if (i != j && A(i, j) == 0.0)
        throw std::invalid_argument("diagonal_weyl: off-diagonal entries must be nonzero");
    }
    if (std::fabs(row) > tol * n)
      throw std::invalid_argument("diagonal_weyl: row sums must vanish");
  }
  WeylForm W;
  W.n = n;
  W.w = Rank4(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double half = 0.5 * A(i, j);
      W.w(i, j, i, j) += half;
      W.w(i, j, j, i) -= half;
    }
  W.diagonal_source = A;
  return W;
}

Mat canonical_diagonal_matrix(int n) {
  if (n < 4)
    throw std::invalid_argument(
        "canonical_diagonal_matrix: zero row sums with nonzero off-diagonals need n >= 4");
  Mat A(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int d = std::min((i - j + n) % n, (j - i + n) % n);
      double c = 1.0;
      if (n % 2 == 0 && d == n / 2)
        c = -(n - 2);
      else if (n % 2 == 1 && d == 1)
        c = -0.5 * (n - 3);
      A(i, j) = c;
    }
  return A;
}

WeylForm project_weyl(const Rank4& raw) {
  const int n = raw.n;
  Rank4 c(n);
  // antisymmetrize in both pairs, then pair-symmetrize
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double anti =
              0.25 * (raw(i, j, k, l) - raw(j, i, k, l) - raw(i, j, l, k) + raw(j, i, l, k));
          c(i, j, k, l) = anti;
        }
  Rank4 cp(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          cp(i, j, k, l) = 0.5 * (c(i, j, k, l) + c(k, l, i, j));
  // remove the totally antisymmetric part to enforce the first Bianchi identity
  Rank4 cb(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double b =
              (cp(i, j, k, l) + cp(j, k, i, l) + cp(k, i, j, l)) / 3.0;
          cb(i, j, k, l) = cp(i, j, k, l) - b;
        }
  // project out traces: subtract the Kulkarni-Nomizu part of the Schouten-type tensor
  Mat ric(n);
  double scal = 0.0;
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += cb(i, j, i, l);
      ric(j, l) = s;
      if (j == l) scal += s;
    }
  Mat a(n);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      a(j, l) = (ric(j, l) - (j == l ? scal / (2.0 * (n - 1)) : 0.0)) / (n - 2);
  WeylForm W;
  W.n = n;
  W.w = Rank4(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double g = 0.0;
          if (j == l) g += a(i, k);
          if (i == l) g -= a(j, k);
          if (j == k) g -= a(i, l);
          if (i == k) g += a(j, l);
          W.w(i, j, k, l) = cb(i, j, k, l) - g;
        }
  return W;
}

WeylForm random_weyl(int n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("random_weyl: nontrivial Weyl forms need n >= 4");
  CounterRng rng{seed, 0, 0};
  for (int attempt = 0; attempt < 8; ++attempt) {
    Rank4 raw(n);
    rng.stream = attempt;
    rng.counter = 0;
    for (auto& v : raw.a) v = rng.next_symmetric();
    WeylForm W = project_weyl(raw);
    if (W.norm_sq() > 1e-8) return W;
  }
  throw std::runtime_error("random_weyl: projection produced a null form");
}

ContractionTensor contraction(const WeylForm& W) {
  const int n = W.n;
  ContractionTensor ct;
  ct.n = n;
  ct.T = Mat(n);
  for (int k = 0; k < n; ++k)
    for (int l = k; l < n; ++l) {
      double s = 0.0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r)
            s += (W.w(k, p, q, r) + W.w(k, r, q, p)) * (W.w(l, p, q, r) + W.w(l, r, q, p));
      ct.T(k, l) = s;
      ct.T(l, k) = s;
    }
  // postcondition: the trace collapses to 3|W|^2 for a symmetric form
  const double wsq = W.norm_sq();
  if (std::fabs(ct.trace() - 3.0 * wsq) > 1e-10 * std::max(1.0, 3.0 * wsq))
    throw std::logic_error("contraction: trace identity violated (form lacks symmetries?)");
  return ct;
}

double ContractionTensor::trace() const {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += T(i, i);
  return s;
}

Mat contraction_triple(const WeylForm& W) {
  const int n = W.n;
  Mat T(n);
  for (int k = 0; k < n; ++k)
    for (int l = k; l < n; ++l) {
      double s = 0.0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r) s += W.w(k, p, q, r) * W.w(l, p, q, r);
      T(k, l) = 3.0 * s;
      T(l, k) = T(k, l);
    }
  return T;
}

Mat gradient_square_matrix(const WeylForm& W) {
  const int n = W.n;
  Mat S(n);
  for (int p = 0; p < n; ++p)
    for (int q = p; q < n; ++q) {
      double s = 0.0;
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          for (int l = 0; l < n; ++l)
            s += (W.w(j, i, l, p) + W.w(j, p, l, i)) * (W.w(j, i, l, q) + W.w(j, q, l, i));
      S(p, q) = s;
      S(q, p) = s;
    }
  return S;
}

Mat h_eval(const WeylForm& W, const Vec& x) {
  const int n = W.n;
  Mat h(n);
  if (W.diagonal_source) {
    const Mat& A = *W.diagonal_source;
    Vec x2(n);
    for (int p = 0; p < n; ++p) x2[p] = x[p] * x[p];
    for (int i = 0; i < n; ++i) {
      double diag = 0.0;
      for (int p = 0; p < n; ++p) diag += A(i, p) * x2[p];
      h(i, i) = diag / 6.0;
      for (int j = i + 1; j < n; ++j) {
        const double v = -A(i, j) * x[i] * x[j] / 6.0;
        h(i, j) = v;
        h(j, i) = v;
      }
    }
    return h;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int p = 0; p < n; ++p) {
        double inner = 0.0;
        for (int q = 0; q < n; ++q) inner += W.w(i, p, j, q) * x[q];
        s += inner * x[p];
      }
      h(i, j) = s / 3.0;
      h(j, i) = h(i, j);
    }
  return h;
}

double h_entry(const WeylForm& W, int a, int b, const Vec& x) {
  const int n = W.n;
  if (W.diagonal_source) {
    const Mat& A = *W.diagonal_source;
    if (a == b) {
      double s = 0.0;
      for (int p = 0; p < n; ++p) s += A(a, p) * x[p] * x[p];
      return s / 6.0;
    }
    return -A(a, b) * x[a] * x[b] / 6.0;
  }
  double s = 0.0;
  for (int p = 0; p < n; ++p) {
    double inner = 0.0;
    for (int q = 0; q < n; ++q) inner += W.w(a, p, b, q) * x[q];
    s += inner * x[p];
  }
  return s / 3.0;
}

Rank3 h_gradient(const WeylForm& W, const Vec& x) {
  const int n = W.n;
  Rank3 d(n);
  if (W.diagonal_source) {
    const Mat& A = *W.diagonal_source;
    // d_i h_jl = (1/6)(2 d_jl A_ji x_i - A_jl (d_ij x_l + d_il x_j))
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          double v = 0.0;
          if (j == l) v += 2.0 * A(j, i) * x[i];
          if (i == j) v -= A(j, l) * x[l];
          if (i == l) v -= A(j, l) * x[j];
          d(i, j, l) = v / 6.0;
        }
    return d;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        double s = 0.0;
        for (int p = 0; p < n; ++p) s += (W.w(j, i, l, p) + W.w(j, p, l, i)) * x[p];
        d(i, j, l) = s / 3.0;
      }
  return d;
}

Vec h_entry_gradient(const WeylForm& W, int a, int b, const Vec& x) {
  const int n = W.n;
  Vec g(n, 0.0);
  if (W.diagonal_source) {
    const Mat& A = *W.diagonal_source;
    if (a == b) {
      for (int i = 0; i < n; ++i) g[i] = A(a, i) * x[i] / 3.0;
    } else {
      g[a] = -A(a, b) * x[b] / 6.0;
      g[b] = -A(a, b) * x[a] / 6.0;
    }
    return g;
  }
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int p = 0; p < n; ++p) s += (W.w(a, i, b, p) + W.w(a, p, b, i)) * x[p];
    g[i] = s / 3.0;
  }
  return g;
}

double h_second_derivative(const WeylForm& W, int a, int b, int i, int j) {
  return (W.w(a, i, b, j) + W.w(a, j, b, i)) / 3.0;
}

double h_norm_sq(const WeylForm& W, const Vec& x) {
  const Mat h = h_eval(W, x);
  double s = 0.0;
  for (double v : h.a) s += v * v;
  return s;
}

namespace {

Vec normalize(Vec v) {
  const double nrm = std::sqrt(norm2_sq(v));
  if (nrm == 0.0) throw std::runtime_error("coercivity_check: zero direction");
  for (double& c : v) c /= nrm;
  return v;
}

// gradient of z -> sum h_pq(z)^2
Vec objective_gradient(const WeylForm& W, const Vec& z) {
  const int n = W.n;
  const Mat h = h_eval(W, z);
  const Rank3 dh = h_gradient(W, z);
  Vec g(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) s += h(p, q) * dh(i, p, q);
    g[i] = 2.0 * s;
  }
  return g;
}

}  // namespace

CoercivityResult coercivity_check(const WeylForm& W, int sweep_samples, int starts,
                                  std::uint64_t seed) {
  const int n = W.n;
  CoercivityResult res;
  res.minimum = std::numeric_limits<double>::infinity();
  res.sweep_minimum = res.minimum;

  CounterRng rng{seed, 1, 0};
  Vec z(n);
  for (int s = 0; s < sweep_samples; ++s) {
    for (int i = 0; i < n; i += 2) {
      double g0, g1;
      rng.next_gaussian_pair(g0, g1);
      z[i] = g0;
      if (i + 1 < n) z[i + 1] = g1;
    }
    z = normalize(z);
    const double v = h_norm_sq(W, z);
    if (v < res.sweep_minimum) {
      res.sweep_minimum = v;
      res.minimizer = z;
    }
  }
  res.minimum = res.sweep_minimum;

  // multi-start projected gradient descent, deterministic ordered reduction
  std::vector<double> finals;
  finals.reserve(starts);
  for (int s = 0; s < starts; ++s) {
    CounterRng srng{seed, 1000 + static_cast<std::uint64_t>(s), 0};
    Vec p(n);
    for (int i = 0; i < n; i += 2) {
      double g0, g1;
      srng.next_gaussian_pair(g0, g1);
      p[i] = g0;
      if (i + 1 < n) p[i + 1] = g1;
    }
    p = normalize(p);
    double fp = h_norm_sq(W, p);
    double step = 0.5;
    for (int it = 0; it < 200 && step > 1e-14; ++it) {
      Vec g = objective_gradient(W, p);
      const double gp = dot(g, p);
      for (int i = 0; i < n; ++i) g[i] -= gp * p[i];  // tangential component
      if (std::sqrt(norm2_sq(g)) < 1e-15) break;
      Vec trial(n);
      bool moved = false;
      while (step > 1e-14) {
        for (int i = 0; i < n; ++i) trial[i] = p[i] - step * g[i];
        trial = normalize(trial);
        const double ft = h_norm_sq(W, trial);
        if (ft < fp) {
          p = trial;
          fp = ft;
          step *= 1.5;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    finals.push_back(fp);
    if (fp < res.minimum) {
      res.minimum = fp;
      res.minimizer = p;
    }
  }
  if (!finals.empty()) {
    std::sort(finals.begin(), finals.end());
    const size_t k = std::min(finals.size() - 1, std::max<size_t>(1, finals.size() / 4));
    res.consensus_gap = finals[k] - finals[0];
  }
  return res;
}

}  // namespace yamabe
