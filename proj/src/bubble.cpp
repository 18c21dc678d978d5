#include "yamabe/bubble.hpp"

#include "yamabe/constants.hpp"

#include <cmath>

namespace yamabe {

namespace {

double nu_of(int n) { return static_cast<double>(n) * (n - 2); }

double dist_sq(const Vec& x, const Vec& z) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - z[i];
    s += d * d;
  }
  return s;
}

}  // namespace

BubbleParams::BubbleParams(int n_, double t_, Vec z_, double box_bound_)
    : n(n_), t(t_), z(std::move(z_)), box_bound(box_bound_) {
  require_dim(n, 3, "BubbleParams");
  if (box_bound <= 1.0) throw std::invalid_argument("BubbleParams: box bound must exceed 1");
  if (!(t >= 1.0 / box_bound && t <= box_bound))
    throw std::invalid_argument("BubbleParams: t outside [1/A, A]");
  if (z.size() != static_cast<size_t>(n))
    throw std::invalid_argument("BubbleParams: center dimension mismatch");
  if (norm2_sq(z) >= 1.0) throw std::invalid_argument("BubbleParams: |z| must be < 1");
}

double bubble_eval(const BubbleParams& p, const Vec& x) {
  const double nu = nu_of(p.n);
  const double rho = p.t * p.t + dist_sq(x, p.z) / nu;
  return std::pow(p.t, 0.5 * (p.n - 2)) * std::pow(rho, -0.5 * (p.n - 2));
}

Vec bubble_gradient(const BubbleParams& p, const Vec& x) {
  const int n = p.n;
  const double nu = nu_of(n);
  const double rho = p.t * p.t + dist_sq(x, p.z) / nu;
  const double factor = -std::pow(p.t, 0.5 * (n - 2)) * std::pow(rho, -0.5 * n) / n;
  Vec g(n);
  for (int i = 0; i < n; ++i) g[i] = factor * (x[i] - p.z[i]);
  return g;
}

Mat bubble_hessian(const BubbleParams& p, const Vec& x) {
  const int n = p.n;
  const double nu = nu_of(n);
  const double rho = p.t * p.t + dist_sq(x, p.z) / nu;
  const double tp = std::pow(p.t, 0.5 * (n - 2));
  const double rn = std::pow(rho, -0.5 * n);
  const double rn2 = std::pow(rho, -0.5 * (n + 2));
  Mat H(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double ui = x[i] - p.z[i];
      const double uj = x[j] - p.z[j];
      double v = -tp / n * ((i == j ? rn : 0.0) - n / nu * ui * uj * rn2);
      H(i, j) = v;
    }
  return H;
}

double kernel_v(int n, int j, const Vec& x) {
  const double nu = nu_of(n);
  const double P = 1.0 + norm2_sq(x) / nu;
  if (j == 0) return (norm2_sq(x) / nu - 1.0) * std::pow(P, -0.5 * n);
  return x[j - 1] * std::pow(P, -0.5 * n);
}

double kernel_v_laplacian(int n, int j, const Vec& x) {
  const double nu = nu_of(n);
  const double s = norm2_sq(x);
  const double P = 1.0 + s / nu;
  if (j == 0) {
    // phi(s) = P^{1-n/2} - 2 P^{-n/2}; lap = -(2n phi' + 4 s phi'')
    const double phi1 = (1.0 - 0.5 * n) / nu * std::pow(P, -0.5 * n) +
                        n / nu * std::pow(P, -0.5 * (n + 2));
    const double phi2 = (1.0 - 0.5 * n) * (-0.5 * n) / (nu * nu) * std::pow(P, -0.5 * (n + 2)) -
                        n * (n + 2) / (2.0 * nu * nu) * std::pow(P, -0.5 * (n + 4));
    return -(2.0 * n * phi1 + 4.0 * s * phi2);
  }
  // lap V_j = (n(n+2)/nu) x_j P^{-(n+4)/2}
  return n * (n + 2) / nu * x[j - 1] * std::pow(P, -0.5 * (n + 4));
}

double kernel_z(int j, const BubbleParams& p, const Vec& x) {
  const int n = p.n;
  Vec u(n);
  for (int i = 0; i < n; ++i) u[i] = (x[i] - p.z[i]) / p.t;
  const double scale = std::pow(p.t, 1.0 - 0.5 * n);
  if (j == 0) return scale * kernel_v(n, 0, u);
  return -scale * kernel_v(n, j, u);
}

Vec kernel_z_gradient(int j, const BubbleParams& p, const Vec& x) {
  const int n = p.n;
  const double nu = nu_of(n);
  Vec u(n);
  for (int i = 0; i < n; ++i) u[i] = (x[i] - p.z[i]) / p.t;
  const double s = norm2_sq(u);
  const double P = 1.0 + s / nu;
  const double scale = std::pow(p.t, -0.5 * n);  // t^{1-n/2} * (1/t) chain factor
  Vec g(n, 0.0);
  if (j == 0) {
    // grad V_0 = (2x/nu) P^{-n/2} + (s/nu - 1)(-n/nu) P^{-(n+2)/2} x
    const double c1 = 2.0 / nu * std::pow(P, -0.5 * n);
    const double c2 = (s / nu - 1.0) * (-static_cast<double>(n) / nu) * std::pow(P, -0.5 * (n + 2));
    for (int i = 0; i < n; ++i) g[i] = scale * (c1 + c2) * u[i];
    return g;
  }
  // grad V_j = e_j P^{-n/2} - (n/nu) x_j P^{-(n+2)/2} x ; Z_j = -V_j rescaled
  const double pn = std::pow(P, -0.5 * n);
  const double pn2 = std::pow(P, -0.5 * (n + 2));
  for (int i = 0; i < n; ++i) {
    double v = -n / nu * u[j - 1] * pn2 * u[i];
    if (i == j - 1) v += pn;
    g[i] = -scale * v;
  }
  return g;
}

double corrector_eval(const WeylForm& W, int a, int b, const Vec& x) {
  const int n = W.n;
  const double nu = nu_of(n);
  const double P = 1.0 + norm2_sq(x) / nu;
  return -h_entry(W, a, b, x) / n * std::pow(P, -0.5 * n);
}

Vec corrector_gradient(const WeylForm& W, int a, int b, const Vec& x) {
  const int n = W.n;
  const double nu = nu_of(n);
  const double P = 1.0 + norm2_sq(x) / nu;
  const double pn = std::pow(P, -0.5 * n);
  const double pn2 = std::pow(P, -0.5 * (n + 2));
  const double hab = h_entry(W, a, b, x);
  Vec g = h_entry_gradient(W, a, b, x);
  for (int i = 0; i < n; ++i) g[i] = -pn / n * g[i] + hab / nu * pn2 * x[i];
  return g;
}

double corrector_residual(const WeylForm& W, int a, int b, const Vec& x) {
  const int n = W.n;
  const double nu = nu_of(n);
  const double P = 1.0 + norm2_sq(x) / nu;
  const double hab = h_entry(W, a, b, x);
  // lap L = -(h_ab/nu)(2 P^{-(n+2)/2} + (n+2) P^{-(n+4)/2}) in the -div grad sign
  const double lapL =
      -hab / nu * (2.0 * std::pow(P, -0.5 * (n + 2)) + (n + 2) * std::pow(P, -0.5 * (n + 4)));
  const double L = -hab / n * std::pow(P, -0.5 * n);
  const double pstar = (n + 2.0) / (n - 2.0);  // 2^* - 1
  const double b_pow = std::pow(P, -2.0);      // B_{1,0}^{2^*-2}
  return lapL - pstar * b_pow * L + 2.0 / nu * hab * std::pow(P, -0.5 * (n + 2));
}

double corrector_pairing(const WeylForm& W, int a, int b, int c, int d) {
  const int n = W.n;
  require_dim(n, 7, "corrector_pairing");
  double q = 0.0;
  for (int p = 0; p < n; ++p)
    for (int r = 0; r < n; ++r)
      q += W.w(a, p, b, r) * (W.w(c, p, d, r) + W.w(c, r, d, p));
  return (n + 4.0) / (36.0 * (n + 1)) * sobolev_mass(n) * q;
}

PairingOracle corrector_pairing_oracle(const WeylForm& W, int a, int b, int c, int d,
                                       std::uint64_t budget, std::uint64_t seed) {
  const int n = W.n;
  const double nu = nu_of(n);
  // decay: each gradient ~ |x| P^{-n/2} ~ |x|^{1-n}; product ~ |x|^{2-2n}
  auto piece = [&](int which) {
    return Integrand(n, 2.0 * n - 2.0, [&W, a, b, c, d, nu, which](const Vec& x) {
      const int n2 = W.n;
      const double P = 1.0 + norm2_sq(x) / nu;
      const double pn = std::pow(P, -0.5 * n2);
      const double pn2 = std::pow(P, -0.5 * (n2 + 2));
      const Vec g1 = h_entry_gradient(W, a, b, x);
      const Vec g2 = h_entry_gradient(W, c, d, x);
      const double h1 = h_entry(W, a, b, x);
      const double h2 = h_entry(W, c, d, x);
      const double xg1 = dot(x, g1), xg2 = dot(x, g2);
      const double gg = dot(g1, g2);
      const double xx = norm2_sq(x);
      switch (which) {
        case 0:  // grad x grad
          return pn * pn / (n2 * double(n2)) * gg;
        case 1:  // radial x radial
          return h1 * h2 / (nu * nu) * pn2 * pn2 * xx;
        default:  // cross
          return -pn * pn2 / (n2 * nu) * (h1 * xg2 + h2 * xg1);
      }
    });
  };
  PairingOracle out;
  const std::uint64_t each = std::max<std::uint64_t>(1000, budget / 3);
  const OracleResult r0 = integrate_rn_deg4(piece(0), each, seed);
  const OracleResult r1 = integrate_rn_deg4(piece(1), each, seed + 1);
  const OracleResult r2 = integrate_rn_deg4(piece(2), each, seed + 2);
  out.piece_grad = r0.value;
  out.piece_radial = r1.value;
  out.piece_cross = r2.value;
  out.total.value = r0.value + r1.value + r2.value;
  out.total.standard_error = std::sqrt(r0.standard_error * r0.standard_error +
                                       r1.standard_error * r1.standard_error +
                                       r2.standard_error * r2.standard_error);
  out.total.samples_used = r0.samples_used + r1.samples_used + r2.samples_used;
  out.total.method = r0.method;
  return out;
}

OracleResult annihilation_integral(const WeylForm& W, const BubbleParams& p,
                                   std::uint64_t budget, std::uint64_t seed) {
  const int n = W.n;
  // integrand ~ h(x) |grad B|^2 ~ |x|^2 |x|^{2-2n}
  Integrand f(n, 2.0 * n - 4.0, [&W, &p](const Vec& x) {
    const Vec g = bubble_gradient(p, x);
    const Mat h = h_eval(W, x);
    double s = 0.0;
    for (int i = 0; i < W.n; ++i)
      for (int j = 0; j < W.n; ++j) s += h(i, j) * g[i] * g[j];
    return s;
  });
  return integrate_rn(f, budget, seed);
}

OracleResult corrector_kernel_orthogonality(const WeylForm& W, int a, int b, int j,
                                            std::uint64_t budget, std::uint64_t seed) {
  const int n = W.n;
  const BubbleParams unit(n, 1.0, Vec(n, 0.0));
  Integrand f(n, 2.0 * n - 2.0, [&W, a, b, j, unit](const Vec& x) {
    const Vec gl = corrector_gradient(W, a, b, x);
    const Vec gz = kernel_z_gradient(j, unit, x);
    return dot(gl, gz);
  });
  return integrate_rn(f, budget, seed);
}

}  // namespace yamabe
