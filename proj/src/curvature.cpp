#include "yamabe/curvature.hpp"

#include "yamabe/constants.hpp"

#include <cmath>

namespace yamabe {

MetricField::MetricField(WeylForm W, double eps_, double cutoff_radius_, Vec center_)
    : n(W.n), eps(eps_), weyl(std::move(W)), cutoff_radius(cutoff_radius_),
      center(std::move(center_)) {
  require_dim(n, 4, "MetricField");
  if (eps < 0.0) throw std::invalid_argument("MetricField: eps must be >= 0");
  if (cutoff_radius <= 0.0)
    throw std::invalid_argument("MetricField: cutoff radius must be positive");
  if (center.empty()) center.assign(n, 0.0);
  if (center.size() != static_cast<size_t>(n))
    throw std::invalid_argument("MetricField: center dimension mismatch");
}

double cutoff_profile(double s) {
  auto bump = [](double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; };
  const double a = bump(2.0 - s);
  const double b = bump(s - 1.0);
  return a / (a + b);
}

Mat metric_eval(const MetricField& m, const Vec& x) {
  const int n = m.n;
  Vec u(n);
  for (int i = 0; i < n; ++i) u[i] = x[i] - m.center[i];
  const double s = std::sqrt(norm2_sq(u)) / m.cutoff_radius;
  if (s >= 2.0 || m.eps == 0.0) {
    Mat id(n);
    for (int i = 0; i < n; ++i) id(i, i) = 1.0;
    return id;
  }
  const double chi = s <= 1.0 ? 1.0 : cutoff_profile(s);
  Mat h = h_eval(m.weyl, u);
  for (double& v : h.a) v *= m.eps * chi;
  return expm_sym(h);
}

Mat metric_inverse_eval(const MetricField& m, const Vec& x) {
  const int n = m.n;
  Vec u(n);
  for (int i = 0; i < n; ++i) u[i] = x[i] - m.center[i];
  const double s = std::sqrt(norm2_sq(u)) / m.cutoff_radius;
  if (s <= 1.0) {
    Mat h = h_eval(m.weyl, u);
    for (double& v : h.a) v *= -m.eps;
    return expm_sym(h);
  }
  return mat_inverse(metric_eval(m, x));
}

namespace {

// fourth-order central first derivative of the metric along axis d
Mat metric_partial(const MetricField& m, const Vec& x, int d, double step) {
  Vec xp = x;
  const int n = m.n;
  Mat acc(n);
  const double c[4] = {-1.0, 8.0, -8.0, 1.0};
  const double off[4] = {2.0, 1.0, -1.0, -2.0};
  for (int k = 0; k < 4; ++k) {
    xp[d] = x[d] + off[k] * step;
    const Mat g = metric_eval(m, xp);
    for (size_t i = 0; i < acc.a.size(); ++i) acc.a[i] += c[k] * g.a[i];
  }
  for (double& v : acc.a) v /= 12.0 * step;
  return acc;
}

Rank3 christoffel_at(const MetricField& m, const Vec& x, double step) {
  const int n = m.n;
  std::vector<Mat> dg(n);
  for (int d = 0; d < n; ++d) dg[d] = metric_partial(m, x, d, step);
  const Mat ginv = mat_inverse(metric_eval(m, x));
  Rank3 gamma(n);
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double s = 0.0;
        for (int mm = 0; mm < n; ++mm)
          s += ginv(l, mm) * (dg[i](mm, j) + dg[j](mm, i) - dg[mm](i, j));
        gamma(l, i, j) = 0.5 * s;
        gamma(l, j, i) = gamma(l, i, j);
      }
  return gamma;
}

}  // namespace

CurvaturePack curvature(const MetricField& m, const Vec& x, double step) {
  if (step <= 0.0) throw std::invalid_argument("curvature: step must be positive");
  const int n = m.n;
  CurvaturePack pack;
  pack.christoffel = christoffel_at(m, x, step);

  // dGamma[mu](l,i,j) = d_mu Gamma^l_ij by the same fourth-order stencil
  std::vector<Rank3> dgamma(n);
  const double c[4] = {-1.0, 8.0, -8.0, 1.0};
  const double off[4] = {2.0, 1.0, -1.0, -2.0};
  for (int mu = 0; mu < n; ++mu) {
    Rank3 acc(n);
    Vec xp = x;
    for (int k = 0; k < 4; ++k) {
      xp[mu] = x[mu] + off[k] * step;
      const Rank3 g = christoffel_at(m, xp, step);
      for (size_t i = 0; i < acc.a.size(); ++i) acc.a[i] += c[k] * g.a[i];
    }
    for (double& v : acc.a) v /= 12.0 * step;
    dgamma[mu] = acc;
  }

  const Mat g = metric_eval(m, x);
  const Mat ginv = mat_inverse(g);
  const Rank3& gam = pack.christoffel;

  // R^rho_{sigma mu nu} = d_mu G^rho_{nu sigma} - d_nu G^rho_{mu sigma}
  //                      + G^rho_{mu l} G^l_{nu sigma} - G^rho_{nu l} G^l_{mu sigma}
  Rank4 upper(n);
  for (int rho = 0; rho < n; ++rho)
    for (int sig = 0; sig < n; ++sig)
      for (int mu = 0; mu < n; ++mu)
        for (int nuidx = 0; nuidx < n; ++nuidx) {
          double v = dgamma[mu](rho, nuidx, sig) - dgamma[nuidx](rho, mu, sig);
          for (int l = 0; l < n; ++l)
            v += gam(rho, mu, l) * gam(l, nuidx, sig) - gam(rho, nuidx, l) * gam(l, mu, sig);
          upper(rho, sig, mu, nuidx) = v;
        }
  pack.riemann = Rank4(n);
  for (int rho = 0; rho < n; ++rho)
    for (int sig = 0; sig < n; ++sig)
      for (int mu = 0; mu < n; ++mu)
        for (int nuidx = 0; nuidx < n; ++nuidx) {
          double v = 0.0;
          for (int a = 0; a < n; ++a) v += g(rho, a) * upper(a, sig, mu, nuidx);
          pack.riemann(rho, sig, mu, nuidx) = v;
        }

  pack.ricci = Mat(n);
  for (int sig = 0; sig < n; ++sig)
    for (int nuidx = 0; nuidx < n; ++nuidx) {
      double v = 0.0;
      for (int mu = 0; mu < n; ++mu)
        for (int rho = 0; rho < n; ++rho)
          v += ginv(mu, rho) * pack.riemann(rho, sig, mu, nuidx);
      pack.ricci(sig, nuidx) = v;
    }
  pack.scalar = 0.0;
  for (int sig = 0; sig < n; ++sig)
    for (int nuidx = 0; nuidx < n; ++nuidx)
      pack.scalar += ginv(sig, nuidx) * pack.ricci(sig, nuidx);

  // conformal decomposition: subtract the Kulkarni-Nomizu parts
  pack.weyl_part = Rank4(n);
  const double nm2 = n - 2.0;
  const double nm12 = (n - 1.0) * (n - 2.0);
  for (int r = 0; r < n; ++r)
    for (int s2 = 0; s2 < n; ++s2)
      for (int mu = 0; mu < n; ++mu)
        for (int nuidx = 0; nuidx < n; ++nuidx) {
          const double ric_part =
              (g(r, mu) * pack.ricci(s2, nuidx) - g(s2, mu) * pack.ricci(r, nuidx) -
               g(r, nuidx) * pack.ricci(s2, mu) + g(s2, nuidx) * pack.ricci(r, mu)) /
              nm2;
          const double scal_part = pack.scalar / nm12 *
                                   (g(r, mu) * g(s2, nuidx) - g(r, nuidx) * g(s2, mu));
          pack.weyl_part(r, s2, mu, nuidx) =
              pack.riemann(r, s2, mu, nuidx) - ric_part + scal_part;
        }
  return pack;
}

double weyl_deviation_at(const MetricField& m, const Vec& x, double step) {
  const CurvaturePack pack = curvature(m, x, step);
  double dev = 0.0;
  if (m.eps == 0.0) {
    for (double v : pack.weyl_part.a) dev = std::max(dev, std::fabs(v));
    return dev;
  }
  const int n = m.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          dev = std::max(dev, std::fabs(pack.weyl_part(i, j, k, l) / m.eps +
                                        m.weyl.w(i, j, k, l)));
  return dev;
}

double weyl_linearization(const MetricField& m, double step) {
  return weyl_deviation_at(m, m.center, step);
}

double inverse_expansion_remainder(const MetricField& m, const Vec& x) {
  const int n = m.n;
  Vec u(n);
  for (int i = 0; i < n; ++i) u[i] = x[i] - m.center[i];
  const Mat ginv = metric_inverse_eval(m, x);
  const Mat h = h_eval(m.weyl, u);
  const Mat h2 = mat_mul(h, h);
  double r = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double model = (i == j ? 1.0 : 0.0) - m.eps * h(i, j) +
                           0.5 * m.eps * m.eps * h2(i, j);
      r = std::max(r, std::fabs(ginv(i, j) - model));
    }
  return r;
}

double christoffel_expansion_remainder(const MetricField& m, const Vec& x, double step) {
  const int n = m.n;
  Vec u(n);
  for (int i = 0; i < n; ++i) u[i] = x[i] - m.center[i];
  const Rank3 gam = christoffel_at(m, x, step);
  const Rank3 dh = h_gradient(m.weyl, u);
  double r = 0.0;
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double model =
            0.5 * m.eps * (dh(i, j, l) + dh(j, i, l) - dh(l, i, j));
        r = std::max(r, std::fabs(gam(l, i, j) - model));
      }
  return r;
}

double scalar_expansion_remainder(const MetricField& m, const Vec& x, double step) {
  const int n = m.n;
  Vec u(n);
  for (int i = 0; i < n; ++i) u[i] = x[i] - m.center[i];
  const CurvaturePack pack = curvature(m, x, step);
  const Rank3 dh = h_gradient(m.weyl, u);
  double s2 = 0.0;
  for (double v : dh.a) s2 += v * v;
  return std::fabs(pack.scalar + 0.25 * m.eps * m.eps * s2);
}

}  // namespace yamabe
