#include "yamabe/energy.hpp"

#include "yamabe/constants.hpp"

#include <cmath>

namespace yamabe {

namespace {

double nu_of(int n) { return static_cast<double>(n) * (n - 2); }

// F1 integrand in its radially reduced form, pointwise equal to the defining
// (1/4) sum h_ip h_pj d_iB d_jB by the radial constraint on h:
//   (1/(4 n^2)) t^{n-2} rho^{-n} |h(x) z|^2,  rho = t^2 + |x-z|^2/(n(n-2)).
double f1_integrand(const WeylForm& W, double t, const Vec& z, const Vec& x) {
  const int n = W.n;
  const double nu = nu_of(n);
  double d2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = x[i] - z[i];
    d2 += d * d;
  }
  const double rho = t * t + d2 / nu;
  const Mat h = h_eval(W, x);
  Vec hz = mat_vec(h, z);
  return std::pow(t, n - 2.0) * std::pow(rho, -n) * norm2_sq(hz) / (4.0 * n * n);
}

}  // namespace

ModelData::ModelData(WeylForm W, double u0) : n(W.n), weyl(std::move(W)), u0x0(u0) {
  if (u0x0 <= 0.0) throw std::invalid_argument("ModelData: u0x0 must be positive");
  const ContractionTensor ct = contraction(weyl);
  T = ct.T;
  trace_T = ct.trace();
}

EnergyCoefficients energy_coefficients(const ModelData& model) {
  const int n = model.n;
  require_dim(n, 7, "energy_coefficients");
  const double kn = sobolev_mass(n);
  EnergyCoefficients c;
  c.c4 = n * (n - 2.0) * (n - 2.0) / (72.0 * (n - 4) * (n - 6)) * kn * model.trace_T;
  c.clambda = lambda_constant(n) * model.u0x0;
  c.fourth_order = -(n * double(n) - 8.0 * n - 12.0) / (48.0 * n * (n + 1)) * kn;
  c.f1_quartic = kn / (4.0 * n);
  c.f3_quartic = -(n + 4.0) / (48.0 * (n + 1)) * kn;
  c.hess2_scale = (n - 2.0) / (36.0 * (n - 4)) * kn;
  return c;
}

double profile_t(const ModelData& model, double t) {
  require_dim(model.n, 7, "profile_t");
  if (t <= 0.0) throw std::domain_error("profile_t: t must be positive");
  const EnergyCoefficients c = energy_coefficients(model);
  return -c.c4 * t * t * t * t + c.clambda * std::pow(t, 0.5 * (model.n - 2));
}

double profile_t_derivative(const ModelData& model, double t) {
  require_dim(model.n, 7, "profile_t");
  if (t <= 0.0) throw std::domain_error("profile_t: t must be positive");
  const EnergyCoefficients c = energy_coefficients(model);
  const double p = 0.5 * (model.n - 2);
  return -4.0 * c.c4 * t * t * t + p * c.clambda * std::pow(t, p - 1.0);
}

double profile_t_second_derivative(const ModelData& model, double t) {
  require_dim(model.n, 7, "profile_t");
  if (t <= 0.0) throw std::domain_error("profile_t: t must be positive");
  const EnergyCoefficients c = energy_coefficients(model);
  const double p = 0.5 * (model.n - 2);
  return -12.0 * c.c4 * t * t + p * (p - 1.0) * c.clambda * std::pow(t, p - 2.0);
}

HessianAudit hessian_z(const ModelData& model, double t) {
  require_dim(model.n, 7, "hessian_z");
  if (t <= 0.0) throw std::domain_error("hessian_z: t must be positive");
  const int n = model.n;
  const EnergyCoefficients c = energy_coefficients(model);
  HessianAudit audit;
  audit.f1_piece = Mat(n);
  audit.f2_piece = Mat(n);
  audit.total = Mat(n);
  const double scale = c.hess2_scale * t * t;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      audit.f1_piece(k, l) = scale * model.T(k, l);
      audit.f2_piece(k, l) = -audit.f1_piece(k, l);
      audit.total(k, l) = audit.f1_piece(k, l) + audit.f2_piece(k, l);
    }
  return audit;
}

double quartic_z(const ModelData& model, const Vec& e) {
  require_dim(model.n, 7, "quartic_z");
  if (std::fabs(norm2_sq(e) - 1.0) > 1e-9)
    throw std::invalid_argument("quartic_z: direction must be a unit vector");
  const EnergyCoefficients c = energy_coefficients(model);
  return c.fourth_order * h_norm_sq(model.weyl, e);
}

AssembledEnergy f_assembled(const ModelData& model, double t, const Vec& z,
                            std::uint64_t budget, std::uint64_t seed) {
  const int n = model.n;
  require_dim(n, 7, "f_assembled");
  if (t <= 0.0) throw std::domain_error("f_assembled: t must be positive");
  if (z.size() != static_cast<size_t>(n))
    throw std::invalid_argument("f_assembled: center dimension mismatch");
  if (norm2_sq(z) >= 1.0) throw std::invalid_argument("f_assembled: |z| must be < 1");
  const EnergyCoefficients c = energy_coefficients(model);
  const WeylForm& W = model.weyl;
  const double nu = nu_of(n);
  const Mat S2 = gradient_square_matrix(W);

  Integrand f1(n, 2.0 * n - 6.0, [&W, t, &z](const Vec& x) {
    return f1_integrand(W, t, z, x);
  });
  // F2 integrand: -(n-2)/(32(n-1)) * sum (d_i h_jl)^2 * B_{t,z}^2
  Integrand f2(n, 2.0 * n - 6.0, [&W, &S2, t, &z, nu, n](const Vec& x) {
    double quad = 0.0;
    for (int p = 0; p < n; ++p) {
      double inner = 0.0;
      for (int q = 0; q < n; ++q) inner += S2(p, q) * x[q];
      quad += inner * x[p];
    }
    double d2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = x[i] - z[i];
      d2 += d * d;
    }
    const double rho = t * t + d2 / nu;
    const double b2 = std::pow(t, n - 2.0) * std::pow(rho, -(n - 2.0));
    return -(n - 2.0) / (32.0 * (n - 1.0)) * quad / 9.0 * b2;
  });

  const std::uint64_t each = std::max<std::uint64_t>(1000, budget / 2);
  const OracleResult r1 = integrate_rn(f1, each, seed);
  const OracleResult r2 = integrate_rn(f2, each, seed + 0x9e37);

  AssembledEnergy out;
  out.f1 = r1.value;
  out.f2 = r2.value;
  out.f3_model = c.f3_quartic * h_norm_sq(W, z);
  out.lambda_term = c.clambda * std::pow(t, 0.5 * (n - 2));
  out.value = out.f1 + out.f2 + out.f3_model + out.lambda_term;
  out.standard_error = std::sqrt(r1.standard_error * r1.standard_error +
                                 r2.standard_error * r2.standard_error);
  out.remainder_flagged = std::sqrt(norm2_sq(z)) > 0.3;
  return out;
}

QuarticFit quartic_fit(const ModelData& model, double t, const Vec& e, double s,
                       std::uint64_t budget, std::uint64_t seed) {
  const int n = model.n;
  require_dim(n, 7, "quartic_fit");
  if (std::fabs(norm2_sq(e) - 1.0) > 1e-9)
    throw std::invalid_argument("quartic_fit: direction must be a unit vector");
  if (s <= 0.0 || s >= 0.5) throw std::invalid_argument("quartic_fit: need 0 < s < 1/2");
  const EnergyCoefficients c = energy_coefficients(model);
  const WeylForm& W = model.weyl;
  const double nu = nu_of(n);

  // Richardson extraction of the s^4 coefficient from scales {s, s/2, s/4}.
  // In the bubble-centered frame x = z + y the first integrand becomes
  //   (t^{n-2}/(4n^2)) rho(y)^{-n} z^T h(z+y)^2 z,
  // a polynomial of degree six in s per quadrature point; after the +-e
  // symmetrization only s^2, s^4, s^6 survive, so the weights
  // (-4/9, 272/9, -1024/9) normalizing s^4 and killing s^2 and s^6 recover
  // the quartic coefficient with no extrapolation remainder at all.  The
  // second integrand is quadratic in s in this frame and drops out pointwise.
  const double w1 = -4.0 / 9.0, w2 = 272.0 / 9.0, w3 = -1024.0 / 9.0;
  const double scales[3] = {1.0, 0.5, 0.25};
  auto combined = [&](const Vec& y) {
    const double rho = t * t + norm2_sq(y) / nu;
    const double weight =
        std::pow(t, n - 2.0) * std::pow(rho, -n) / (4.0 * n * n);
    Vec shifted(n);
    auto q_sym = [&](double zlen) {
      double acc = 0.0;
      for (double sign : {1.0, -1.0}) {
        for (int i = 0; i < n; ++i) shifted[i] = y[i] + sign * zlen * e[i];
        const Mat h = h_eval(W, shifted);
        Vec he = mat_vec(h, e);
        acc += 0.5 * zlen * zlen * norm2_sq(he);
      }
      return acc;
    };
    return weight * (w1 * q_sym(s * scales[0]) + w2 * q_sym(s * scales[1]) +
                     w3 * q_sym(s * scales[2]));
  };
  Integrand g(n, 2.0 * n - 6.0, combined);
  const OracleResult r = integrate_rn_frames(g, budget, seed);

  const double hn = h_norm_sq(W, e);
  QuarticFit fit;
  fit.fitted = r.value / (s * s * s * s) + c.f3_quartic * hn;
  fit.standard_error = r.standard_error / (s * s * s * s);
  fit.expected = c.fourth_order * hn;
  return fit;
}

MixedDerivativeAudit mixed_derivative_audit(const ModelData& model, double t,
                                            std::uint64_t budget, std::uint64_t seed) {
  const int n = model.n;
  require_dim(n, 7, "mixed_derivative_audit");
  if (t <= 0.0) throw std::domain_error("mixed_derivative_audit: t must be positive");
  const double ht = 1e-2 * t;
  const double hz = 1e-2;

  auto G = [&](double tt, const Vec& zz, double& se) {
    const AssembledEnergy a = f_assembled(model, tt, zz, budget, seed);
    se = a.standard_error;
    return a.value;
  };

  MixedDerivativeAudit audit;
  Vec z(n, 0.0);
  double se_acc_first = 0.0;
  for (int i = 0; i < n; ++i) {
    double se[4];
    Vec zp(n, 0.0), zm(n, 0.0);
    zp[i] = hz;
    zm[i] = -hz;
    const double gpp = G(t + ht, zp, se[0]);
    const double gpm = G(t + ht, zm, se[1]);
    const double gmp = G(t - ht, zp, se[2]);
    const double gmm = G(t - ht, zm, se[3]);
    const double est = (gpp - gpm - gmp + gmm) / (4.0 * ht * hz);
    double ss = 0.0;
    for (double v : se) ss += v * v;
    se_acc_first = std::max(se_acc_first, std::sqrt(ss) / (4.0 * ht * hz));
    audit.max_first = std::max(audit.max_first, std::fabs(est));
  }

  // third derivative along a single coordinate (i,i,i) for a subset of axes
  double se_acc_third = 0.0;
  const int axes = std::min(n, 3);
  for (int i = 0; i < axes; ++i) {
    double se[8];
    double vals[2][4];
    int c = 0;
    for (int pm = 0; pm < 2; ++pm) {
      const double tt = pm == 0 ? t + ht : t - ht;
      for (int k = 0; k < 4; ++k) {
        const double step = (k == 0 ? 2.0 : k == 1 ? 1.0 : k == 2 ? -1.0 : -2.0) * hz;
        Vec zz(n, 0.0);
        zz[i] = step;
        vals[pm][k] = G(tt, zz, se[c++]);
      }
    }
    auto third = [&](int pm) {
      return (vals[pm][0] - 2.0 * vals[pm][1] + 2.0 * vals[pm][2] - vals[pm][3]) /
             (2.0 * hz * hz * hz);
    };
    const double est = (third(0) - third(1)) / (2.0 * ht);
    double ss = 0.0;
    for (double v : se) ss += v * v;
    se_acc_third =
        std::max(se_acc_third, std::sqrt(ss) / (2.0 * hz * hz * hz * 2.0 * ht));
    audit.max_third = std::max(audit.max_third, std::fabs(est));
  }

  audit.noise_floor_first = 10.0 * se_acc_first;
  audit.noise_floor_third = 10.0 * se_acc_third;
  audit.pass = audit.max_first <= audit.noise_floor_first &&
               audit.max_third <= audit.noise_floor_third;
  return audit;
}

}  // namespace yamabe
