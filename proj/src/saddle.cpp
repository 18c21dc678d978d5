#include "yamabe/saddle.hpp"

#include "yamabe/constants.hpp"
#include "yamabe/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace yamabe {

namespace {

// gradient and Hessian of z -> sum_pq h_pq(z)^2
Vec h_sq_gradient(const WeylForm& W, const Vec& z) {
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

Mat h_sq_hessian(const WeylForm& W, const Vec& z) {
  const int n = W.n;
  const Mat h = h_eval(W, z);
  const Rank3 dh = h_gradient(W, z);
  Mat H(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          s += dh(i, p, q) * dh(j, p, q) + h(p, q) * h_second_derivative(W, p, q, i, j);
      H(i, j) = 2.0 * s;
      H(j, i) = H(i, j);
    }
  return H;
}

// Solve the small symmetric system (H + lambda I) d = -g in place.
bool solve_damped(Mat H, Vec g, double lambda, Vec& d) {
  const int n = H.n;
  for (int i = 0; i < n; ++i) H(i, i) += lambda;
  try {
    const Mat inv = mat_inverse(H);
    d = mat_vec(inv, g);
    for (double& v : d) v = -v;
    return true;
  } catch (const std::runtime_error&) {
    return false;
  }
}

}  // namespace

ProfileMinimum minimize_profile(const ModelData& model) {
  const int n = model.n;
  if (n <= 10)
    throw std::domain_error(
        "minimize_profile: the profile has no interior minimum for n <= 10");
  if (model.trace_T <= 0.0)
    throw std::invalid_argument("minimize_profile: vanishing form, no quartic term");
  if (model.u0x0 <= 0.0) throw std::invalid_argument("minimize_profile: u0x0 must be > 0");
  const EnergyCoefficients c = energy_coefficients(model);
  double t0 = std::pow(8.0 * c.c4 / ((n - 2.0) * c.clambda), 2.0 / (n - 10.0));
  // safeguarded Newton on dF/dt
  for (int it = 0; it < 4; ++it) {
    const double d1 = profile_t_derivative(model, t0);
    const double d2 = profile_t_second_derivative(model, t0);
    if (d2 <= 0.0) break;
    const double step = d1 / d2;
    const double trial = t0 - step;
    if (trial <= 0.5 * t0 || trial >= 2.0 * t0) break;
    t0 = trial;
    if (std::fabs(step) <= 1e-15 * t0) break;
  }
  ProfileMinimum m;
  m.t0 = t0;
  m.f_at_min = profile_t(model, t0);
  m.hess_t = profile_t_second_derivative(model, t0);
  const double expected = -c.c4 * std::pow(t0, 4.0) * (n - 10.0) / (n - 2.0);
  if (std::fabs(m.f_at_min - expected) > 1e-10 * std::fabs(expected))
    throw std::runtime_error("minimize_profile: closed-form value identity violated");
  if (m.hess_t <= 0.0)
    throw std::runtime_error("minimize_profile: minimum is not non-degenerate");
  return m;
}

SaddleCertificate certify_saddle(const ModelData& model, double eta, double eps_box,
                                 int rim_samples, std::uint64_t seed,
                                 std::uint64_t oracle_budget) {
  const int n = model.n;
  const ProfileMinimum pm = minimize_profile(model);
  SaddleCertificate cert;
  cert.t0 = pm.t0;
  cert.f_at_min = pm.f_at_min;
  cert.hess_t = pm.hess_t;
  cert.eta = eta;
  cert.eps_box = eps_box;
  if (eta <= 0.0 || eps_box <= 0.0)
    throw std::invalid_argument("certify_saddle: eta and eps_box must be positive");
  if (pm.t0 - eta <= 0.0)
    throw std::invalid_argument("certify_saddle: t-edge leaves (0, infinity)");
  if (eps_box >= 1.0) throw std::invalid_argument("certify_saddle: rim leaves B(0,1)");

  const EnergyCoefficients c = energy_coefficients(model);

  // profile extrema over the t-edge (fine grid; endpoints included)
  const int grid = 512;
  double edge_min = std::numeric_limits<double>::infinity();
  double edge_max = -edge_min;
  for (int i = 0; i <= grid; ++i) {
    const double t = pm.t0 - eta + 2.0 * eta * i / grid;
    const double v = profile_t(model, t);
    edge_min = std::min(edge_min, v);
    edge_max = std::max(edge_max, v);
  }
  edge_min = std::min(edge_min, pm.f_at_min);
  cert.edge_min = edge_min;
  cert.box_max = edge_max;  // the quartic part is <= 0, so z = 0 dominates

  // rim maximum: the z-part is fourth_order * eps^4 * sum h(dir)^2 with
  // fourth_order < 0, so the rim max needs the coercivity minimum
  const CoercivityResult co = coercivity_check(model.weyl, rim_samples, 64, seed);
  cert.rim_max = edge_max + c.fourth_order * std::pow(eps_box, 4.0) * co.minimum;
  cert.sampling_gap =
      std::fabs(c.fourth_order) * std::pow(eps_box, 4.0) * co.consensus_gap;

  cert.slope_left = profile_t_derivative(model, pm.t0 - eta);
  cert.slope_right = profile_t_derivative(model, pm.t0 + eta);
  cert.remainder_ok = eps_box <= 0.3;

  const double gap = cert.edge_min - cert.rim_max;
  cert.margin = std::min({gap, -cert.box_max,
                          0.5 * eta * std::min(-cert.slope_left, cert.slope_right)});

  // spot checks: quadrature values against the model at box corners
  double worst = 0.0, bound = 0.0;
  {
    Vec dir = co.minimizer;
    if (dir.empty()) dir = Vec(n, 0.0);
    Vec z(n, 0.0);
    for (int i = 0; i < n; ++i) z[i] = eps_box * dir[i];
    const double pts[3][2] = {{pm.t0, 1.0}, {pm.t0 - eta, 0.0}, {pm.t0 + eta, 0.0}};
    for (const auto& p : pts) {
      const double t = p[0];
      Vec zz = p[1] > 0.5 ? z : Vec(n, 0.0);
      const AssembledEnergy a = f_assembled(model, t, zz, oracle_budget, seed);
      const double modelv =
          profile_t(model, t) + c.fourth_order * h_norm_sq(model.weyl, zz);
      worst = std::max(worst, std::fabs(a.value - modelv));
      bound = std::max(bound, 3.0 * a.standard_error + 0.25 * std::max(gap, 0.0));
    }
  }
  cert.spot_check_error = worst;
  cert.spot_check_bound = bound;

  cert.pass = true;
  auto fail = [&](const char* why) {
    if (cert.pass) {
      cert.pass = false;
      cert.violated = why;
    }
  };
  if (!(cert.f_at_min < 0.0)) fail("negative minimum");
  if (!(cert.hess_t > 0.0)) fail("t-nondegeneracy");
  if (!(gap > 0.0)) fail("edge minimum above rim maximum");
  if (!(cert.slope_left < 0.0 && cert.slope_right > 0.0)) fail("t-derivative signs");
  if (!(cert.box_max < 0.0)) fail("negativity on the closed box");
  if (!cert.remainder_ok) fail("quartic remainder flag");
  if (!(gap > 10.0 * cert.sampling_gap)) fail("rim sampling margin");
  if (!(worst <= bound)) fail("quadrature spot check");
  return cert;
}

SaddleCertificate certify_saddle_auto(const ModelData& model, std::uint64_t seed,
                                      std::uint64_t oracle_budget) {
  const ProfileMinimum pm = minimize_profile(model);
  const EnergyCoefficients c = energy_coefficients(model);
  const CoercivityResult co = coercivity_check(model.weyl, 4096, 64, seed);

  auto profile_spread = [&](double eta) {
    double mx = pm.f_at_min;
    for (int i = 0; i <= 256; ++i) {
      const double t = pm.t0 - eta + 2.0 * eta * i / 256.0;
      mx = std::max(mx, profile_t(model, t));
    }
    return mx - pm.f_at_min;
  };

  // the rim drop scales like eps^4 while the edge spread scales like eta^2,
  // so eta has to be slaved to eps for the gap condition to close
  double eps_box = 0.3;
  SaddleCertificate last;
  for (int eps_iter = 0; eps_iter < 8; ++eps_iter) {
    const double drop = std::fabs(c.fourth_order) * std::pow(eps_box, 4.0) * co.minimum;
    double eta = std::min(0.25 * pm.t0, 0.45 * pm.t0);
    while (eta > 1e-7 * pm.t0 && profile_spread(eta) > 0.45 * drop) eta *= 0.5;
    last = certify_saddle(model, eta, eps_box, 4096, seed, oracle_budget);
    if (last.pass) return last;
    eps_box *= 0.5;
    if (eps_box < 1e-3) break;
  }
  return last;
}

CriticalPoint locate_critical_point(const ModelData& model, const SaddleCertificate& cert,
                                    const Perturbation& perturbation, double delta,
                                    std::uint64_t seed) {
  const int n = model.n;
  if (!cert.pass)
    throw std::invalid_argument("locate_critical_point: needs a passing certificate");
  if (delta < 0.0 || (delta >= cert.margin && delta > 0.0))
    throw std::invalid_argument(
        "locate_critical_point: perturbation bound exceeds certificate margin");
  const EnergyCoefficients c = energy_coefficients(model);
  const double scale = std::max(std::fabs(cert.f_at_min), 1.0);
  const double q4 = c.fourth_order;

  auto pert = [&](double t, const Vec& z) {
    return perturbation ? perturbation(t, z) : 0.0;
  };

  const double hp = 1e-5;
  auto grad = [&](double t, const Vec& z, Vec& g) {
    // g[0] = dF/dt, g[1..n] = dF/dz
    g.assign(n + 1, 0.0);
    g[0] = profile_t_derivative(model, t);
    const Vec gq = h_sq_gradient(model.weyl, z);
    for (int i = 0; i < n; ++i) g[i + 1] = q4 * gq[i];
    if (perturbation) {
      Vec zp = z, zm = z;
      g[0] += (pert(t + hp, z) - pert(t - hp, z)) / (2.0 * hp);
      for (int i = 0; i < n; ++i) {
        zp[i] += hp;
        zm[i] -= hp;
        g[i + 1] += (pert(t, zp) - pert(t, zm)) / (2.0 * hp);
        zp[i] = z[i];
        zm[i] = z[i];
      }
    }
  };
  auto hess = [&](double t, const Vec& z, Mat& H) {
    H = Mat(n + 1);
    H(0, 0) = profile_t_second_derivative(model, t);
    const Mat Hq = h_sq_hessian(model.weyl, z);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) H(i + 1, j + 1) = q4 * Hq(i, j);
    if (perturbation) {
      const double f0 = pert(t, z);
      H(0, 0) += (pert(t + hp, z) - 2.0 * f0 + pert(t - hp, z)) / (hp * hp);
      Vec zp = z, zm = z;
      for (int i = 0; i < n; ++i) {
        zp[i] += hp;
        zm[i] -= hp;
        H(i + 1, i + 1) += (pert(t, zp) - 2.0 * f0 + pert(t, zm)) / (hp * hp);
        const double tp = (pert(t + hp, zp) - pert(t + hp, zm) - pert(t - hp, zp) +
                           pert(t - hp, zm)) /
                          (4.0 * hp * hp);
        H(0, i + 1) += tp;
        H(i + 1, 0) += tp;
        zp[i] = z[i];
        zm[i] = z[i];
        // mixed z_i z_j terms of the perturbation
        for (int j = i + 1; j < n; ++j) {
          Vec zpp = z, zpm = z, zmp = z, zmm = z;
          zpp[i] += hp; zpp[j] += hp;
          zpm[i] += hp; zpm[j] -= hp;
          zmp[i] -= hp; zmp[j] += hp;
          zmm[i] -= hp; zmm[j] -= hp;
          const double v = (pert(t, zpp) - pert(t, zpm) - pert(t, zmp) + pert(t, zmm)) /
                           (4.0 * hp * hp);
          H(i + 1, j + 1) += v;
          H(j + 1, i + 1) += v;
        }
      }
    }
  };

  auto in_box = [&](double t, const Vec& z) {
    if (t < cert.t0 - cert.eta || t > cert.t0 + cert.eta) return false;
    return norm2_sq(z) <= cert.eps_box * cert.eps_box * (1.0 + 1e-12);
  };

  // starts: the saddle itself plus a deterministic spread
  std::vector<std::pair<double, Vec>> starts;
  starts.push_back({cert.t0, Vec(n, 0.0)});
  CounterRng rng{seed, 7, 0};
  for (int s = 0; s < 8; ++s) {
    Vec z(n, 0.0);
    for (int i = 0; i < n; ++i) z[i] = 0.4 * cert.eps_box * rng.next_symmetric();
    const double t = cert.t0 + 0.5 * cert.eta * rng.next_symmetric();
    starts.push_back({t, z});
  }

  CriticalPoint best;
  best.residual = std::numeric_limits<double>::infinity();
  Vec g;
  Mat H;
  for (const auto& st : starts) {
    double t = st.first;
    Vec z = st.second;
    double lambda = 0.0;
    for (int it = 0; it < 200; ++it) {
      grad(t, z, g);
      const double res = std::sqrt(norm2_sq(g)) / scale;
      if (res <= 1e-13) break;  // drive to machine scale, accept at 1e-8
      hess(t, z, H);
      Vec d;
      bool ok = solve_damped(H, g, lambda * scale, d);
      double tn = t, best_res = res;
      Vec zn = z;
      bool moved = false;
      if (ok) {
        double step = 1.0;
        for (int ls = 0; ls < 30; ++ls) {
          double tt = t + step * d[0];
          Vec zz(n);
          for (int i = 0; i < n; ++i) zz[i] = z[i] + step * d[i + 1];
          tt = std::min(std::max(tt, cert.t0 - cert.eta), cert.t0 + cert.eta);
          const double zr = std::sqrt(norm2_sq(zz));
          if (zr > cert.eps_box)
            for (double& v : zz) v *= cert.eps_box / zr;
          grad(tt, zz, g);
          const double r2 = std::sqrt(norm2_sq(g)) / scale;
          if (r2 < best_res) {
            tn = tt;
            zn = zz;
            best_res = r2;
            moved = true;
            break;
          }
          step *= 0.5;
        }
      }
      if (!moved) {
        lambda = lambda == 0.0 ? 1e-6 : lambda * 10.0;
        if (lambda > 1e6) break;
        continue;
      }
      lambda = std::max(lambda * 0.1, 0.0);
      t = tn;
      z = zn;
    }
    grad(t, z, g);
    const double res = std::sqrt(norm2_sq(g)) / scale;
    if (in_box(t, z) && res < best.residual) {
      best.t = t;
      best.z = z;
      best.residual = res;
    }
  }
  if (!std::isfinite(best.residual))
    throw std::runtime_error("locate_critical_point: no admissible point found");
  if (best.residual > 1e-8) {
    throw std::runtime_error(
        "locate_critical_point: no root within the box (best residual " +
        std::to_string(best.residual) + ")");
  }
  best.value = profile_t(model, best.t) + q4 * h_norm_sq(model.weyl, best.z) +
               pert(best.t, best.z);
  if (!(best.value < 0.0))
    throw std::runtime_error("locate_critical_point: perturbed value not negative");
  return best;
}

}  // namespace yamabe
