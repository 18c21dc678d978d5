#include "yamabe/oracle.hpp"

#include "yamabe/constants.hpp"
#include "yamabe/rng.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace yamabe {

Integrand::Integrand(int n_, double decay_, std::function<double(const Vec&)> f_, bool smooth_)
    : n(n_), decay(decay_), smooth(smooth_), f(std::move(f_)) {
  if (n < 1) throw std::invalid_argument("Integrand: dimension must be positive");
  if (decay <= n)
    throw std::domain_error("Integrand: decay exponent must exceed the dimension");
}

namespace {

constexpr int kBatch = 64;
constexpr int kNodesFine = 96;
constexpr int kNodesCoarse = 48;

std::map<int, std::pair<std::vector<double>, std::vector<double>>> g_gl_cache;
std::mutex g_gl_mutex;

void gauss_legendre_m11(int m, std::vector<double>& x, std::vector<double>& w) {
  x.resize(m);
  w.resize(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double t = std::cos(3.141592653589793238463 * (i + 0.75) / (m + 0.5));
    double p0 = 0.0, p1 = 0.0;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = 0.0;
      for (int k = 0; k < m; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * t * p1 - k * p2) / (k + 1.0);
      }
      const double dp = m * (t * p0 - p1) / (t * t - 1.0);
      const double dt = p0 / dp;
      t -= dt;
      if (std::fabs(dt) < 1e-16) break;
    }
    p0 = 1.0;
    p1 = 0.0;
    for (int k = 0; k < m; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k + 1.0) * t * p1 - k * p2) / (k + 1.0);
    }
    const double dp = m * (t * p0 - p1) / (t * t - 1.0);
    x[i] = -t;
    x[m - 1 - i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    w[m - 1 - i] = w[i];
  }
}

void unit_direction(CounterRng& rng, Vec& theta) {
  const int n = static_cast<int>(theta.size());
  while (true) {
    for (int i = 0; i < n; i += 2) {
      double g0, g1;
      rng.next_gaussian_pair(g0, g1);
      theta[i] = g0;
      if (i + 1 < n) theta[i + 1] = g1;
    }
    double nrm = std::sqrt(norm2_sq(theta));
    if (nrm > 1e-8) {
      for (double& c : theta) c /= nrm;
      return;
    }
  }
}

struct BatchStats {
  double sum_value = 0.0;     // sum over directions of the radial integral
  double sum_quad_err = 0.0;  // sum of two-resolution radial error estimates
  int count = 0;
};

}  // namespace

void gauss_legendre_01(int m, std::vector<double>& nodes, std::vector<double>& weights) {
  {
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    auto it = g_gl_cache.find(m);
    if (it != g_gl_cache.end()) {
      nodes = it->second.first;
      weights = it->second.second;
      return;
    }
  }
  std::vector<double> x, w;
  gauss_legendre_m11(m, x, w);
  nodes.resize(m);
  weights.resize(m);
  for (int i = 0; i < m; ++i) {
    nodes[i] = 0.5 * (x[i] + 1.0);
    weights[i] = 0.5 * w[i];
  }
  std::lock_guard<std::mutex> lock(g_gl_mutex);
  g_gl_cache[m] = {nodes, weights};
}

namespace {

OracleResult integrate_rn_impl(const Integrand& f, std::uint64_t budget,
                               std::uint64_t seed, bool frames);

}  // namespace

OracleResult integrate_rn(const Integrand& f, std::uint64_t budget, std::uint64_t seed) {
  return integrate_rn_impl(f, budget, seed, false);
}

OracleResult integrate_rn_frames(const Integrand& f, std::uint64_t budget,
                                 std::uint64_t seed) {
  return integrate_rn_impl(f, budget, seed, true);
}

namespace {

// modified Gram-Schmidt orthonormalization of a seeded Gaussian matrix
void random_frame(CounterRng& rng, std::vector<Vec>& cols) {
  const int n = static_cast<int>(cols.size());
  for (int c = 0; c < n; ++c) {
    Vec& v = cols[c];
    for (int i = 0; i < n; i += 2) {
      double g0, g1;
      rng.next_gaussian_pair(g0, g1);
      v[i] = g0;
      if (i + 1 < n) v[i + 1] = g1;
    }
    for (int p = 0; p < c; ++p) {
      const double proj = dot(v, cols[p]);
      for (int i = 0; i < n; ++i) v[i] -= proj * cols[p][i];
    }
    const double nrm = std::sqrt(norm2_sq(v));
    if (nrm < 1e-10) {
      --c;  // re-draw a degenerate column; the counter advances
      continue;
    }
    for (double& x : v) x /= nrm;
  }
}

OracleResult integrate_rn_impl(const Integrand& f, std::uint64_t budget,
                               std::uint64_t seed, bool frames) {
  if (budget < 1000) throw std::invalid_argument("integrate_rn: budget too small (< 1e3)");
  const int n = f.n;
  const std::uint64_t evals_per_dir = kNodesFine + kNodesCoarse;
  const std::uint64_t dirs_per_frame = 2 * static_cast<std::uint64_t>(n);
  std::uint64_t dirs = std::max<std::uint64_t>(64, budget / evals_per_dir);
  std::uint64_t batch_size;
  if (frames) {
    // one frame per batch, at least 8 frames
    const std::uint64_t nframes =
        std::max<std::uint64_t>(8, dirs / dirs_per_frame);
    dirs = nframes * dirs_per_frame;
    batch_size = dirs_per_frame;
  } else {
    // keep at least ~32 batches so the jackknife variance is meaningful
    batch_size = std::min<std::uint64_t>(kBatch, std::max<std::uint64_t>(2, dirs / 32));
  }
  const std::uint64_t batches = (dirs + batch_size - 1) / batch_size;

  std::vector<double> sf, wf, sc, wc;
  gauss_legendre_01(kNodesFine, sf, wf);
  gauss_legendre_01(kNodesCoarse, sc, wc);

  // r = s/(1-s), dr = ds/(1-s)^2; radial integrand f(r theta) r^{n-1}
  auto radial = [&](const Vec& theta, const std::vector<double>& s,
                    const std::vector<double>& w, Vec& xbuf) {
    double acc = 0.0;
    for (size_t i = 0; i < s.size(); ++i) {
      const double r = s[i] / (1.0 - s[i]);
      const double jac = 1.0 / ((1.0 - s[i]) * (1.0 - s[i]));
      for (int d = 0; d < n; ++d) xbuf[d] = theta[d] * r;
      acc += w[i] * f.f(xbuf) * std::pow(r, n - 1) * jac;
    }
    return acc;
  };

  std::vector<BatchStats> stats(batches);
  std::vector<Vec> frame(frames ? n : 0, Vec(n));
  for (std::uint64_t b = 0; b < batches; ++b) {
    CounterRng rng{seed, b, 0};
    Vec theta(n), xbuf(n);
    BatchStats st;
    if (frames) random_frame(rng, frame);
    const std::uint64_t lo = b * batch_size;
    const std::uint64_t hi = std::min(dirs, lo + batch_size);
    for (std::uint64_t d = lo; d < hi; ++d) {
      if (frames) {
        const std::uint64_t k = d - lo;
        const int col = static_cast<int>(k / 2);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        for (int i = 0; i < n; ++i) theta[i] = sign * frame[col][i];
      } else {
        unit_direction(rng, theta);
      }
      const double vf = radial(theta, sf, wf, xbuf);
      const double vc = radial(theta, sc, wc, xbuf);
      st.sum_value += vf;
      st.sum_quad_err += std::fabs(vf - vc);
      ++st.count;
    }
    stats[b] = st;
  }

  // ordered reduction over batch index
  double total = 0.0, total_err = 0.0;
  std::uint64_t count = 0;
  for (const auto& st : stats) {
    total += st.sum_value;
    total_err += st.sum_quad_err;
    count += st.count;
  }
  const double omega = sphere_volume(n);
  const double mean = total / count;
  const double value = omega * mean;

  // jackknife over batches
  double jack = 0.0;
  if (batches > 1) {
    std::vector<double> loo(batches);
    double loo_mean = 0.0;
    for (std::uint64_t b = 0; b < batches; ++b) {
      loo[b] = (total - stats[b].sum_value) / (count - stats[b].count);
      loo_mean += loo[b];
    }
    loo_mean /= batches;
    double ss = 0.0;
    for (std::uint64_t b = 0; b < batches; ++b)
      ss += (loo[b] - loo_mean) * (loo[b] - loo_mean);
    jack = omega * std::sqrt(ss * (batches - 1.0) / batches);
  }
  const double quad_err = omega * total_err / count;
  OracleResult res;
  res.value = value;
  res.standard_error =
      std::max(std::sqrt(jack * jack + quad_err * quad_err), 1e-15 * std::fabs(value) + 1e-300);
  res.samples_used = dirs * evals_per_dir;
  res.method = frames ? "sphere_radial_product_frames" : "sphere_radial_product";
  return res;
}

OracleResult integrate_rn_deg4_impl(const Integrand& f, std::uint64_t budget,
                                    std::uint64_t seed) {
  if (budget < 1000) throw std::invalid_argument("integrate_rn: budget too small (< 1e3)");
  const int n = f.n;
  const std::uint64_t evals_per_dir = kNodesFine + kNodesCoarse;
  const std::uint64_t dirs_per_rot = 2ULL * n * n;  // 2n axis + 2n(n-1) diagonal points
  const std::uint64_t rotations =
      std::max<std::uint64_t>(8, budget / (dirs_per_rot * evals_per_dir));
  const double wa = (4.0 - n) / (2.0 * n * (n + 2));
  const double wb = 1.0 / (static_cast<double>(n) * (n + 2));

  std::vector<double> sf, wf, sc, wc;
  gauss_legendre_01(kNodesFine, sf, wf);
  gauss_legendre_01(kNodesCoarse, sc, wc);
  auto radial = [&](const Vec& theta, const std::vector<double>& s,
                    const std::vector<double>& w, Vec& xbuf) {
    double acc = 0.0;
    for (size_t i = 0; i < s.size(); ++i) {
      const double r = s[i] / (1.0 - s[i]);
      const double jac = 1.0 / ((1.0 - s[i]) * (1.0 - s[i]));
      for (int d = 0; d < n; ++d) xbuf[d] = theta[d] * r;
      acc += w[i] * f.f(xbuf) * std::pow(r, n - 1) * jac;
    }
    return acc;
  };

  std::vector<double> rot_value(rotations, 0.0), rot_err(rotations, 0.0);
  std::vector<Vec> frame(n, Vec(n));
  Vec theta(n), xbuf(n);
  const double inv_sqrt2 = 0.7071067811865475244;
  for (std::uint64_t b = 0; b < rotations; ++b) {
    CounterRng rng{seed, b, 0};
    random_frame(rng, frame);
    double acc = 0.0, errs = 0.0;
    auto add_pair = [&](double weight) {
      // evaluates +-theta with the given weight
      for (double sign : {1.0, -1.0}) {
        Vec t2(n);
        for (int i = 0; i < n; ++i) t2[i] = sign * theta[i];
        const double vf = radial(t2, sf, wf, xbuf);
        const double vc = radial(t2, sc, wc, xbuf);
        acc += weight * vf;
        errs += std::fabs(weight) * std::fabs(vf - vc);
      }
    };
    for (int i = 0; i < n; ++i) {
      theta = frame[i];
      add_pair(wa);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (double sj : {1.0, -1.0}) {
          for (int d = 0; d < n; ++d)
            theta[d] = (frame[i][d] + sj * frame[j][d]) * inv_sqrt2;
          add_pair(wb);
        }
    rot_value[b] = acc;  // weights sum to 1: acc is this rotation's sphere mean
    rot_err[b] = errs;
  }

  double total = 0.0, total_err = 0.0;
  for (std::uint64_t b = 0; b < rotations; ++b) {
    total += rot_value[b];
    total_err += rot_err[b];
  }
  const double omega = sphere_volume(n);
  const double mean = total / rotations;
  double jack = 0.0;
  if (rotations > 1) {
    double loo_mean = 0.0;
    std::vector<double> loo(rotations);
    for (std::uint64_t b = 0; b < rotations; ++b) {
      loo[b] = (total - rot_value[b]) / (rotations - 1.0);
      loo_mean += loo[b];
    }
    loo_mean /= rotations;
    double ss = 0.0;
    for (std::uint64_t b = 0; b < rotations; ++b)
      ss += (loo[b] - loo_mean) * (loo[b] - loo_mean);
    jack = omega * std::sqrt(ss * (rotations - 1.0) / rotations);
  }
  OracleResult res;
  res.value = omega * mean;
  const double quad_err = omega * total_err / rotations;
  res.standard_error =
      std::max(std::sqrt(jack * jack + quad_err * quad_err), 1e-15 * std::fabs(res.value) + 1e-300);
  res.samples_used = rotations * dirs_per_rot * evals_per_dir;
  res.method = "sphere_radial_product_deg4";
  return res;
}

}  // namespace

OracleResult integrate_rn_deg4(const Integrand& f, std::uint64_t budget,
                               std::uint64_t seed) {
  return integrate_rn_deg4_impl(f, budget, seed);
}

OracleResult integrate_sphere_mc(int n, const std::function<double(const Vec&)>& f,
                                 std::uint64_t budget, std::uint64_t seed) {
  if (budget < 1000) throw std::invalid_argument("integrate_sphere_mc: budget too small (< 1e3)");
  const std::uint64_t points = budget;
  const std::uint64_t batch_size =
      std::min<std::uint64_t>(kBatch, std::max<std::uint64_t>(2, points / 32));
  const std::uint64_t batches = (points + batch_size - 1) / batch_size;
  std::vector<double> sums(batches, 0.0);
  std::vector<int> counts(batches, 0);
  for (std::uint64_t b = 0; b < batches; ++b) {
    CounterRng rng{seed, b ^ 0x5bd1e995ULL, 0};
    Vec theta(n);
    const std::uint64_t lo = b * batch_size;
    const std::uint64_t hi = std::min(points, lo + batch_size);
    double s = 0.0;
    for (std::uint64_t d = lo; d < hi; ++d) {
      unit_direction(rng, theta);
      s += f(theta);
    }
    sums[b] = s;
    counts[b] = static_cast<int>(hi - lo);
  }
  double total = 0.0;
  std::uint64_t count = 0;
  for (std::uint64_t b = 0; b < batches; ++b) {
    total += sums[b];
    count += counts[b];
  }
  const double omega = sphere_volume(n);
  const double mean = total / count;
  double jack = 0.0;
  if (batches > 1) {
    double loo_mean = 0.0;
    std::vector<double> loo(batches);
    for (std::uint64_t b = 0; b < batches; ++b) {
      loo[b] = (total - sums[b]) / (count - counts[b]);
      loo_mean += loo[b];
    }
    loo_mean /= batches;
    double ss = 0.0;
    for (std::uint64_t b = 0; b < batches; ++b)
      ss += (loo[b] - loo_mean) * (loo[b] - loo_mean);
    jack = omega * std::sqrt(ss * (batches - 1.0) / batches);
  }
  OracleResult res;
  res.value = omega * mean;
  res.standard_error = std::max(jack, 1e-15 * std::fabs(res.value) + 1e-300);
  res.samples_used = points;
  res.method = "monte_carlo";
  return res;
}

ExactScalar integrate_sphere_poly_exact(const std::vector<int>& alpha) {
  const int n = static_cast<int>(alpha.size());
  if (n < 2) throw std::invalid_argument("integrate_sphere_poly: need n >= 2");
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("integrate_sphere_poly: negative exponent");
    if (a % 2) return ExactScalar::zero();
    total += a;
  }
  ExactScalar num = ExactScalar(2);
  for (int a : alpha) num = num * gamma_half(Half(a + 1));
  return num / gamma_half(Half(n + total));
}

double integrate_sphere_poly(const std::vector<int>& alpha) {
  return integrate_sphere_poly_exact(alpha).to_double();
}

namespace {

// omega_{n-1} / (n (n+2)), the repeated constant of the fourth-moment formula.
double fourth_moment_unit(int n) { return sphere_volume(n) / (n * double(n + 2)); }

}  // namespace

double sphere_moment_h_product(const WeylForm& W, int k, int l) {
  const int n = W.n;
  // sum_p h_kp h_pl = (1/9) sum_{abcd} M_abcd x_a x_b x_c x_d,
  // M_abcd = sum_p W_kapb W_pcld; fourth moments collapse the quadruple sum.
  double t1 = 0.0, t2 = 0.0, t3 = 0.0;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      double maacc = 0.0, macac = 0.0, macca = 0.0;
      for (int p = 0; p < n; ++p) {
        maacc += W.w(k, a, p, a) * W.w(p, c, l, c);
        macac += W.w(k, a, p, c) * W.w(p, a, l, c);
        macca += W.w(k, a, p, c) * W.w(p, c, l, a);
      }
      t1 += maacc;
      t2 += macac;
      t3 += macca;
    }
  return fourth_moment_unit(n) / 9.0 * (t1 + t2 + t3);
}

double sphere_moment_h_pair(const WeylForm& W, int a, int b, int c, int d) {
  const int n = W.n;
  double t1 = 0.0, t2 = 0.0, t3 = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      t1 += W.w(a, p, b, p) * W.w(c, q, d, q);
      t2 += W.w(a, p, b, q) * W.w(c, p, d, q);
      t3 += W.w(a, p, b, q) * W.w(c, q, d, p);
    }
  return fourth_moment_unit(n) / 9.0 * (t1 + t2 + t3);
}

double sphere_moment_h_product_closed(const WeylForm& W, int k, int l) {
  const int n = W.n;
  const ContractionTensor ct = contraction(W);
  return sphere_volume(n) / (18.0 * n * (n + 2)) * ct.T(k, l);
}

double sphere_moment_h_pair_closed(const WeylForm& W, int a, int b, int c, int d) {
  const int n = W.n;
  double q = 0.0;
  for (int p = 0; p < n; ++p)
    for (int r = 0; r < n; ++r)
      q += W.w(a, p, b, r) * (W.w(c, p, d, r) + W.w(c, r, d, p));
  return sphere_volume(n) / (9.0 * n * (n + 2)) * q;
}

}  // namespace yamabe
