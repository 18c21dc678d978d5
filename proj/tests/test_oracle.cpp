#include "doctest.h"

#include "yamabe/constants.hpp"
#include "yamabe/oracle.hpp"
#include "yamabe/rng.hpp"

#include <cmath>

using namespace yamabe;

TEST_CASE("gauss legendre integrates polynomials") {
  std::vector<double> s, w;
  gauss_legendre_01(16, s, w);
  double acc = 0.0;
  for (int i = 0; i < 16; ++i) acc += w[i] * s[i] * s[i] * s[i];
  CHECK(acc == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("integrate_rn hits the bubble mass") {
  const int n = 7;
  const double nu = n * (n - 2.0);
  Integrand f(n, 2.0 * n, [nu, n](const Vec& x) {
    return std::pow(1.0 + norm2_sq(x) / nu, -n);  // B_{1,0}^{2^*}
  });
  const OracleResult r = integrate_rn(f, 200000, 42);
  CHECK(std::fabs(r.value - sobolev_mass(n)) <= 3.0 * r.standard_error);
  CHECK(std::fabs(r.value - sobolev_mass(n)) <= 1e-3 * sobolev_mass(n));
}

TEST_CASE("integrate_rn hits the scaling constant") {
  const int n = 9;
  const double nu = n * (n - 2.0);
  Integrand f(n, n + 2.0, [nu, n](const Vec& x) {
    return std::pow(1.0 + norm2_sq(x) / nu, -0.5 * (n + 2));
  });
  const OracleResult r = integrate_rn(f, 200000, 7);
  CHECK(std::fabs(r.value - lambda_constant(n)) <= 3.0 * r.standard_error);
}

TEST_CASE("odd integrand averages to zero") {
  const int n = 5;
  Integrand f(n, 2.0 * n - 1.0, [n](const Vec& x) {
    return x[0] * std::pow(1.0 + norm2_sq(x), -static_cast<double>(n));
  });
  const OracleResult r = integrate_rn(f, 100000, 3);
  CHECK(std::fabs(r.value) <= 3.0 * r.standard_error);
}

TEST_CASE("determinism for fixed seed and budget") {
  const int n = 6;
  // direction-dependent integrand so distinct seeds give distinct values
  Integrand f(n, 2.0 * n, [n](const Vec& x) {
    return (1.0 + x[0] * x[1]) * std::pow(1.0 + norm2_sq(x), -static_cast<double>(n));
  });
  const OracleResult a = integrate_rn(f, 50000, 11);
  const OracleResult b = integrate_rn(f, 50000, 11);
  CHECK(a.value == b.value);
  CHECK(a.standard_error == b.standard_error);
  const OracleResult c = integrate_rn(f, 50000, 12);
  CHECK(a.value != c.value);
}

TEST_CASE("standard error calibration over 50 seeds") {
  const int n = 5;
  const double nu = n * (n - 2.0);
  Integrand f(n, 2.0 * n, [nu, n](const Vec& x) {
    const double p = 1.0 + norm2_sq(x) / nu;
    return (x[0] * x[0] + 0.3 * x[1] * x[2]) * std::pow(p, -n - 1.0);
  });
  // exact reference with a huge budget
  const OracleResult ref = integrate_rn(f, 4000000, 999);
  int exceed = 0;
  for (int s = 0; s < 50; ++s) {
    const OracleResult r = integrate_rn(f, 20000, 1000 + s);
    if (std::fabs(r.value - ref.value) > 3.0 * r.standard_error) ++exceed;
  }
  CHECK(exceed <= 2);
}

TEST_CASE("budget guard") {
  Integrand f(4, 10.0, [](const Vec&) { return 0.0; });
  CHECK_THROWS_AS(integrate_rn(f, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(Integrand(4, 3.0, [](const Vec&) { return 0.0; }), std::domain_error);
}

TEST_CASE("exact sphere moments") {
  const int n = 9;
  std::vector<int> alpha(n, 0);
  alpha[0] = 2;
  CHECK(integrate_sphere_poly(alpha) ==
        doctest::Approx(sphere_volume(n) / n).epsilon(1e-14));
  alpha[0] = 1;
  alpha[1] = 1;
  CHECK(integrate_sphere_poly(alpha) == 0.0);
  alpha[0] = 2;
  alpha[1] = 2;
  CHECK(integrate_sphere_poly(alpha) ==
        doctest::Approx(sphere_volume(n) / (n * (n + 2.0))).epsilon(1e-14));
  alpha[1] = 0;
  alpha[0] = 4;
  CHECK(integrate_sphere_poly(alpha) ==
        doctest::Approx(3.0 * sphere_volume(n) / (n * (n + 2.0))).epsilon(1e-14));
}

TEST_CASE("sphere moments match monte carlo for random even multi-indices") {
  const int n = 6;
  CounterRng rng{2718, 0, 0};
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<int> alpha(n, 0);
    int degree = 0;
    for (int i = 0; i < n && degree < 6; ++i) {
      const int a = static_cast<int>(rng.next_double() * 3.0) * 2;  // 0, 2 or 4
      alpha[i] = std::min(a, 6 - degree);
      degree += alpha[i];
    }
    const double exact = integrate_sphere_poly(alpha);
    const OracleResult mc = integrate_sphere_mc(
        n,
        [&alpha](const Vec& x) {
          double v = 1.0;
          for (size_t i = 0; i < alpha.size(); ++i)
            for (int k = 0; k < alpha[i]; ++k) v *= x[i];
          return v;
        },
        60000, 5000 + rep);
    CHECK(std::fabs(mc.value - exact) <=
          3.5 * mc.standard_error + 1e-12);  // slight slack for near-zero moments
  }
}

TEST_CASE("moment formulas for the deformation field") {
  const int n = 8;
  const WeylForm W = diagonal_weyl(canonical_diagonal_matrix(n));
  const ContractionTensor ct = contraction(W);
  for (int k : {0, 2})
    for (int l : {0, 3}) {
      const double via_moments = sphere_moment_h_product(W, k, l);
      const double closed = sphere_volume(n) / (18.0 * n * (n + 2.0)) * ct.T(k, l);
      CHECK(via_moments == doctest::Approx(closed).epsilon(1e-12));
    }
  // the trace of the product moment is omega/(6n(n+2)) |W|^2
  double tr = 0.0;
  for (int k = 0; k < n; ++k) tr += sphere_moment_h_product(W, k, k);
  CHECK(tr == doctest::Approx(sphere_volume(n) / (6.0 * n * (n + 2.0)) * W.norm_sq())
                  .epsilon(1e-12));
  // pair moment contracted against the product moment relation
  const double pair = sphere_moment_h_pair(W, 0, 1, 0, 1);
  const double pair_closed = sphere_moment_h_pair_closed(W, 0, 1, 0, 1);
  CHECK(pair == doctest::Approx(pair_closed).epsilon(1e-12));
}

TEST_CASE("contraction factor-two relation behind the product moment") {
  // sum_{p,i,j} W_kpij (W_lpij + W_ljip) = T_kl / 2, so summing the pair
  // moment over a matched index reproduces the product moment
  const int n = 7;
  const WeylForm W = random_weyl(n, 2024);
  const ContractionTensor ct = contraction(W);
  for (int k : {0, 3})
    for (int l : {0, 5}) {
      double s = 0.0;
      for (int p = 0; p < n; ++p)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            s += W.w(k, p, i, j) * (W.w(l, p, i, j) + W.w(l, j, i, p));
      CHECK(s == doctest::Approx(0.5 * ct.T(k, l)).epsilon(1e-12));
      double pair_sum = 0.0;
      for (int p = 0; p < n; ++p)
        pair_sum += sphere_moment_h_pair_closed(W, k, p, p, l);
      CHECK(pair_sum ==
            doctest::Approx(sphere_moment_h_product_closed(W, k, l)).epsilon(1e-12));
    }
  // the zero form sends both moments to zero
  WeylForm Z;
  Z.n = n;
  Z.w = Rank4(n);
  CHECK(sphere_moment_h_product(Z, 0, 1) == 0.0);
  CHECK(sphere_moment_h_pair(Z, 0, 1, 2, 3) == 0.0);
}

TEST_CASE("bubble mass equals the gradient energy at n = 11") {
  const int n = 11;
  const double nu = n * (n - 2.0);
  const double kn = sobolev_mass(n);
  Integrand mass(n, 2.0 * n, [nu, n](const Vec& x) {
    return std::pow(1.0 + norm2_sq(x) / nu, -n);
  });
  Integrand grad_energy(n, 2.0 * n - 2.0, [nu, n](const Vec& x) {
    // |grad B_{1,0}|^2 = (|x|/n)^2 (1+|x|^2/nu)^{-n}
    return norm2_sq(x) / (n * double(n)) * std::pow(1.0 + norm2_sq(x) / nu, -n);
  });
  const OracleResult rm = integrate_rn(mass, 150000, 5);
  const OracleResult rg = integrate_rn(grad_energy, 150000, 6);
  CHECK(std::fabs(rm.value - kn) <= 3.0 * rm.standard_error);
  CHECK(std::fabs(rg.value - kn) <= 3.0 * rg.standard_error);
  // lambda constant quadrature at the same dimension
  Integrand lam(n, n + 2.0, [nu, n](const Vec& x) {
    return std::pow(1.0 + norm2_sq(x) / nu, -0.5 * (n + 2));
  });
  const OracleResult rl = integrate_rn(lam, 150000, 7);
  CHECK(std::fabs(rl.value - lambda_constant(n)) <= 3.0 * rl.standard_error);
}
