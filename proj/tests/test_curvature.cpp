#include "doctest.h"

#include "yamabe/curvature.hpp"
#include "yamabe/rng.hpp"

#include <cmath>

using namespace yamabe;

TEST_CASE("cutoff profile") {
  CHECK(cutoff_profile(0.0) == 1.0);
  CHECK(cutoff_profile(0.99) == 1.0);
  CHECK(cutoff_profile(2.0) == 0.0);
  CHECK(cutoff_profile(2.5) == 0.0);
  CHECK(cutoff_profile(1.5) > 0.0);
  CHECK(cutoff_profile(1.5) < 1.0);
  // monotone decreasing across the transition band
  double prev = 1.0;
  for (double s = 1.0; s <= 2.0; s += 0.05) {
    const double v = cutoff_profile(s);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
}

TEST_CASE("metric at the center and unimodularity inside the cutoff") {
  const int n = 6;
  const WeylForm W = diagonal_weyl(canonical_diagonal_matrix(n));
  const MetricField m(W, 5e-2);
  const Mat g0 = metric_eval(m, Vec(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(g0(i, j) == (i == j ? 1.0 : 0.0));
  CounterRng rng{91, 0, 0};
  Vec x(n);
  for (int rep = 0; rep < 100; ++rep) {
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] = rng.next_symmetric();
      r2 += x[i] * x[i];
    }
    if (r2 > 1.0) {
      const double f = 0.999 / std::sqrt(r2);
      for (double& v : x) v *= f;
    }
    CHECK(mat_det(metric_eval(m, x)) == doctest::Approx(1.0).epsilon(1e-12));
    // inverse route: exp of the negated exponent
    const Mat gi = metric_inverse_eval(m, x);
    const Mat prod = mat_mul(metric_eval(m, x), gi);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(prod(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
  }
  // far outside the support the metric is Euclidean
  Vec far(n, 2.0);
  const Mat gf = metric_eval(m, far);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(gf(i, j) == (i == j ? 1.0 : 0.0));
}

TEST_CASE("flat metric has vanishing curvature") {
  const int n = 5;
  const WeylForm W = diagonal_weyl(canonical_diagonal_matrix(n));
  const MetricField m(W, 0.0);
  Vec x(n, 0.1);
  const CurvaturePack pack = curvature(m, x, 1e-3);
  for (double v : pack.riemann.a) CHECK(std::fabs(v) < 1e-11);
  CHECK(std::fabs(pack.scalar) < 1e-10);
  CHECK_THROWS_AS(curvature(m, x, -1.0), std::invalid_argument);
}

TEST_CASE("riemann symmetries and weyl tracelessness at discretization error") {
  const int n = 6;
  const WeylForm W = diagonal_weyl(canonical_diagonal_matrix(n));
  const MetricField m(W, 1e-2);
  Vec x(n, 0.0);
  x[0] = 0.25;
  x[1] = -0.15;
  const CurvaturePack pack = curvature(m, x, 1e-3);
  double scale = 0.0;
  for (double v : pack.riemann.a) scale = std::max(scale, std::fabs(v));
  const double tol = 1e-6 * std::max(scale, 1e-12);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          CHECK(std::fabs(pack.riemann(i, j, k, l) + pack.riemann(j, i, k, l)) <= tol);
          CHECK(std::fabs(pack.riemann(i, j, k, l) + pack.riemann(i, j, l, k)) <= tol);
          CHECK(std::fabs(pack.riemann(i, j, k, l) - pack.riemann(k, l, i, j)) <= tol);
        }
  // tracelessness holds against the inverse metric, not the flat trace
  const Mat ginv = metric_inverse_eval(m, x);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      double tr = 0.0;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) tr += ginv(i, k) * pack.weyl_part(i, j, k, l);
      CHECK(std::fabs(tr) <= 10.0 * tol);
    }
  // ricci is symmetric
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(pack.ricci(i, j) == doctest::Approx(pack.ricci(j, i)).epsilon(1e-8));
}

TEST_CASE("inverse metric expansion remainder scales like eps^3") {
  const int n = 6;
  const WeylForm W = diagonal_weyl(canonical_diagonal_matrix(n));
  Vec x(n, 0.0);
  x[0] = 0.3;
  const double r1 = inverse_expansion_remainder(MetricField(W, 2e-2), x);
  const double r2 = inverse_expansion_remainder(MetricField(W, 1e-2), x);
  CHECK(r1 / r2 == doctest::Approx(8.0).epsilon(0.35));
}

TEST_CASE("christoffel expansion remainder scales like eps^2") {
  const int n = 6;
  const WeylForm W = diagonal_weyl(canonical_diagonal_matrix(n));
  Vec x(n, 0.0);
  x[0] = 0.2;
  x[2] = 0.2;
  const double r1 = christoffel_expansion_remainder(MetricField(W, 2e-2), x);
  const double r2 = christoffel_expansion_remainder(MetricField(W, 1e-2), x);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.35));
}

TEST_CASE("scalar curvature expansion and weyl deviation orders") {
  const int n = 6;
  const WeylForm W = diagonal_weyl(canonical_diagonal_matrix(n));
  Vec x(n, 0.0);
  x[0] = 0.3;
  const double step = 0.03;
  const double eps1 = 1e-2, eps2 = 5e-3;
  const double s1 =
      scalar_expansion_remainder(MetricField(W, eps1), x, step) / (eps1 * eps1);
  const double s2 =
      scalar_expansion_remainder(MetricField(W, eps2), x, step) / (eps2 * eps2);
  CHECK(s1 / s2 == doctest::Approx(2.0).epsilon(0.5));
  // away from the center the deviation from the constant linearization is O(eps)
  const double w1 = weyl_deviation_at(MetricField(W, eps1), x, step);
  const double w2 = weyl_deviation_at(MetricField(W, eps2), x, step);
  CHECK(w1 / w2 == doctest::Approx(2.0).epsilon(0.5));
}

TEST_CASE("weyl linearization is exact at the center") {
  // every nonlinear curvature term carries h(0) = 0 or dh(0) = 0, so the
  // center value -eps W holds to all orders; only stencil noise remains
  const int n = 6;
  const WeylForm W = diagonal_weyl(canonical_diagonal_matrix(n));
  CHECK(weyl_linearization(MetricField(W, 1e-2), 0.03) < 1e-8);
  CHECK(weyl_linearization(MetricField(W, 0.0)) < 1e-10);
}
