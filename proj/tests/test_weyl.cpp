#include "doctest.h"

#include "yamabe/rng.hpp"
#include "yamabe/weyl.hpp"

#include <cmath>

using namespace yamabe;

TEST_CASE("zero form validates as trivial") {
  WeylForm W;
  W.n = 5;
  W.w = Rank4(5);
  const WeylValidation v = validate_weyl(W);
  CHECK(v.accepted);
  CHECK(v.trivial);
  CHECK(v.max_residual() == 0.0);
}

TEST_CASE("diagonal family is a valid form") {
  const Mat A = canonical_diagonal_matrix(4);
  CHECK(A(0, 1) == 1.0);
  CHECK(A(0, 2) == -2.0);
  CHECK(A(0, 3) == 1.0);
  const WeylForm W = diagonal_weyl(A);
  const WeylValidation v = validate_weyl(W);
  CHECK(v.accepted);
  CHECK_FALSE(v.trivial);
  CHECK(W.norm_sq() > 0.0);
}

TEST_CASE("diagonal family preconditions") {
  Mat zero(4);
  CHECK_THROWS_AS(diagonal_weyl(zero), std::invalid_argument);
  // n = 3: zero diagonal, zero row sums and symmetric force A = 0
  Mat bad(3);
  bad(0, 1) = bad(1, 0) = 1.0;
  bad(0, 2) = bad(2, 0) = -1.0;
  bad(1, 2) = bad(2, 1) = -1.0;
  CHECK_THROWS_AS(diagonal_weyl(bad), std::invalid_argument);
  CHECK_THROWS_AS(canonical_diagonal_matrix(3), std::invalid_argument);
  // canonical matrices stay admissible across dimensions
  for (int n = 4; n <= 24; ++n) CHECK_NOTHROW(diagonal_weyl(canonical_diagonal_matrix(n)));
}

TEST_CASE("injected violation is rejected") {
  WeylForm W = diagonal_weyl(canonical_diagonal_matrix(4));
  W.w(0, 1, 0, 1) += 1e-6;
  const WeylValidation v = validate_weyl(W);
  CHECK_FALSE(v.accepted);
  CHECK(v.pair_sym == doctest::Approx(1e-6).epsilon(1e-6));
}

TEST_CASE("random forms satisfy every symmetry") {
  for (int n : {5, 8, 11}) {
    const WeylForm W = random_weyl(n, 31 + n);
    const WeylValidation v = validate_weyl(W, 1e-13);
    CHECK(v.accepted);
    CHECK(W.norm_sq() > 1e-6);
  }
}

TEST_CASE("contraction identities") {
  const WeylForm W = random_weyl(7, 99);
  const ContractionTensor ct = contraction(W);
  const Mat t3 = contraction_triple(W);
  for (int k = 0; k < 7; ++k)
    for (int l = 0; l < 7; ++l)
      CHECK(ct.T(k, l) == doctest::Approx(t3(k, l)).epsilon(1e-12));
  CHECK(ct.trace() == doctest::Approx(3.0 * W.norm_sq()).epsilon(1e-13));
  // zero form contracts to zero
  WeylForm Z;
  Z.n = 5;
  Z.w = Rank4(5);
  const ContractionTensor cz = contraction(Z);
  for (double v : cz.T.a) CHECK(v == 0.0);
}

TEST_CASE("gradient square matrix equals the contraction tensor") {
  const WeylForm W = random_weyl(6, 123);
  const Mat S = gradient_square_matrix(W);
  const ContractionTensor ct = contraction(W);
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      CHECK(S(p, q) == doctest::Approx(ct.T(p, q)).epsilon(1e-12));
}

TEST_CASE("deformation field closed form for the diagonal family") {
  const int n = 6;
  const Mat A = canonical_diagonal_matrix(n);
  const WeylForm W = diagonal_weyl(A);
  // strip the fast-path marker to force the tensor contraction
  WeylForm generic = W;
  generic.diagonal_source.reset();
  CounterRng rng{55, 0, 0};
  Vec x(n);
  for (int rep = 0; rep < 10; ++rep) {
    for (int i = 0; i < n; ++i) x[i] = rng.next_symmetric();
    const Mat fast = h_eval(W, x);
    const Mat slow = h_eval(generic, x);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(fast(i, j) == doctest::Approx(slow(i, j)).epsilon(1e-13));
        const double expect =
            (i == j ? [&] {
              double s = 0.0;
              for (int p = 0; p < n; ++p) s += A(i, p) * x[p] * x[p];
              return s / 6.0;
            }()
                    : -A(i, j) * x[i] * x[j] / 6.0);
        CHECK(fast(i, j) == doctest::Approx(expect).epsilon(1e-13));
      }
    // gradient fast path against the generic contraction
    const Rank3 gfast = h_gradient(W, x);
    const Rank3 gslow = h_gradient(generic, x);
    for (size_t i = 0; i < gfast.a.size(); ++i)
      CHECK(gfast.a[i] == doctest::Approx(gslow.a[i]).epsilon(1e-13));
  }
}

TEST_CASE("field constraints and evenness") {
  const int n = 7;
  const WeylForm W = random_weyl(n, 8);
  CounterRng rng{77, 0, 0};
  Vec x(n), mx(n);
  for (int rep = 0; rep < 20; ++rep) {
    for (int i = 0; i < n; ++i) {
      x[i] = 2.0 * rng.next_symmetric();
      mx[i] = -x[i];
    }
    const Mat h = h_eval(W, x);
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += h(i, i);
    CHECK(std::fabs(tr) < 1e-12);
    const Rank3 dh = h_gradient(W, x);
    for (int i = 0; i < n; ++i) {
      double div = 0.0, radial = 0.0, lap = 0.0;
      for (int j = 0; j < n; ++j) {
        div += dh(j, j, i);
        radial += x[j] * h(i, j);
      }
      for (int p = 0; p < n; ++p) lap += h_second_derivative(W, i, (i + 1) % n, p, p);
      CHECK(std::fabs(div) < 1e-12);
      CHECK(std::fabs(radial) < 1e-12);
      CHECK(std::fabs(lap) < 1e-12);  // harmonicity: h is trace-free in its Hessian
    }
    const Mat hm = h_eval(W, mx);
    for (size_t i = 0; i < h.a.size(); ++i) CHECK(h.a[i] == hm.a[i]);
  }
}

TEST_CASE("gradient matches finite differences at second order") {
  const int n = 5;
  const WeylForm W = random_weyl(n, 4);
  Vec x(n, 0.3);
  x[2] = -0.7;
  const Rank3 dh = h_gradient(W, x);
  for (double step : {1e-3, 5e-4}) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      Vec xp = x, xm = x;
      xp[i] += step;
      xm[i] -= step;
      const Mat hp = h_eval(W, xp);
      const Mat hm = h_eval(W, xm);
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          const double fd = (hp(j, l) - hm(j, l)) / (2.0 * step);
          worst = std::max(worst, std::fabs(fd - dh(i, j, l)));
        }
    }
    // h is quadratic, so central differences are exact up to rounding
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("coercivity of the diagonal family") {
  const int n = 4;
  const Mat A = canonical_diagonal_matrix(n);
  const WeylForm W = diagonal_weyl(A);
  const CoercivityResult res = coercivity_check(W, 20000, 16, 5);
  CHECK(res.minimum > 0.0);
  // exhaustive fine grid on S^3 as the oracle
  double grid_min = 1e300;
  const int m = 24;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < 2 * m; ++c) {
        const double th1 = M_PI * (a + 0.5) / m;
        const double th2 = M_PI * (b + 0.5) / m;
        const double th3 = 2.0 * M_PI * c / (2 * m);
        const Vec z = {std::cos(th1), std::sin(th1) * std::cos(th2),
                       std::sin(th1) * std::sin(th2) * std::cos(th3),
                       std::sin(th1) * std::sin(th2) * std::sin(th3)};
        grid_min = std::min(grid_min, h_norm_sq(W, z));
      }
  CHECK(res.minimum <= grid_min + 1e-12);
  CHECK(res.minimum >= 0.5 * grid_min);  // refinement cannot overshoot the grid floor
  // axis direction: sum h_pq(e_1)^2 = (1/36) sum_i A_i1^2
  Vec e1(n, 0.0);
  e1[0] = 1.0;
  double expect = 0.0;
  for (int i = 0; i < n; ++i) expect += A(i, 0) * A(i, 0);
  expect /= 36.0;
  CHECK(h_norm_sq(W, e1) == doctest::Approx(expect).epsilon(1e-13));
  // zero form has a vanishing minimum
  WeylForm Z;
  Z.n = 4;
  Z.w = Rank4(4);
  CHECK(coercivity_check(Z, 1000, 4, 1).minimum == 0.0);
}
