#include "doctest.h"

#include "yamabe/saddle.hpp"

#include <cmath>

using namespace yamabe;

namespace {

ModelData canonical_model(int n, double u0 = 1.0) {
  return ModelData(diagonal_weyl(canonical_diagonal_matrix(n)), u0);
}

}  // namespace

TEST_CASE("profile minimum closed form") {
  const int n = 11;
  const ModelData model = canonical_model(n);
  const EnergyCoefficients c = energy_coefficients(model);
  const ProfileMinimum pm = minimize_profile(model);
  CHECK(pm.t0 > 0.0);
  CHECK(pm.f_at_min < 0.0);
  CHECK(pm.hess_t > 0.0);
  CHECK(pm.t0 == doctest::Approx(std::pow(8.0 * c.c4 / (9.0 * c.clambda), 2.0))
                     .epsilon(1e-12));
  CHECK(pm.f_at_min ==
        doctest::Approx(-c.c4 * std::pow(pm.t0, 4.0) / 9.0).epsilon(1e-12));
  // dense grid search cannot beat the reported minimum
  double grid_best = 1e300;
  for (int i = 1; i <= 4000; ++i) {
    const double t = pm.t0 * (0.25 + 1.5 * i / 4000.0);
    grid_best = std::min(grid_best, profile_t(model, t));
  }
  CHECK(pm.f_at_min <= grid_best + 1e-9 * std::fabs(grid_best));
}

TEST_CASE("normalized profile reproduces the unit-coefficient example") {
  // with c4 = clambda = 1 and n = 11: t0 = (8/9)^2, F(t0,0) = -t0^4/9
  const double t0 = std::pow(8.0 / 9.0, 2.0);
  auto f = [](double t) { return -std::pow(t, 4.0) + std::pow(t, 4.5); };
  auto fp = [](double t) { return -4.0 * std::pow(t, 3.0) + 4.5 * std::pow(t, 3.5); };
  CHECK(fp(t0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f(t0) == doctest::Approx(-std::pow(t0, 4.0) / 9.0).epsilon(1e-12));
}

TEST_CASE("profile minimum scaling in u0x0") {
  const int n = 11;
  const ProfileMinimum a = minimize_profile(canonical_model(n, 1.0));
  const ProfileMinimum b = minimize_profile(canonical_model(n, 2.0));
  // doubling u0x0 scales t0 by 2^{-2/(n-10)}
  CHECK(b.t0 / a.t0 == doctest::Approx(std::pow(2.0, -2.0)).epsilon(1e-10));
}

TEST_CASE("profile minimum guards") {
  WeylForm Z;
  Z.n = 11;
  Z.w = Rank4(11);
  CHECK_THROWS_AS(minimize_profile(ModelData(Z, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(minimize_profile(canonical_model(10)), std::domain_error);
}

TEST_CASE("saddle certificate passes with the automatic shrink loop") {
  for (int n : {11, 14, 24}) {
    const ModelData model = canonical_model(n);
    const SaddleCertificate cert = certify_saddle_auto(model, 5, 30000);
    CHECK(cert.pass);
    CHECK(cert.f_at_min < 0.0);
    CHECK(cert.edge_min > cert.rim_max);
    CHECK(cert.box_max < 0.0);
    CHECK(cert.slope_left < 0.0);
    CHECK(cert.slope_right > 0.0);
    CHECK(cert.margin > 0.0);
  }
}

TEST_CASE("oversized rim radius fails the certificate") {
  const ModelData model = canonical_model(11);
  const SaddleCertificate cert = certify_saddle(model, 0.05, 0.9, 1024, 5, 20000);
  CHECK_FALSE(cert.pass);
  CHECK_FALSE(cert.violated.empty());
}

TEST_CASE("zero perturbation reproduces the saddle point") {
  const ModelData model = canonical_model(11);
  const SaddleCertificate cert = certify_saddle_auto(model, 5, 30000);
  REQUIRE(cert.pass);
  const CriticalPoint cp = locate_critical_point(model, cert, nullptr, 0.0, 77);
  CHECK(std::fabs(cp.t - cert.t0) <= 1e-8);
  for (double v : cp.z) CHECK(std::fabs(v) <= 1e-8);
  CHECK(cp.residual <= 1e-8);
  CHECK(cp.value < 0.0);
}

TEST_CASE("bounded perturbation moves the critical point by O(delta)") {
  const ModelData model = canonical_model(11);
  const SaddleCertificate cert = certify_saddle_auto(model, 5, 30000);
  REQUIRE(cert.pass);
  const double delta = cert.margin / 10.0;
  Perturbation pert = [delta](double t, const Vec& z) {
    double p = std::cos(t);
    for (double v : z) p *= std::cos(v);
    return delta * p;
  };
  const CriticalPoint cp = locate_critical_point(model, cert, pert, delta, 78);
  CHECK(cp.value < 0.0);
  CHECK(cp.residual <= 1e-8);
  // the t-shift is linear in delta with slope |sin t0| / hess_t
  const double predicted_shift = delta * std::fabs(std::sin(cert.t0)) / cert.hess_t;
  CHECK(std::fabs(cp.t - cert.t0) <= 3.0 * predicted_shift + 1e-9);
  for (double v : cp.z) CHECK(std::fabs(v) <= 1e-6);
  // a perturbation above the margin is rejected
  CHECK_THROWS_AS(locate_critical_point(model, cert, pert, 2.0 * cert.margin, 79),
                  std::invalid_argument);
}
