#include "doctest.h"

#include "yamabe/constants.hpp"
#include "yamabe/energy.hpp"

#include <cmath>

using namespace yamabe;

namespace {

ModelData canonical_model(int n, double u0 = 1.0) {
  return ModelData(diagonal_weyl(canonical_diagonal_matrix(n)), u0);
}

}  // namespace

TEST_CASE("coefficients and their exact relation") {
  const ModelData model = canonical_model(11);
  const EnergyCoefficients c = energy_coefficients(model);
  CHECK(c.c4 > 0.0);
  CHECK(c.clambda > 0.0);
  CHECK(c.fourth_order < 0.0);
  CHECK(c.f1_quartic + c.f3_quartic == doctest::Approx(c.fourth_order).epsilon(1e-15));
  // n = 11 rational factor: (n^2-8n-12)/(48n(n+1)) = 7/2112
  CHECK(-c.fourth_order / sobolev_mass(11) ==
        doctest::Approx(7.0 / 2112.0).epsilon(1e-14));
}

TEST_CASE("profile of the zero form is monotone increasing") {
  WeylForm Z;
  Z.n = 11;
  Z.w = Rank4(11);
  const ModelData model(Z, 1.0);
  const EnergyCoefficients c = energy_coefficients(model);
  CHECK(c.c4 == 0.0);
  for (double t : {0.3, 1.0, 2.0})
    CHECK(profile_t(model, t) ==
          doctest::Approx(c.clambda * std::pow(t, 4.5)).epsilon(1e-14));
  CHECK(profile_t(model, 1.5) > 0.0);
}

TEST_CASE("profile guards") {
  const ModelData model = canonical_model(11);
  CHECK_THROWS_AS(profile_t(model, -1.0), std::domain_error);
  const ModelData low(diagonal_weyl(canonical_diagonal_matrix(6)), 1.0);
  CHECK_THROWS_AS(profile_t(low, 1.0), std::domain_error);
}

TEST_CASE("hessian audit pieces cancel exactly") {
  const ModelData model = canonical_model(11);
  const HessianAudit audit = hessian_z(model, 0.9);
  for (double v : audit.total.a) CHECK(v == 0.0);
  for (int k = 0; k < 11; ++k)
    for (int l = 0; l < 11; ++l)
      CHECK(audit.f1_piece(k, l) == -audit.f2_piece(k, l));
  // zero form: all three pieces vanish identically
  WeylForm Z;
  Z.n = 11;
  Z.w = Rank4(11);
  const HessianAudit za = hessian_z(ModelData(Z, 1.0), 1.0);
  for (double v : za.f1_piece.a) CHECK(v == 0.0);
}

TEST_CASE("quartic coefficient in a fixed direction") {
  const ModelData model = canonical_model(11);
  Vec e(11, 0.0);
  e[0] = 1.0;
  const double q = quartic_z(model, e);
  const EnergyCoefficients c = energy_coefficients(model);
  CHECK(q == doctest::Approx(c.fourth_order * h_norm_sq(model.weyl, e)).epsilon(1e-15));
  CHECK(q < 0.0);
  Vec bad(11, 0.0);
  bad[0] = 0.5;
  CHECK_THROWS_AS(quartic_z(model, bad), std::invalid_argument);
  // zero form
  WeylForm Z;
  Z.n = 11;
  Z.w = Rank4(11);
  CHECK(quartic_z(ModelData(Z, 1.0), e) == 0.0);
}

TEST_CASE("assembled energy matches the closed profile at z = 0") {
  const ModelData model = canonical_model(11);
  for (double t : {0.8, 1.4}) {
    const AssembledEnergy a = f_assembled(model, t, Vec(11, 0.0), 60000, 21);
    const double closed = profile_t(model, t);
    CHECK(std::fabs(a.value - closed) <= 3.0 * a.standard_error);
    CHECK_FALSE(a.remainder_flagged);
  }
}

TEST_CASE("assembled energy is even in z within oracle noise") {
  const ModelData model = canonical_model(11);
  Vec z(11, 0.0);
  z[0] = 0.1;
  z[2] = -0.05;
  Vec mz(11);
  for (int i = 0; i < 11; ++i) mz[i] = -z[i];
  const AssembledEnergy a = f_assembled(model, 1.1, z, 80000, 22);
  const AssembledEnergy b = f_assembled(model, 1.1, mz, 80000, 22);
  CHECK(std::fabs(a.value - b.value) <=
        3.0 * std::sqrt(a.standard_error * a.standard_error +
                        b.standard_error * b.standard_error));
  // remainder flag fires for large |z|
  Vec big(11, 0.0);
  big[0] = 0.5;
  CHECK(f_assembled(model, 1.1, big, 60000, 23).remainder_flagged);
}

TEST_CASE("quartic fit recovers the fourth-order coefficient") {
  const ModelData model = canonical_model(11);
  Vec e(11, 0.0);
  e[0] = 0.6;
  e[1] = 0.8;
  const QuarticFit fit = quartic_fit(model, 1.1, e, 0.12, 800000, 24);
  CHECK(std::fabs(fit.fitted - fit.expected) <= 0.01 * std::fabs(fit.expected));
}

TEST_CASE("small-z Richardson difference follows the quartic model") {
  // the raw F(t,z) - F(t,0) difference hides the quartic term under the
  // cancelling s^2 pieces; the correlated Richardson probe over s and s/2
  // resolves it, matching the two-step extrapolation the model predicts
  const ModelData model = canonical_model(11);
  Vec e(11, 0.0);
  e[0] = 1.0;
  const QuarticFit fit = quartic_fit(model, 1.2, e, 0.05, 400000, 25);
  CHECK(std::fabs(fit.fitted - fit.expected) <= 0.05 * std::fabs(fit.expected));
}

TEST_CASE("mixed derivatives vanish under the audit") {
  const ModelData model = canonical_model(11);
  const MixedDerivativeAudit audit = mixed_derivative_audit(model, 1.2, 30000, 26);
  CHECK(audit.pass);
  // the zero form gives identically zero estimates
  WeylForm Z;
  Z.n = 11;
  Z.w = Rank4(11);
  const MixedDerivativeAudit za = mixed_derivative_audit(ModelData(Z, 1.0), 1.2, 5000, 27);
  CHECK(za.max_first == 0.0);
  CHECK(za.max_third == 0.0);
}
