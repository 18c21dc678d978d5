#include "doctest.h"

#include "yamabe/classify.hpp"
#include "yamabe/constants.hpp"

#include <cmath>

using namespace yamabe;

TEST_CASE("unperturbed regime rules") {
  GeometrySpec s;
  s.n = 8;
  CHECK(classify(s).verdict == RegimeVerdict::kCompactBelowMinimalLevel);
  s.n = 12;
  s.weyl_everywhere_nonzero = true;
  CHECK(classify(s).verdict == RegimeVerdict::kCompactBelowMinimalLevel);
  s.weyl_everywhere_nonzero = false;
  CHECK(classify(s).verdict == RegimeVerdict::kBlowupConstructible);
  s.lcf = true;
  CHECK(classify(s).verdict == RegimeVerdict::kCompactBelowMinimalLevel);
  // n = 10 splits on the threshold relation
  GeometrySpec ten;
  ten.n = 10;
  ten.u0_vs_threshold = ThresholdRelation::kAbove;
  CHECK(classify(ten).verdict == RegimeVerdict::kCompactBelowMinimalLevel);
  ten.u0_vs_threshold = ThresholdRelation::kEqualSomewhere;
  CHECK(classify(ten).verdict == RegimeVerdict::kBlowupNotExcluded);
  ten.u0_vs_threshold = ThresholdRelation::kUnknown;
  CHECK(classify(ten).verdict == RegimeVerdict::kBlowupNotExcluded);
}

TEST_CASE("perturbed regime rules") {
  GeometrySpec s;
  s.n = 12;
  s.lcf = true;
  s.perturbation_sign = PerturbationSign::kNonpos;
  CHECK(classify(s).verdict == RegimeVerdict::kBlowupConstructible);
  s.perturbation_sign = PerturbationSign::kNonneg;
  CHECK(classify(s).verdict == RegimeVerdict::kCompactBelowMinimalLevel);
  // small dimensions are compact regardless of the sign
  GeometrySpec low;
  low.n = 5;
  low.perturbation_sign = PerturbationSign::kMixed;
  CHECK(classify(low).verdict == RegimeVerdict::kCompactBelowMinimalLevel);
  // mixed sign with nonvanishing Weyl in high dimension is constructible
  GeometrySpec mix;
  mix.n = 15;
  mix.weyl_everywhere_nonzero = true;
  mix.perturbation_sign = PerturbationSign::kMixed;
  CHECK(classify(mix).verdict == RegimeVerdict::kBlowupConstructible);
  // nonneg but Weyl vanishing somewhere, not lcf: the rules stay silent
  GeometrySpec open;
  open.n = 15;
  open.perturbation_sign = PerturbationSign::kNonneg;
  CHECK(classify(open).verdict == RegimeVerdict::kBlowupNotExcluded);
}

TEST_CASE("inconsistent specs are rejected") {
  GeometrySpec s;
  s.n = 12;
  s.lcf = true;
  s.weyl_everywhere_nonzero = true;
  CHECK_THROWS_AS(classify(s), std::invalid_argument);
}

TEST_CASE("balance positivity and the n = 10 cancellation") {
  // conformally flat case: no obstruction term, positive for every mu
  for (double mu : {0.01, 0.5, 2.0, 50.0})
    for (int n : {7, 9, 10, 12})
      CHECK(balance({n, 1.0, 0.0, mu}) > 0.0);
  // n = 10 with u0 = (5/567)|W|^2 balances exactly for any mu
  const double wsq = 3.7;
  for (double mu : {0.2, 1.0, 4.0}) {
    const double r = balance({10, 5.0 / 567.0 * wsq, wsq, mu});
    CHECK(std::fabs(r) <= 1e-11 * wsq * mu * mu * pohozaev_constant(10));
  }
  // n = 11: mu^{5/2} loses to mu^2 near zero and wins for large mu,
  // so the balance has a unique positive root, found by bisection
  auto f = [](double mu) { return balance({11, 1.0, 1.0, mu}); };
  double lo = 1e-6, hi = 1e12;
  REQUIRE(f(lo) < 0.0);
  REQUIRE(f(hi) > 0.0);
  for (int it = 0; it < 200; ++it) {
    const double mid = std::sqrt(lo * hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  CHECK(hi / lo == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(f(0.5 * lo) * f(2.0 * hi) < 0.0);
  CHECK_THROWS_AS(balance({6, 1.0, 1.0, 1.0}), std::domain_error);
}

TEST_CASE("minimal energy gap") {
  const int n = 11;
  const double kn = sobolev_mass(n);
  const double ysphere = std::pow(kn, 2.0 / n);  // K_n^{-2}
  CHECK(minimal_energy_gap(n, ysphere) == doctest::Approx(2.0 * kn).epsilon(1e-12));
  CHECK(minimal_energy_gap(n, 1e-9) == doctest::Approx(kn).epsilon(1e-6));
  // sphere quotient: Y = |G|^{-2/n} K_n^{-2} gives (1/|G| + 1) K_n^{-n}
  const double order = 4.0;
  const double yq = std::pow(order, -2.0 / n) * ysphere;
  CHECK(minimal_energy_gap(n, yq) ==
        doctest::Approx((1.0 / order + 1.0) * kn).epsilon(1e-12));
  CHECK_THROWS_AS(minimal_energy_gap(n, -1.0), std::invalid_argument);
}

TEST_CASE("string round trips") {
  CHECK(perturbation_sign_from_string("mixed") == PerturbationSign::kMixed);
  CHECK(threshold_relation_from_string("equal") == ThresholdRelation::kEqualSomewhere);
  CHECK_THROWS_AS(perturbation_sign_from_string("sideways"), std::invalid_argument);
}
