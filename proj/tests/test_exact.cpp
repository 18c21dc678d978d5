#include "doctest.h"

#include "yamabe/constants.hpp"

#include <cmath>

using namespace yamabe;

TEST_CASE("gamma at half integers") {
  CHECK(gamma_half(Half::of_int(1)) == ExactScalar(1));
  CHECK(gamma_half(Half::of_int(5)) == ExactScalar(24));
  // Gamma(1/2) = sqrt(pi), Gamma(3/2) = sqrt(pi)/2
  CHECK(gamma_half(Half(1)) == ExactScalar::pi_pow_half(1));
  CHECK(gamma_half(Half(3)) == ExactScalar(BigRat(1) / 2, 1, 1));
  CHECK(gamma_half(Half(5)).to_double() == doctest::Approx(1.32934038817914).epsilon(1e-12));
}

TEST_CASE("radial integral basics") {
  // I_3^0 = 1/2 by the direct antiderivative
  CHECK(radial_integral_exact(Half::of_int(3), Half::of_int(0)) ==
        ExactScalar(BigRat(1) / 2));
  // recursion ratio I_{p+1}^q / I_p^q = (p-q-1)/p
  const Half p = Half::of_int(9), q = Half(5);  // q = 5/2
  const ExactScalar ratio = radial_integral_exact(p + Half::of_int(1), q) /
                            radial_integral_exact(p, q);
  CHECK(ratio == ExactScalar(BigRat(9 * 2 - 5 - 2, 2) / 9));  // (p-q-1)/p = (11/2)/9
  // n = 11 example: I_11^{11/2} / I_11^{9/2} = 11/9
  const ExactScalar r2 = radial_integral_exact(Half::of_int(11), Half(11)) /
                         radial_integral_exact(Half::of_int(11), Half(9));
  CHECK(r2 == ExactScalar(BigRat(11) / 9));
  CHECK_THROWS_AS(radial_integral_exact(Half::of_int(3), Half::of_int(2)),
                  std::domain_error);
  CHECK_THROWS_AS(radial_integral_exact(Half::of_int(3), Half(-1)), std::domain_error);
  // numeric fallback agrees with the exact path
  CHECK(radial_integral_numeric(11.0, 4.5) ==
        doctest::Approx(radial_integral(Half::of_int(11), Half(9))).epsilon(1e-14));
}

TEST_CASE("sphere volumes") {
  CHECK(sphere_volume(2) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
  CHECK(sphere_volume(3) == doctest::Approx(4.0 * M_PI).epsilon(1e-15));
  // omega_9 = pi^5/12
  CHECK(sphere_volume_exact(10) == ExactScalar(BigRat(1) / 12, 10, 1));
  CHECK(sphere_volume(10) == doctest::Approx(25.50164).epsilon(1e-6));
  CHECK_THROWS_AS(sphere_volume(1), std::domain_error);
}

TEST_CASE("bundle relations") {
  for (int n : {7, 10, 11, 16, 25}) {
    const ConstantsBundle b = constants_bundle(n);
    CHECK(b.omega > 0.0);
    CHECK(b.kn_pow > 0.0);
    CHECK(b.lambda_n > 0.0);
    CHECK(b.cn == doctest::Approx((n - 2.0) / (4.0 * (n - 1.0))).epsilon(1e-15));
    // sobolev_mass / (omega (n(n-2))^{n/2}) = I_n^{(n-2)/2} / 2 exactly
    const ExactScalar lhs = b.kn_pow_exact / b.omega_exact;
    ExactScalar nu_pow = ExactScalar::one();
    const long long nu = static_cast<long long>(n) * (n - 2);
    for (int k = 0; k < n / 2; ++k) nu_pow = nu_pow * ExactScalar(nu);
    if (n % 2) nu_pow = nu_pow * ExactScalar::sqrt_int(nu);
    const ExactScalar rhs =
        radial_integral_exact(Half::of_int(n), Half(n - 2)) / ExactScalar(2) * nu_pow;
    CHECK(lhs == rhs);
    // Beta reduction: Lambda(n) n / (omega (n(n-2))^{n/2}) = 1 exactly
    const ExactScalar lam = b.lambda_exact * ExactScalar(n) / (b.omega_exact * nu_pow);
    CHECK(lam == ExactScalar::one());
  }
  CHECK_THROWS_AS(pohozaev_constant(6), std::domain_error);
  CHECK_FALSE(constants_bundle(5).an.has_value());
}

TEST_CASE("pohozaev constant rational factors") {
  // a_11 = (297/70) K_11^{-11}, a_10 = (40/9) K_10^{-10}
  CHECK(pohozaev_constant_exact(11) / sobolev_mass_exact(11) ==
        ExactScalar(BigRat(297) / 70));
  CHECK(pohozaev_constant_exact(10) / sobolev_mass_exact(10) ==
        ExactScalar(BigRat(40) / 9));
  // 2 * 10^-4 * 8^-6 * a_10 = (5/567) omega_9, exactly and in double
  const ExactScalar lhs =
      ExactScalar(BigRat(2) / (BigRat(10000) * 262144)) * pohozaev_constant_exact(10);
  const ExactScalar rhs = ExactScalar(BigRat(5) / 567) * sphere_volume_exact(10);
  CHECK(lhs == rhs);
  CHECK(2e-4 * std::pow(8.0, -6.0) * pohozaev_constant(10) ==
        doctest::Approx(5.0 / 567.0 * sphere_volume(10)).epsilon(1e-13));
}

TEST_CASE("radial integral table ratios") {
  const RadialIntegralTable table(11);
  const auto r = table.ratio(Half::of_int(11), Half(11));
  REQUIRE(r.has_value());
  CHECK(*r == BigRat(11) / 9);
  // a pair that is not an integer shift of the base has a pi^{1/2} mismatch
  const auto off = table.ratio(Half(23), Half::of_int(4));
  CHECK_FALSE(off.has_value());
}

TEST_CASE("exact scalar arithmetic") {
  const ExactScalar a = ExactScalar::sqrt_int(99);   // 3 sqrt(11)
  const ExactScalar b = ExactScalar::sqrt_int(11);
  CHECK(a / b == ExactScalar(3));
  CHECK(a * a == ExactScalar(99));
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(ExactScalar::pi_pow_half(1) + ExactScalar(1), std::logic_error);
}
