#pragma once

#include "yamabe/exact.hpp"

#include <map>
#include <mutex>
#include <optional>

namespace yamabe {

// Guards for the ambient dimension n.
void require_dim(int n, int min_n, const char* what);

// I_p^q = \int_0^\infty r^q (1+r)^{-p} dr = Beta(q+1, p-q-1).
// Exact for half-integer exponents; requires q >= 0 and p - q > 1 (the Beta
// domain, slightly wider than p > q + 2).
ExactScalar radial_integral_exact(Half p, Half q);
double radial_integral(Half p, Half q);

// Arbitrary-precision fallback for real exponents, via the Gamma function.
double radial_integral_numeric(double p, double q);

// omega_{n-1} = 2 pi^{n/2} / Gamma(n/2), the volume of S^{n-1}; n >= 2.
ExactScalar sphere_volume_exact(int n);
double sphere_volume(int n);

// K_n^{-n} = (omega_{n-1}/2) (n(n-2))^{n/2} I_n^{(n-2)/2}
//          = \int_{R^n} B_{1,0}^{2^*} dx = \int_{R^n} |grad B_{1,0}|^2 dx ; n >= 3.
ExactScalar sobolev_mass_exact(int n);
double sobolev_mass(int n);

// Lambda(n) = \int_{R^n} (1+|x|^2/(n(n-2)))^{-(n+2)/2} dx
//           = omega_{n-1} (n(n-2))^{n/2} / n ; n >= 3.
ExactScalar lambda_constant_exact(int n);
double lambda_constant(int n);

// c_n = (n-2) / (4(n-1)).
BigRat conformal_coefficient_exact(int n);
double conformal_coefficient(int n);

// a_n = n(n-2)^2 / (6(n-6)(n-4)) * K_n^{-n} ; requires n >= 7.
ExactScalar pohozaev_constant_exact(int n);
double pohozaev_constant(int n);

struct ConstantsBundle {
  int n = 0;
  double omega = 0.0;     // omega_{n-1}
  double kn_pow = 0.0;    // K_n^{-n}
  double lambda_n = 0.0;  // Lambda(n)
  double cn = 0.0;        // (n-2)/(4(n-1))
  std::optional<double> an;  // Pohozaev constant, defined for n >= 7

  ExactScalar omega_exact, kn_pow_exact, lambda_exact;
  BigRat cn_exact;
  std::optional<ExactScalar> an_exact;
};

ConstantsBundle constants_bundle(int n);

// Cache of radial integrals for one dimension, keyed by exponent pair.  Ratios
// to the base value I_n^{(n-2)/2} are exact rationals whenever the pair is an
// integer shift of the base exponents.
class RadialIntegralTable {
 public:
  explicit RadialIntegralTable(int n);

  int dim() const { return n_; }
  const ExactScalar& base() const { return base_; }

  ExactScalar value(Half p, Half q) const;
  // I_p^q / I_n^{(n-2)/2} when that quotient is a pure rational.
  std::optional<BigRat> ratio(Half p, Half q) const;

 private:
  int n_;
  ExactScalar base_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, ExactScalar> cache_;
};

}  // namespace yamabe
