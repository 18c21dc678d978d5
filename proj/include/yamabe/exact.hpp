#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace yamabe {

using BigRat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using HighFloat = boost::multiprecision::cpp_bin_float_100;

// Half-integer, stored as twice its value.
struct Half {
  int twice = 0;

  Half() = default;
  explicit Half(int twice_) : twice(twice_) {}
  static Half of_int(int k) { return Half(2 * k); }

  bool is_integer() const { return twice % 2 == 0; }
  double value() const { return 0.5 * twice; }

  friend Half operator+(Half a, Half b) { return Half(a.twice + b.twice); }
  friend Half operator-(Half a, Half b) { return Half(a.twice - b.twice); }
  friend bool operator==(Half a, Half b) { return a.twice == b.twice; }
  friend bool operator<(Half a, Half b) { return a.twice < b.twice; }
};

// A positive-or-zero scalar of the form  coeff * pi^(pi_half/2) * sqrt(nu_kernel),
// with coeff an exact rational and nu_kernel a square-free positive integer.
// This covers every closed-form constant in the toolkit: Beta/Gamma values at
// half-integers, sphere volumes, and the (n(n-2))^(n/2) factors for odd n.
class ExactScalar {
 public:
  ExactScalar() : coeff_(0), pi_half_(0), kernel_(1) {}
  explicit ExactScalar(const BigRat& r) : coeff_(r), pi_half_(0), kernel_(1) { normalize(); }
  explicit ExactScalar(long long k) : coeff_(k), pi_half_(0), kernel_(1) {}
  ExactScalar(const BigRat& coeff, int pi_half, std::uint64_t kernel)
      : coeff_(coeff), pi_half_(pi_half), kernel_(kernel) {
    normalize();
  }

  static ExactScalar zero() { return ExactScalar(); }
  static ExactScalar one() { return ExactScalar(1); }
  static ExactScalar pi_pow_half(int pi_half) { return ExactScalar(BigRat(1), pi_half, 1); }
  // sqrt(k) for a positive integer k
  static ExactScalar sqrt_int(std::uint64_t k);

  const BigRat& coeff() const { return coeff_; }
  int pi_half() const { return pi_half_; }
  std::uint64_t kernel() const { return kernel_; }

  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const { return pi_half_ == 0 && kernel_ == 1; }

  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator/(const ExactScalar& o) const;
  // Addition requires matching transcendental parts; throws std::logic_error otherwise.
  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator-() const { return ExactScalar(-coeff_, pi_half_, kernel_); }

  bool operator==(const ExactScalar& o) const {
    return coeff_ == o.coeff_ && pi_half_ == o.pi_half_ && kernel_ == o.kernel_;
  }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  HighFloat to_high() const;
  double to_double() const;
  std::string to_string() const;

 private:
  void normalize();

  BigRat coeff_;
  int pi_half_;
  std::uint64_t kernel_;
};

inline ExactScalar operator*(long long k, const ExactScalar& x) {
  return ExactScalar(k) * x;
}

// Gamma(a) for a positive half-integer a: an exact rational times pi^{0 or 1/2}.
ExactScalar gamma_half(Half a);

// Beta(a, b) = Gamma(a)Gamma(b)/Gamma(a+b) for positive half-integers.
ExactScalar beta_half(Half a, Half b);

HighFloat pi_high();

}  // namespace yamabe
