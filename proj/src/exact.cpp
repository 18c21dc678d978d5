#include "yamabe/exact.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace yamabe {

namespace {

// Split k = s^2 * f with f square-free (trial division; kernels here are small).
void split_square(std::uint64_t k, std::uint64_t& square_root, std::uint64_t& square_free) {
  square_root = 1;
  square_free = 1;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    int e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square_root *= p;
    if (e % 2) square_free *= p;
  }
  square_free *= k;
}

}  // namespace

void ExactScalar::normalize() {
  if (coeff_ == 0) {
    pi_half_ = 0;
    kernel_ = 1;
    return;
  }
  if (kernel_ == 0) throw std::logic_error("ExactScalar: zero kernel");
  std::uint64_t s, f;
  split_square(kernel_, s, f);
  coeff_ *= BigRat(BigInt(s));
  kernel_ = f;
}

ExactScalar ExactScalar::sqrt_int(std::uint64_t k) {
  if (k == 0) return zero();
  return ExactScalar(BigRat(1), 0, k);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  if (is_zero() || o.is_zero()) return zero();
  ExactScalar r(coeff_ * o.coeff_, pi_half_ + o.pi_half_, 1);
  // sqrt(k1)*sqrt(k2) = sqrt(k1*k2), renormalized to square-free form
  ExactScalar kk(BigRat(1), 0, kernel_ * o.kernel_);
  r.coeff_ *= kk.coeff_;
  r.kernel_ = kk.kernel_;
  return r;
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
  if (is_zero()) return zero();
  // 1/sqrt(k) = sqrt(k)/k
  ExactScalar inv(BigRat(1) / (o.coeff_ * BigRat(BigInt(o.kernel_))), -o.pi_half_, o.kernel_);
  return *this * inv;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (pi_half_ != o.pi_half_ || kernel_ != o.kernel_)
    throw std::logic_error("ExactScalar: addition of incompatible transcendental parts");
  return ExactScalar(coeff_ + o.coeff_, pi_half_, kernel_);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

HighFloat pi_high() { return boost::math::constants::pi<HighFloat>(); }

HighFloat ExactScalar::to_high() const {
  if (is_zero()) return HighFloat(0);
  HighFloat num(BigInt(boost::multiprecision::numerator(coeff_)).str());
  HighFloat den(BigInt(boost::multiprecision::denominator(coeff_)).str());
  HighFloat v = num / den;
  if (pi_half_ != 0) {
    HighFloat p = pow(pi_high(), HighFloat(pi_half_) / 2);
    v *= p;
  }
  if (kernel_ != 1) v *= sqrt(HighFloat(kernel_));
  return v;
}

double ExactScalar::to_double() const { return static_cast<double>(to_high()); }

std::string ExactScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << coeff_;
  if (pi_half_ != 0) {
    os << " * pi^";
    if (pi_half_ % 2 == 0)
      os << pi_half_ / 2;
    else
      os << "(" << pi_half_ << "/2)";
  }
  if (kernel_ != 1) os << " * sqrt(" << kernel_ << ")";
  return os.str();
}

ExactScalar gamma_half(Half a) {
  if (a.twice <= 0) throw std::domain_error("gamma_half: argument must be positive");
  if (a.is_integer()) {
    BigInt f = 1;
    for (int k = 2; k < a.twice / 2; ++k) f *= k;
    return ExactScalar(BigRat(f));
  }
  // Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi)
  const int m = (a.twice - 1) / 2;
  BigInt num = 1;
  for (int k = 2; k <= 2 * m; ++k) num *= k;
  BigInt den = 1;
  for (int k = 2; k <= m; ++k) den *= k;
  BigInt four_m = BigInt(1) << (2 * m);
  return ExactScalar(BigRat(num) / BigRat(den * four_m), 1, 1);
}

ExactScalar beta_half(Half a, Half b) {
  return gamma_half(a) * gamma_half(b) / gamma_half(a + b);
}

}  // namespace yamabe
