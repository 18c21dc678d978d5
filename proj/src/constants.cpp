#include "yamabe/constants.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <sstream>

namespace yamabe {

void require_dim(int n, int min_n, const char* what) {
  if (n < min_n) {
    std::ostringstream os;
    os << what << ": requires n >= " << min_n << ", got n = " << n;
    throw std::domain_error(os.str());
  }
}

ExactScalar radial_integral_exact(Half p, Half q) {
  if (q.twice < 0) throw std::domain_error("radial_integral: q must be >= 0");
  if (p.twice - q.twice <= 2)
    throw std::domain_error("radial_integral: divergent, needs p - q > 1");
  return beta_half(q + Half::of_int(1), p - q - Half::of_int(1));
}

double radial_integral(Half p, Half q) { return radial_integral_exact(p, q).to_double(); }

double radial_integral_numeric(double p, double q) {
  if (q < 0.0) throw std::domain_error("radial_integral: q must be >= 0");
  if (p - q <= 1.0) throw std::domain_error("radial_integral: divergent, needs p - q > 1");
  using boost::math::tgamma;
  const HighFloat hp(p), hq(q);
  const HighFloat v = tgamma(hq + 1) * tgamma(hp - hq - 1) / tgamma(hp);
  return static_cast<double>(v);
}

ExactScalar sphere_volume_exact(int n) {
  require_dim(n, 2, "sphere_volume");
  return 2 * ExactScalar::pi_pow_half(n) / gamma_half(Half(n));
}

double sphere_volume(int n) { return sphere_volume_exact(n).to_double(); }

namespace {

// (n(n-2))^{n/2} as an exact scalar.
ExactScalar nu_pow_half_n(int n) {
  const std::uint64_t nu = static_cast<std::uint64_t>(n) * (n - 2);
  ExactScalar v = ExactScalar::one();
  for (int k = 0; k < n / 2; ++k) v = v * ExactScalar(static_cast<long long>(nu));
  if (n % 2) v = v * ExactScalar::sqrt_int(nu);
  return v;
}

}  // namespace

ExactScalar sobolev_mass_exact(int n) {
  require_dim(n, 3, "sobolev_mass");
  const ExactScalar base = radial_integral_exact(Half::of_int(n), Half(n - 2));
  return sphere_volume_exact(n) / ExactScalar(2) * nu_pow_half_n(n) * base;
}

double sobolev_mass(int n) { return sobolev_mass_exact(n).to_double(); }

ExactScalar lambda_constant_exact(int n) {
  require_dim(n, 3, "lambda_constant");
  // omega_{n-1} (n(n-2))^{n/2} / 2 * Beta(n/2, 1), with Beta(n/2, 1) = 2/n
  const ExactScalar beta = beta_half(Half(n), Half::of_int(1));
  return sphere_volume_exact(n) / ExactScalar(2) * nu_pow_half_n(n) * beta;
}

double lambda_constant(int n) { return lambda_constant_exact(n).to_double(); }

BigRat conformal_coefficient_exact(int n) {
  require_dim(n, 3, "conformal_coefficient");
  return BigRat(n - 2) / BigRat(4 * (n - 1));
}

double conformal_coefficient(int n) {
  return static_cast<double>(conformal_coefficient_exact(n));
}

ExactScalar pohozaev_constant_exact(int n) {
  require_dim(n, 7, "pohozaev_constant");
  const BigRat factor = BigRat(n) * (n - 2) * (n - 2) / (BigRat(6) * (n - 6) * (n - 4));
  return ExactScalar(factor) * sobolev_mass_exact(n);
}

double pohozaev_constant(int n) { return pohozaev_constant_exact(n).to_double(); }

ConstantsBundle constants_bundle(int n) {
  require_dim(n, 3, "constants_bundle");
  ConstantsBundle b;
  b.n = n;
  b.omega_exact = sphere_volume_exact(n);
  b.kn_pow_exact = sobolev_mass_exact(n);
  b.lambda_exact = lambda_constant_exact(n);
  b.cn_exact = conformal_coefficient_exact(n);
  b.omega = b.omega_exact.to_double();
  b.kn_pow = b.kn_pow_exact.to_double();
  b.lambda_n = b.lambda_exact.to_double();
  b.cn = static_cast<double>(b.cn_exact);
  if (n >= 7) {
    b.an_exact = pohozaev_constant_exact(n);
    b.an = b.an_exact->to_double();
  }
  return b;
}

RadialIntegralTable::RadialIntegralTable(int n) : n_(n) {
  require_dim(n, 3, "RadialIntegralTable");
  base_ = radial_integral_exact(Half::of_int(n), Half(n - 2));
}

ExactScalar RadialIntegralTable::value(Half p, Half q) const {
  const auto key = std::make_pair(p.twice, q.twice);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  ExactScalar v = radial_integral_exact(p, q);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(key, v);
  return v;
}

std::optional<BigRat> RadialIntegralTable::ratio(Half p, Half q) const {
  const ExactScalar r = value(p, q) / base_;
  if (!r.is_rational()) return std::nullopt;
  return r.coeff();
}

}  // namespace yamabe
