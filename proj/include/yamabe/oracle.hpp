#pragma once

#include "yamabe/exact.hpp"
#include "yamabe/weyl.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace yamabe {

// Integrand over R^n with a decay hint: |f(x)| = O(|x|^-decay) at infinity.
// Convergence needs decay > n; enforced at construction.
struct Integrand {
  int n = 0;
  double decay = 0.0;
  bool smooth = true;
  std::function<double(const Vec&)> f;

  Integrand(int n_, double decay_, std::function<double(const Vec&)> f_, bool smooth_ = true);
};

struct OracleResult {
  double value = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples_used = 0;
  std::string method;  // "sphere_radial_product" or "monte_carlo"
};

// Product-rule integration over R^n: uniform random directions (normalized
// Gaussian vectors, counter-based per-batch streams) times a deterministic
// radial Gauss-Legendre rule after the compactification s = r/(1+r).
// The reported error combines a jackknife over direction batches with a
// two-resolution radial quadrature estimate.  Bit-identical for fixed
// (seed, budget) by ordered reduction over batch index.
OracleResult integrate_rn(const Integrand& f, std::uint64_t budget, std::uint64_t seed);

// Variant of integrate_rn drawing directions as randomly rotated orthonormal
// +-frames (2n directions per frame).  A frame averages any quadratic in the
// direction exactly, so integrands with low-degree angular dependence come
// out with near-zero direction variance; otherwise it matches integrate_rn.
OracleResult integrate_rn_frames(const Integrand& f, std::uint64_t budget,
                                 std::uint64_t seed);

// Variant whose direction rule is exact for angular polynomials of degree
// <= 5: randomly rotated points +-q_i with weight (4-n)/(2n(n+2)) and
// (+-q_i +- q_j)/sqrt(2) with weight 1/(n(n+2)), the weights summing to one.
// Integrands with quartic angular dependence lose their direction variance
// entirely; the randomized rotation keeps the estimate unbiased in general.
OracleResult integrate_rn_deg4(const Integrand& f, std::uint64_t budget,
                               std::uint64_t seed);

// Plain Monte Carlo average over S^{n-1} (times the sphere volume).
OracleResult integrate_sphere_mc(int n, const std::function<double(const Vec&)>& f,
                                 std::uint64_t budget, std::uint64_t seed);

// Exact moment of a monomial over S^{n-1}:
//   0 if any exponent is odd, else 2 prod Gamma((a_i+1)/2) / Gamma((n+|a|)/2).
ExactScalar integrate_sphere_poly_exact(const std::vector<int>& alpha);
double integrate_sphere_poly(const std::vector<int>& alpha);

// \int_{S^{n-1}} sum_p h_kp(x) h_pl(x) dsigma, evaluated through the exact
// fourth-moment formula; equals omega_{n-1}/(18 n (n+2)) T_kl.
double sphere_moment_h_product(const WeylForm& W, int k, int l);

// \int_{S^{n-1}} h_ab(x) h_cd(x) dsigma, through the fourth-moment formula;
// equals omega_{n-1}/(9 n (n+2)) sum_pq W_apbq (W_cpdq + W_cqdp).
double sphere_moment_h_pair(const WeylForm& W, int a, int b, int c, int d);

// The same two moments via their contraction closed forms (test route).
double sphere_moment_h_product_closed(const WeylForm& W, int k, int l);
double sphere_moment_h_pair_closed(const WeylForm& W, int a, int b, int c, int d);

// Gauss-Legendre nodes and weights on [0, 1]; cached per order.
void gauss_legendre_01(int m, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace yamabe
