#pragma once

#include "yamabe/oracle.hpp"
#include "yamabe/tensor.hpp"
#include "yamabe/weyl.hpp"

namespace yamabe {

// Scale/center parameters of the standard bubble
//   B_{t,z}(x) = t^{(n-2)/2} (t^2 + |x-z|^2/(n(n-2)))^{-(n-2)/2}.
// The sign convention throughout is the geometric Laplacian D = -div grad,
// under which D B = B^{2^*-1}.
struct BubbleParams {
  int n = 0;
  double t = 1.0;
  Vec z;
  double box_bound = 10.0;  // t must lie in [1/A, A]

  BubbleParams(int n_, double t_, Vec z_, double box_bound_ = 10.0);
};

double bubble_eval(const BubbleParams& p, const Vec& x);
Vec bubble_gradient(const BubbleParams& p, const Vec& x);
Mat bubble_hessian(const BubbleParams& p, const Vec& x);

// V_0(x) = (|x|^2/(n(n-2)) - 1) P^{-n/2},  V_j(x) = x_j P^{-n/2}
// with P = 1 + |x|^2/(n(n-2)); bounded kernel of the linearized operator.
double kernel_v(int n, int j, const Vec& x);

// Closed-form Euclidean Laplacian -sum_i d^2_ii V_j, derived independently of
// the linearized equation it is tested against.
double kernel_v_laplacian(int n, int j, const Vec& x);

// Rescaled/translated kernel elements:
//   Z_0 = (2/(n-2)) t dB/dt = t^{1-n/2} V_0((x-z)/t),
//   Z_j = -n t dB/dz_j   = -t^{1-n/2} V_j((x-z)/t), 1 <= j <= n.
double kernel_z(int j, const BubbleParams& p, const Vec& x);

// gradient of Z_j in x (used by the orthogonality oracle)
Vec kernel_z_gradient(int j, const BubbleParams& p, const Vec& x);

// Corrector closed form L_ab(x) = -(1/n) h_ab(x) P^{-n/2}.
double corrector_eval(const WeylForm& W, int a, int b, const Vec& x);
Vec corrector_gradient(const WeylForm& W, int a, int b, const Vec& x);

// D L_ab - (2^*-1) B_{1,0}^{2^*-2} L_ab + (2/(n(n-2))) h_ab(x) P^{-(n+2)/2},
// with D L from the closed-form Laplacian (harmonicity of h); contract: ~0.
double corrector_residual(const WeylForm& W, int a, int b, const Vec& x);

// Closed form (n+4)/(36(n+1)) K_n^{-n} sum_pq W_apbq (W_cpdq + W_cqdp).
double corrector_pairing(const WeylForm& W, int a, int b, int c, int d);

// The same quantity by quadrature of <grad L_ab, grad L_cd>, reported with the
// three-piece decomposition of the integrand (gradient-gradient, radial-radial
// and cross terms).
struct PairingOracle {
  OracleResult total;
  double piece_grad = 0.0;    // from grad h x grad h
  double piece_radial = 0.0;  // from the radial parts
  double piece_cross = 0.0;   // mixed terms
};
PairingOracle corrector_pairing_oracle(const WeylForm& W, int a, int b, int c, int d,
                                       std::uint64_t budget, std::uint64_t seed);

// \int sum_ij h_ij dB/dx_i dB/dx_j dx by the quadrature oracle; vanishes.
OracleResult annihilation_integral(const WeylForm& W, const BubbleParams& p,
                                   std::uint64_t budget, std::uint64_t seed);

// Orthogonality oracle: \int <grad L_ab, grad Z_j> dx for the unit bubble.
OracleResult corrector_kernel_orthogonality(const WeylForm& W, int a, int b, int j,
                                            std::uint64_t budget, std::uint64_t seed);

}  // namespace yamabe
