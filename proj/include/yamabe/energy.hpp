#pragma once

#include "yamabe/oracle.hpp"
#include "yamabe/weyl.hpp"

namespace yamabe {

// Inputs of the reduced-energy landscape: dimension, Weyl-type form and the
// value u0x0 > 0 of the background minimizer at the blow-up point.
struct ModelData {
  int n = 0;
  WeylForm weyl;
  double u0x0 = 1.0;
  Mat T;               // contraction tensor of the form
  double trace_T = 0.0;

  ModelData(WeylForm W, double u0);
};

struct EnergyCoefficients {
  double c4 = 0.0;            // n(n-2)^2/(72(n-4)(n-6)) K_n^{-n} sum_k T_kk
  double clambda = 0.0;       // Lambda(n) u0x0
  double fourth_order = 0.0;  // -(n^2-8n-12)/(48n(n+1)) K_n^{-n}
  double f1_quartic = 0.0;    // K_n^{-n}/(4n)
  double f3_quartic = 0.0;    // -(n+4)/(48(n+1)) K_n^{-n}
  double hess2_scale = 0.0;   // (1/36)(n-2)/(n-4) K_n^{-n}; z-Hessian piece is t^2 * this * T_kl
};

EnergyCoefficients energy_coefficients(const ModelData& model);

// F(t,0) = -c4 t^4 + clambda t^{(n-2)/2}; requires t > 0 and n >= 7.
double profile_t(const ModelData& model, double t);
double profile_t_derivative(const ModelData& model, double t);
double profile_t_second_derivative(const ModelData& model, double t);

// The z-Hessian of F at (t,0) vanishes identically: the two audit pieces
// cancel exactly.  Returned for inspection.
struct HessianAudit {
  Mat f1_piece;  //  (t^2/36)((n-2)/(n-4)) K_n^{-n} T_kl
  Mat f2_piece;  // -(t^2/36)((n-2)/(n-4)) K_n^{-n} T_kl
  Mat total;     // exactly zero
};
HessianAudit hessian_z(const ModelData& model, double t);

// Coefficient of s^4 in F(t, s e) - F(t, 0): fourth_order * sum_pq h_pq(e)^2.
// Independent of t; requires |e| = 1.
double quartic_z(const ModelData& model, const Vec& e);

struct AssembledEnergy {
  double value = 0.0;
  double standard_error = 0.0;
  bool remainder_flagged = false;  // |z| too large for the quartic closure of F3
  double f1 = 0.0, f2 = 0.0, f3_model = 0.0, lambda_term = 0.0;
};

// F1 + F2 by quadrature of their defining integrands, F3 through its quartic
// model (remainder flagged for |z| > 0.3), plus the scaling term.
AssembledEnergy f_assembled(const ModelData& model, double t, const Vec& z,
                            std::uint64_t budget, std::uint64_t seed);

// Quartic-coefficient probe along a unit direction e: a Richardson combination
// of f_assembled values at z in {0, +-(s/2)e, +-s e} evaluated in a single
// correlated quadrature pass, which cancels the s^2 content per direction.
struct QuarticFit {
  double fitted = 0.0;     // estimated s^4 coefficient
  double expected = 0.0;   // quartic_z(model, e)
  double standard_error = 0.0;
};
QuarticFit quartic_fit(const ModelData& model, double t, const Vec& e, double s,
                       std::uint64_t budget, std::uint64_t seed);

struct MixedDerivativeAudit {
  double max_first = 0.0;   // max_i |d/dt d/dz_i F| estimate at z=0
  double max_third = 0.0;   // max over sampled (i,j,k) of |d/dt d^3 F|
  double noise_floor_first = 0.0;
  double noise_floor_third = 0.0;
  bool pass = false;
};

// Finite differences of f_assembled with a shared seed; the mixed t/z
// derivatives at z = 0 vanish by evenness, so estimates stay below the floor.
MixedDerivativeAudit mixed_derivative_audit(const ModelData& model, double t,
                                            std::uint64_t budget, std::uint64_t seed);

}  // namespace yamabe
