#pragma once

#include "yamabe/tensor.hpp"
#include "yamabe/weyl.hpp"

namespace yamabe {

// Perturbed metric g = exp(eps * chi(|x-y|/r) * h(x-y)) with h built from a
// Weyl-type form.  Inside |x-y| <= r the exponent is exactly eps*h(x-y); the
// matrix exponential of a symmetric trace-free matrix has determinant one
// there.  Outside 2r the metric is Euclidean.
struct MetricField {
  int n = 0;
  double eps = 0.0;
  WeylForm weyl;
  double cutoff_radius = 1.0;
  Vec center;

  MetricField(WeylForm W, double eps_, double cutoff_radius_ = 1.0, Vec center_ = {});
};

// Smooth cutoff: 1 on [0,1], 0 on [2, infinity).
double cutoff_profile(double s);

Mat metric_eval(const MetricField& m, const Vec& x);
Mat metric_inverse_eval(const MetricField& m, const Vec& x);

struct CurvaturePack {
  Rank3 christoffel;  // Gamma^l_ij, index order (l, i, j)
  Rank4 riemann;      // R_{rho sigma mu nu}, lowered, pairs (rho sigma)(mu nu)
  Mat ricci;
  double scalar = 0.0;
  Rank4 weyl_part;    // Riemann minus its Ricci/scalar parts
};

// Christoffel symbols from fourth-order central differences of the metric,
// Riemann from stencil derivatives of the Christoffels, contractions with the
// inverse metric, and the standard conformal decomposition for the Weyl part.
CurvaturePack curvature(const MetricField& m, const Vec& x, double step = 1e-3);

// max entrywise |Weyl(g)(y)/eps + W| at the center.  Every term of the
// curvature beyond the linear one carries a factor h(0) = 0 or dh(0) = 0, so
// at the center the identity Weyl(g)(y) = -eps W is exact and this deviation
// sits at the finite-difference noise floor.
double weyl_linearization(const MetricField& m, double step = 1e-3);

// max entrywise |Weyl(g)(x)/eps + W| at a general point; the linearized
// curvature is the constant -eps W, so the deviation is O(eps |x-y|^2)/eps
// and halves under eps-halving.
double weyl_deviation_at(const MetricField& m, const Vec& x, double step = 1e-3);

// Remainder of the inverse-metric expansion at x:
//   max_ij | g^ij - (delta - eps h + (eps^2/2) h^2)_ij |  = O(eps^3 |x-y|^6).
double inverse_expansion_remainder(const MetricField& m, const Vec& x);

// Remainder of the Christoffel expansion at x:
//   max | Gamma^l_ij - (eps/2)(d_i h_jl + d_j h_il - d_l h_ij) | = O(eps^2 |x-y|^3).
double christoffel_expansion_remainder(const MetricField& m, const Vec& x,
                                       double step = 1e-3);

// Remainder of the scalar-curvature expansion at x:
//   | Scal + (eps^2/4) sum_ijl (d_i h_jl)^2 |  = O(eps^3 |x-y|^4).
double scalar_expansion_remainder(const MetricField& m, const Vec& x, double step = 1e-3);

}  // namespace yamabe
