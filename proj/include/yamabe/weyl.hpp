#pragma once

#include "yamabe/tensor.hpp"

#include <cstdint>
#include <optional>

namespace yamabe {

// Four-linear form with the algebraic symmetries of a Weyl curvature tensor:
//   W_ijkl = -W_jikl = -W_ijlk = W_klij,   sum_i W_ijil = 0,
//   W_ijkl + W_jkil + W_kijl = 0.
// Indices are 0-based internally (1-based in file formats and docs).
// Immutable after construction; n^4 dense storage is fine for n <= 25.
struct WeylForm {
  int n = 0;
  Rank4 w;
  // Set when built from the diagonal family; enables O(n^2) evaluation paths.
  std::optional<Mat> diagonal_source;

  double norm_sq() const;
};

struct WeylValidation {
  double antisym_first = 0.0;   // W_ijkl + W_jikl
  double antisym_second = 0.0;  // W_ijkl + W_ijlk
  double pair_sym = 0.0;        // W_ijkl - W_klij
  double bianchi = 0.0;         // W_ijkl + W_jkil + W_kijl
  double trace = 0.0;           // sum_i W_ijil
  double norm_sq = 0.0;
  bool accepted = false;
  bool trivial = false;  // accepted but identically zero

  double max_residual() const;
};

// Residuals are compared against 1e-12 * max(1, |W|).
WeylValidation validate_weyl(const WeylForm& W, double tol = 1e-12);

// W_ijkl = (A_ij/2)(d_ik d_jl - d_jk d_il) for a symmetric A with zero
// diagonal, zero row sums and nonzero off-diagonal entries.
WeylForm diagonal_weyl(const Mat& A);

// Canonical admissible matrix for the diagonal family: circulant in the index
// distance, unit weights except one corrective band that zeroes the row sums.
// n = 4 gives the off-diagonal pattern (1, -2, 1).
Mat canonical_diagonal_matrix(int n);

// Random form with all Weyl symmetries: symmetrize a random rank-4 array over
// the antisymmetry/pair/Bianchi group, then project out traces.
WeylForm random_weyl(int n, std::uint64_t seed);

// Projection of an arbitrary rank-4 array onto the Weyl-symmetric subspace.
WeylForm project_weyl(const Rank4& raw);

struct ContractionTensor {
  int n = 0;
  Mat T;  // T_kl = sum (W_kpqr + W_krqp)(W_lpqr + W_lrqp), trace = 3|W|^2
  double trace() const;
};

ContractionTensor contraction(const WeylForm& W);

// T_kl computed through the alternative route 3 sum_pqr W_kpqr W_lpqr.
Mat contraction_triple(const WeylForm& W);

// S2 matrix: sum_{ijl} (d_i h_jl)^2 = (1/9) x^T S x with
// S_pq = sum_{jil} (W_jilp + W_jpli)(W_jilq + W_jqli); equals T_pq.
Mat gradient_square_matrix(const WeylForm& W);

// h(x)_ij = (1/3) sum_pq W_ipjq x_p x_q: symmetric, trace-free,
// divergence-free, radially annihilated, harmonic, even in x.
Mat h_eval(const WeylForm& W, const Vec& x);

// Single entry h_ab(x).
double h_entry(const WeylForm& W, int a, int b, const Vec& x);

// D(i, j, l) = d_i h_jl(x) = (1/3) sum_p (W_jilp + W_jpli) x_p.
Rank3 h_gradient(const WeylForm& W, const Vec& x);

// grad of the single entry h_ab at x.
Vec h_entry_gradient(const WeylForm& W, int a, int b, const Vec& x);

// Constant second derivatives d^2_{ij} h_ab = (1/3)(W_aibj + W_ajbi).
double h_second_derivative(const WeylForm& W, int a, int b, int i, int j);

// sum_pq h_pq(x)^2.
double h_norm_sq(const WeylForm& W, const Vec& x);

struct CoercivityResult {
  double minimum = 0.0;     // min over |z| = 1 of sum h_pq(z)^2
  Vec minimizer;            // unit vector attaining the reported minimum
  double sweep_minimum = 0.0;  // best value seen in the random sweep alone
  // spread between the best descent result and the quartile-best one; a
  // consistency estimate for the multi-start refinement
  double consensus_gap = 0.0;
};

// Multi-start projected gradient descent on the sphere plus a dense random
// sweep.  Strictly positive minimum certifies the coercivity bound for this
// instance; global optimality is evidenced, not proven.
CoercivityResult coercivity_check(const WeylForm& W, int sweep_samples = 100000,
                                  int starts = 64, std::uint64_t seed = 1234);

}  // namespace yamabe
