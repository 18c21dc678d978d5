#pragma once

#include "yamabe/energy.hpp"

#include <functional>
#include <string>

namespace yamabe {

struct ProfileMinimum {
  double t0 = 0.0;
  double f_at_min = 0.0;
  double hess_t = 0.0;
};

// Unique interior minimum of t -> F(t,0) for n >= 11 and a nonzero form:
//   t0 = (8 c4 / ((n-2) clambda))^{2/(n-10)}, refined by safeguarded Newton.
// Verifies F(t0,0) = -c4 t0^4 (n-10)/(n-2) and d^2F/dt^2 > 0 before returning.
ProfileMinimum minimize_profile(const ModelData& model);

struct SaddleCertificate {
  double t0 = 0.0;
  double f_at_min = 0.0;
  double hess_t = 0.0;
  double eta = 0.0;
  double eps_box = 0.0;
  double edge_min = 0.0;      // min of F(t,0) over [t0-eta, t0+eta]
  double rim_max = 0.0;       // max of F over the rim |z| = eps_box
  double box_max = 0.0;       // max of F over the closed box
  double slope_left = 0.0;    // dF/dt at t0-eta (needs < 0)
  double slope_right = 0.0;   // dF/dt at t0+eta (needs > 0)
  double margin = 0.0;        // smallest margin, bound on admissible perturbations
  double sampling_gap = 0.0;  // rim refinement gap estimate
  double spot_check_error = 0.0;  // worst |f_assembled - model| over spot checks
  double spot_check_bound = 0.0;
  bool remainder_ok = false;
  bool pass = false;
  std::string violated;  // first failed condition, empty when pass
};

// Certifies the saddle geometry of F on [t0-eta, t0+eta] x B(0, eps_box):
// profile edge from the closed form, rim from the quartic model with dense
// direction sampling plus descent refinement, spot checks by f_assembled.
SaddleCertificate certify_saddle(const ModelData& model, double eta, double eps_box,
                                 int rim_samples = 4096, std::uint64_t seed = 2024,
                                 std::uint64_t oracle_budget = 60000);

// Halves (eta, eps_box) from (t0/4, 0.3) until the certificate passes.
SaddleCertificate certify_saddle_auto(const ModelData& model, std::uint64_t seed = 2024,
                                      std::uint64_t oracle_budget = 60000);

using Perturbation = std::function<double(double t, const Vec& z)>;

struct CriticalPoint {
  double t = 0.0;
  Vec z;
  double residual = 0.0;  // gradient norm of F/|F(t0,0)| at the returned point
  double value = 0.0;     // perturbed F at the critical point (must be < 0)
};

// Critical point of F + perturbation inside the certified box by multi-start
// damped Newton on the gradient.  The perturbation must have sup-norm delta
// below the certificate margin.  Pass a null perturbation for the pure model.
CriticalPoint locate_critical_point(const ModelData& model, const SaddleCertificate& cert,
                                    const Perturbation& perturbation, double delta,
                                    std::uint64_t seed = 99);

}  // namespace yamabe
