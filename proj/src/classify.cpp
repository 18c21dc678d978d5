#include "yamabe/classify.hpp"

#include "yamabe/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace yamabe {

const char* to_string(RegimeVerdict v) {
  switch (v) {
    case RegimeVerdict::kCompactBelowMinimalLevel: return "compact_below_minimal_level";
    case RegimeVerdict::kBlowupNotExcluded: return "blowup_not_excluded";
    case RegimeVerdict::kBlowupConstructible: return "blowup_constructible";
  }
  return "?";
}

const char* to_string(ThresholdRelation r) {
  switch (r) {
    case ThresholdRelation::kAbove: return "above";
    case ThresholdRelation::kBelow: return "below";
    case ThresholdRelation::kEqualSomewhere: return "equal_somewhere";
    case ThresholdRelation::kUnknown: return "unknown";
  }
  return "?";
}

const char* to_string(PerturbationSign s) {
  switch (s) {
    case PerturbationSign::kNone: return "none";
    case PerturbationSign::kNonneg: return "nonneg";
    case PerturbationSign::kNonpos: return "nonpos";
    case PerturbationSign::kMixed: return "mixed";
  }
  return "?";
}

ThresholdRelation threshold_relation_from_string(const std::string& s) {
  if (s == "above") return ThresholdRelation::kAbove;
  if (s == "below") return ThresholdRelation::kBelow;
  if (s == "equal" || s == "equal_somewhere") return ThresholdRelation::kEqualSomewhere;
  if (s == "unknown") return ThresholdRelation::kUnknown;
  throw std::invalid_argument("unknown threshold relation: " + s);
}

PerturbationSign perturbation_sign_from_string(const std::string& s) {
  if (s == "none") return PerturbationSign::kNone;
  if (s == "nonneg") return PerturbationSign::kNonneg;
  if (s == "nonpos") return PerturbationSign::kNonpos;
  if (s == "mixed") return PerturbationSign::kMixed;
  throw std::invalid_argument("unknown perturbation sign: " + s);
}

ClassifiedRegime classify(const GeometrySpec& spec) {
  const int n = spec.n;
  require_dim(n, 3, "classify");
  if (spec.lcf && spec.weyl_everywhere_nonzero)
    throw std::invalid_argument(
        "classify: locally conformally flat metrics have vanishing Weyl tensor");

  // lcf kills the Weyl term, so u0 > 0 sits above the zero threshold everywhere
  ThresholdRelation rel = spec.u0_vs_threshold;
  if (spec.lcf) rel = ThresholdRelation::kAbove;

  const PerturbationSign s = spec.perturbation_sign;
  const bool h_nonneg = s == PerturbationSign::kNonneg;
  const bool h_nonpos = s == PerturbationSign::kNonpos;
  const bool h_min_neg = s == PerturbationSign::kNonpos || s == PerturbationSign::kMixed;
  const bool h_max_pos = s == PerturbationSign::kNonneg || s == PerturbationSign::kMixed;

  if (s == PerturbationSign::kNone) {
    if (spec.lcf)
      return {RegimeVerdict::kCompactBelowMinimalLevel, "locally conformally flat"};
    if (n <= 9) return {RegimeVerdict::kCompactBelowMinimalLevel, "n <= 9"};
    if (n == 10) {
      if (rel == ThresholdRelation::kAbove || rel == ThresholdRelation::kBelow)
        return {RegimeVerdict::kCompactBelowMinimalLevel,
                "n = 10 and u0 avoids (5/567)|Weyl|^2 everywhere"};
      return {RegimeVerdict::kBlowupNotExcluded,
              "n = 10 with u0 possibly meeting (5/567)|Weyl|^2"};
    }
    if (spec.weyl_everywhere_nonzero)
      return {RegimeVerdict::kCompactBelowMinimalLevel,
              "n >= 11 and Weyl nonzero at every point"};
    return {RegimeVerdict::kBlowupConstructible,
            "n >= 11 with the Weyl tensor vanishing somewhere"};
  }

  // linear perturbation: non-existence rules first
  if (n <= 6)
    return {RegimeVerdict::kCompactBelowMinimalLevel, "perturbed, 3 <= n <= 6"};
  if (h_nonneg && n <= 9)
    return {RegimeVerdict::kCompactBelowMinimalLevel, "perturbation >= 0 and 7 <= n <= 9"};
  if (h_nonneg && n == 10 && rel == ThresholdRelation::kAbove)
    return {RegimeVerdict::kCompactBelowMinimalLevel,
            "perturbation >= 0, n = 10, u0 above the threshold everywhere"};
  if (h_nonpos && n == 10 && rel == ThresholdRelation::kBelow)
    return {RegimeVerdict::kCompactBelowMinimalLevel,
            "perturbation <= 0, n = 10, u0 below the threshold everywhere"};
  if (h_nonneg && n >= 11 && spec.lcf)
    return {RegimeVerdict::kCompactBelowMinimalLevel,
            "perturbation >= 0, n >= 11, locally conformally flat"};
  if (h_nonpos && n >= 11 && spec.weyl_everywhere_nonzero)
    return {RegimeVerdict::kCompactBelowMinimalLevel,
            "perturbation <= 0, n >= 11, Weyl nonzero everywhere"};

  // constructible rules
  if (h_min_neg && n >= 7 && n <= 9)
    return {RegimeVerdict::kBlowupConstructible, "min perturbation < 0 and 7 <= n <= 9"};
  if (h_min_neg && n == 10 && rel == ThresholdRelation::kAbove)
    return {RegimeVerdict::kBlowupConstructible,
            "min perturbation < 0, n = 10, u0 above the threshold everywhere"};
  if (h_max_pos && n == 10 && rel == ThresholdRelation::kBelow)
    return {RegimeVerdict::kBlowupConstructible,
            "max perturbation > 0, n = 10, u0 below the threshold everywhere"};
  if (h_min_neg && n >= 11 && spec.lcf)
    return {RegimeVerdict::kBlowupConstructible,
            "min perturbation < 0, n >= 11, locally conformally flat"};
  if (h_max_pos && n >= 11 && spec.weyl_everywhere_nonzero)
    return {RegimeVerdict::kBlowupConstructible,
            "max perturbation > 0, n >= 11, Weyl nonzero everywhere"};

  return {RegimeVerdict::kBlowupNotExcluded, "no rule applies"};
}

double balance(const BalanceInput& input) {
  const int n = input.n;
  require_dim(n, 7, "balance");
  if (input.u0_at_blowup <= 0.0) throw std::invalid_argument("balance: u0 must be > 0");
  if (input.weyl_norm_sq_at_blowup < 0.0)
    throw std::invalid_argument("balance: |Weyl|^2 must be >= 0");
  if (input.mu <= 0.0) throw std::invalid_argument("balance: mu must be > 0");
  const double lead = 0.5 * std::pow(n, 0.5 * (n - 2)) * std::pow(n - 2.0, 0.5 * (n + 2)) *
                      sphere_volume(n) * input.u0_at_blowup *
                      std::pow(input.mu, 0.5 * (n - 6));
  const double obstruction =
      pohozaev_constant(n) * input.weyl_norm_sq_at_blowup * input.mu * input.mu;
  return lead - obstruction;
}

double minimal_energy_gap(int n, double yamabe_m) {
  require_dim(n, 3, "minimal_energy_gap");
  if (yamabe_m <= 0.0)
    throw std::invalid_argument("minimal_energy_gap: Yamabe invariant must be positive");
  return std::pow(yamabe_m, 0.5 * n) + sobolev_mass(n);
}

}  // namespace yamabe
