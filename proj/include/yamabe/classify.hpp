#pragma once

#include <string>

namespace yamabe {

enum class ThresholdRelation { kAbove, kBelow, kEqualSomewhere, kUnknown };
enum class PerturbationSign { kNone, kNonneg, kNonpos, kMixed };
enum class RegimeVerdict {
  kCompactBelowMinimalLevel,
  kBlowupNotExcluded,
  kBlowupConstructible,
};

const char* to_string(RegimeVerdict v);
const char* to_string(ThresholdRelation r);
const char* to_string(PerturbationSign s);
ThresholdRelation threshold_relation_from_string(const std::string& s);
PerturbationSign perturbation_sign_from_string(const std::string& s);

// Geometry facts feeding the regime rules.  The threshold relation compares
// the background minimizer u0 against (5/567)|Weyl|^2 pointwise (meaningful
// at n = 10).  Locally conformally flat implies the Weyl tensor vanishes
// identically, so lcf forces weyl_everywhere_nonzero = false.
struct GeometrySpec {
  int n = 0;
  bool lcf = false;
  bool weyl_everywhere_nonzero = false;
  ThresholdRelation u0_vs_threshold = ThresholdRelation::kUnknown;
  PerturbationSign perturbation_sign = PerturbationSign::kNone;
};

struct ClassifiedRegime {
  RegimeVerdict verdict;
  std::string rule;  // the matched rule, stated in words
};

// Total, deterministic classification; throws on inconsistent specs.
ClassifiedRegime classify(const GeometrySpec& spec);

struct BalanceInput {
  int n = 0;
  double u0_at_blowup = 0.0;        // > 0
  double weyl_norm_sq_at_blowup = 0.0;  // >= 0
  double mu = 0.0;                  // blow-up scale, > 0
};

// Leading balance of the blow-up obstruction:
//   (1/2) n^{(n-2)/2} (n-2)^{(n+2)/2} omega_{n-1} u0 mu^{(n-6)/2} - a_n |Weyl|^2 mu^2.
double balance(const BalanceInput& input);

// Y(M)^{n/2} + Y(S^n)^{n/2} with Y(S^n) = K_n^{-2}.
double minimal_energy_gap(int n, double yamabe_m);

}  // namespace yamabe
