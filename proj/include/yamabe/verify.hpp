#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace yamabe {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyConfig {
  int n = 11;
  std::uint64_t seed = 12345;
  std::uint64_t mc_budget = 1000000;
  // multiplies every tolerance; < 1 tightens, > 1 loosens
  double tol_scale = 1.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass = false;
  double total_seconds = 0.0;
};

// The full verification battery: exact radial-integral identities, Weyl
// algebra invariants, moment formulas against Monte Carlo, the z-Hessian
// cancellation, corrector identities, the fourth-order coefficient, saddle
// certification across dimensions, curvature expansion orders, the Pohozaev
// constant and balance, and the regime table.
VerifyReport run_verify_all(const VerifyConfig& config);

}  // namespace yamabe
