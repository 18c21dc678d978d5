// Acceptance suite: runs every verification criterion at its stated tolerance
// and prints one pass/fail line per criterion.

#include "yamabe/verify.hpp"

#include <chrono>
#include <cstdio>

int main(int argc, char** argv) {
  yamabe::VerifyConfig config;
  config.n = 11;
  config.seed = 12345;
  config.mc_budget = 1000000;
  if (argc > 1) config.seed = std::strtoull(argv[1], nullptr, 10);

  const auto start = std::chrono::steady_clock::now();
  const yamabe::VerifyReport report = yamabe::run_verify_all(config);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int idx = 0;
  for (const auto& check : report.checks) {
    ++idx;
    std::printf("%s  %2d. %s (%.1fs)\n", check.pass ? "PASS" : "FAIL", idx,
                check.name.c_str(), check.seconds);
    if (!check.pass) std::printf("      %s\n", check.detail.c_str());
  }
  const bool in_time = wall <= 600.0;
  std::printf("%s  %2d. full battery wall time %.1fs within 600s\n",
              in_time ? "PASS" : "FAIL", idx + 1, wall);
  if (report.all_pass && in_time) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("criteria failed\n");
  return 1;
}
