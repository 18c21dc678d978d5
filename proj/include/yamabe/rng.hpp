#pragma once

#include <cstdint>

namespace yamabe {

// Counter-based stream: every draw is a pure function of (seed, stream, counter),
// so work units can be evaluated in any order or in parallel with identical
// results.
struct CounterRng {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::uint64_t counter = 0;

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() {
    std::uint64_t z = mix(seed ^ mix(stream ^ 0x853c49e6748fea9bULL));
    return mix(z ^ counter++);
  }

  // uniform in (0, 1)
  double next_double() {
    return (next_u64() >> 11) * (1.0 / 9007199254740992.0) + 4.9406564584124654e-324;
  }

  // uniform in (-1, 1)
  double next_symmetric() { return 2.0 * next_double() - 1.0; }

  // standard normal via Box-Muller
  void next_gaussian_pair(double& g0, double& g1);
};

}  // namespace yamabe
