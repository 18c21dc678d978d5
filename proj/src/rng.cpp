#include "yamabe/rng.hpp"

#include <cmath>

namespace yamabe {

void CounterRng::next_gaussian_pair(double& g0, double& g1) {
  const double u1 = next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  g0 = r * std::cos(6.283185307179586476925 * u2);
  g1 = r * std::sin(6.283185307179586476925 * u2);
}

}  // namespace yamabe
