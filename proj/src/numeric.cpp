#include "helbar/numeric.hpp"

#include <cmath>
#include <numbers>

namespace helbar {

double wrap_phase(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(phi + std::numbers::pi, two_pi);
  if (r <= 0.0) r += two_pi;
  return r - std::numbers::pi;
}

TrigPair trig_pair(complexd q, double L) {
  const complexd z = q * L;
  if (std::abs(z) < 1e-4) {
    const complexd z2 = z * z;
    return {1.0 - z2 / 2.0 + z2 * z2 / 24.0,
            L * (1.0 - z2 / 6.0 + z2 * z2 / 120.0)};
  }
  return {std::cos(z), std::sin(z) / q};
}

complexd sqrt_ratio(double a, double b) {
  const double r = a / b;
  if (r >= 0.0) return complexd(std::sqrt(r), 0.0);
  return complexd(0.0, std::sqrt(-r));
}

}  // namespace helbar
