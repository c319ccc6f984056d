#include "helbar/sampling.hpp"

#include <cmath>

namespace helbar {

std::uint64_t Sampler::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Sampler::uniform() { return double(next() >> 11) * 0x1.0p-53; }

double Sampler::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

Kinematics sample_kinematics(Sampler& rng, EnergyZone zone, const SampleOptions& opt) {
  if (zone == EnergyZone::Boundary)
    throw DomainError("cannot sample the boundary band");
  const double m = opt.m;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const double angle = rng.uniform(-opt.max_angle, opt.max_angle);
    if (std::abs(angle) < opt.min_abs_angle) continue;
    const double E = m * rng.uniform(1.05, 4.0);
    const double p = std::sqrt(E * E - m * m);
    const double p2 = p * std::sin(angle);
    const double et = std::hypot(p2, m);
    double V0 = 0.0;
    switch (zone) {
      case EnergyZone::Diffusion:
        V0 = rng.uniform(-2.0 * m, E - et - 0.02 * m);
        break;
      case EnergyZone::Klein:
        V0 = E + et + rng.uniform(0.05 * m, 3.0 * m);
        break;
      case EnergyZone::Tunneling:
        V0 = E - et + 2.0 * et * rng.uniform(0.02, 0.98);
        break;
      case EnergyZone::Boundary:
        break;
    }
    if (std::abs(V0) < opt.min_abs_V0) continue;
    const double L = rng.uniform(opt.L_min, opt.L_max);
    const Kinematics k = kinematics_from_momenta(p * std::cos(angle), p2, m, V0, L);
    const BarrierChannel ch = barrier_channel(k);
    if (ch.zone != zone) continue;
    if (std::abs(ch.q1_squared) < opt.q1sq_margin) continue;
    const double shifted = k.E - k.V0;
    if (std::abs(shifted * shifted - m * m) < opt.match_margin) continue;
    if (std::abs(shifted) < opt.match_margin) continue;
    return k;
  }
  throw Error("zone sampler failed to produce a sample");
}

}  // namespace helbar
