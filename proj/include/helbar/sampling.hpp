#pragma once

#include <cstdint>

#include "helbar/kinematics.hpp"

namespace helbar {

/// Deterministic uniform sampler (splitmix64 core). The sequence depends only
/// on the seed, never on platform or standard-library internals, so seeded
/// runs are byte-for-byte reproducible.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double uniform();  ///< [0, 1)
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

struct SampleOptions {
  double m = 1.0;
  double max_angle = 1.45;       ///< |angle| bound, cos(1.45) ~ 0.12
  double min_abs_angle = 0.0;    ///< keep p2 observable when > 0
  double min_abs_V0 = 0.0;
  double L_min = 0.1;
  double L_max = 4.0;
  double q1sq_margin = 1e-6;     ///< stay out of the boundary band
  double match_margin = 1e-3;    ///< stay off |E - V0| = m and E - V0 = 0
};

/// Random kinematics constrained to the requested zone, kept away from the
/// boundary band and the matching singular set by the option margins.
Kinematics sample_kinematics(Sampler& rng, EnergyZone zone,
                             const SampleOptions& opt = SampleOptions{});

}  // namespace helbar
