#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "helbar/kinematics.hpp"

namespace helbar {

struct VerifyOptions {
  int samples = 1000;  ///< per zone
  std::uint64_t seed = 42;
  double tol_override = 0.0;  ///< > 0 replaces every check tolerance
  std::vector<EnergyZone> zones = {EnergyZone::Diffusion, EnergyZone::Klein,
                                   EnergyZone::Tunneling};
};

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string worst_input;  ///< reproducer for the worst sample
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

/// Runs the cross-validation battery: closed forms against the continuity
/// solve, numeric against closed transfer matrix, unitarity, the spinor
/// eigen/norm/orthogonality suite, head-on reflection zeros, resonance
/// totality, the interference law against direct evaluation, and the phase
/// inference round trip. Deterministic for a fixed seed.
VerifyReport run_verify(const VerifyOptions& opt);

/// One line per check plus a summary line; failing checks print the worst
/// sample's full inputs.
void print_report(std::ostream& os, const VerifyReport& report);

}  // namespace helbar
