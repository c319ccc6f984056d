#pragma once

#include <string>
#include <vector>

#include "helbar/kinematics.hpp"
#include "helbar/matching.hpp"

namespace helbar {

/// Closed-form scattering amplitudes for unit incident flux. R conserves the
/// incident helicity, R_tilde flips it; the transmitted wave has no flip
/// channel. |R|^2 + |R_tilde|^2 + |T|^2 = 1 away from the boundary band.
struct ScatteringAmplitudes {
  complexd R;
  complexd R_tilde;
  complexd T;
  EnergyZone zone = EnergyZone::Boundary;
  std::string warning;  ///< non-empty for Klein-zone evaluations
};

ScatteringAmplitudes closed_form_amplitudes(const Kinematics& k, const BarrierChannel& ch);

/// | |R|^2 + |R_tilde|^2 + |T|^2 - 1 |
double unitarity_residual(const ScatteringAmplitudes& a);

/// Per-helicity channel amplitudes: R± = I± R + I∓ R_tilde, T± = I± T.
struct HelicityChannels {
  complexd R_plus, R_minus;
  complexd T_plus, T_minus;
};

/// Throws NormalizationError unless |I+|^2 + |I-|^2 = 1 to 1e-12.
HelicityChannels helicity_channels(const ScatteringAmplitudes& a,
                                   complexd I_plus, complexd I_minus);

/// Residuals of the evanescent-branch identities: with q1 = i kappa,
/// cos(q1 L) = cosh(kappa L) and sin(q1 L)/q1 = sinh(kappa L)/kappa, and the
/// amplitudes evaluated through complex q1 must equal the explicit cosh/sinh
/// substitution. The L-grid scan documents that reflection never vanishes
/// (no tunneling resonance; min_abs_R is informative for p2 != 0).
struct TunnelingReport {
  double kappa = 0.0;
  double trig_identity_residual = 0.0;
  double substitution_residual = 0.0;
  double min_abs_R = 0.0;
  double min_abs_sin = 0.0;
  double max_unitarity_residual = 0.0;
  bool no_resonance = false;
};

TunnelingReport tunneling_branch_check(const Kinematics& k, const BarrierChannel& ch,
                                       double L_max = 10.0, int grid = 2048);

enum class ScanVariable { L, E, Angle };
ScanVariable parse_scan_variable(std::string_view name);

struct ResonancePoint {
  int n = 0;             ///< q1 L = n pi
  double value = 0.0;    ///< scanned-variable value at the root
  double abs_T = 0.0;    ///< |T| there
  double max_abs_R = 0.0;  ///< max(|R|, |R_tilde|) there
};

struct ResonanceScan {
  std::vector<ResonancePoint> points;
  bool truncated = false;  ///< the range left the diffusion zone mid-scan
  std::string warning;
};

/// All roots of q1 L = n pi, n = 1..n_max, for the chosen variable over
/// [lo, hi]. L-scans invert in closed form; E/angle scans bracket sign
/// changes on a uniform grid and bisect until |q1 L - n pi| <= 1e-12.
/// Throws ZoneError if the range starts outside the diffusion zone; a range
/// that leaves it mid-scan is truncated and flagged.
ResonanceScan find_resonances(const Kinematics& k, ScanVariable variable,
                              double lo, double hi, int n_max, int grid = 2048);

}  // namespace helbar
