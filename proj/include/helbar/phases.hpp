#pragma once

#include <vector>

#include "helbar/amplitudes.hpp"

namespace helbar {

/// Incoming helicity state I+ = |I+| e^{i alpha}, I- = |I-| e^{i beta},
/// with unit total intensity.
struct IncomingState {
  double mag_plus = 1.0;
  double mag_minus = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  complexd I_plus() const;
  complexd I_minus() const;
  double relative_phase() const;  ///< alpha - beta wrapped into (-pi, pi]
};

/// Throws DomainError on negative magnitudes and NormalizationError unless
/// mag+^2 + mag-^2 = 1 to 1e-12.
IncomingState make_incoming(double mag_plus, double mag_minus, double alpha, double beta);

struct IntensityReport {
  double r_plus = 0.0;
  double r_minus = 0.0;
  double t_plus = 0.0;
  double t_minus = 0.0;
  double relative_phase_used = 0.0;
};

/// Reflected and transmitted intensities from the interference law
///   |R±|^2 = |I± R|^2 + |I∓ R_tilde|^2 ∓ 2 |I+||I-| Im(R conj(R_tilde)) sin(alpha - beta),
/// whose coefficient reduces to 2|I+ I- R R_tilde| for p2 > 0. The result is
/// cross-checked against the direct complex evaluation |I± R + I∓ R_tilde|^2;
/// a disagreement beyond 1e-12 throws Error.
IntensityReport reflected_intensities(const ScatteringAmplitudes& a, const IncomingState& in);

/// arg and modulus of R_tilde / R. The ratio is structurally imaginary with
/// modulus m p1 / (|p2| E); the phase is ±pi/2 with the sign of -p2.
struct ReflectedPhase {
  double phase = 0.0;
  double modulus = 0.0;
};

/// Throws UndefinedPhaseError when |R| < 1e-14 (head-on collisions).
ReflectedPhase reflected_relative_phase(const ScatteringAmplitudes& a);

/// Inverts the interference law for sin(alpha - beta) given measured
/// reflected intensities. Returns both arcsine branches {phi, pi - phi} in
/// (-pi, pi], collapsing to one element at an interference extremum. Throws
/// InconsistentMeasurementError when the phase is unobservable
/// (|I+ I- R R_tilde| <= 1e-14) or the implied |sin| exceeds 1 + 1e-9;
/// values within that tolerance are clamped.
std::vector<double> infer_relative_phase(double measured_r_plus, double measured_r_minus,
                                         const ScatteringAmplitudes& a,
                                         double mag_plus, double mag_minus);

/// Cross-section ratio of a two-state admixture with mixing angle theta and
/// relative phase alpha: 2 / (1 + cos(alpha) sin(2 theta)). Throws
/// DomainError when the denominator is <= 1e-12.
double isospin_ratio(double theta, double alpha);

}  // namespace helbar
