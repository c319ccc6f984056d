#include "helbar/phases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "helbar/numeric.hpp"

namespace helbar {

complexd IncomingState::I_plus() const { return std::polar(mag_plus, alpha); }
complexd IncomingState::I_minus() const { return std::polar(mag_minus, beta); }
double IncomingState::relative_phase() const { return wrap_phase(alpha - beta); }

IncomingState make_incoming(double mag_plus, double mag_minus, double alpha, double beta) {
  if (mag_plus < 0.0 || mag_minus < 0.0)
    throw DomainError("helicity magnitudes must be non-negative");
  if (std::abs(mag_plus * mag_plus + mag_minus * mag_minus - 1.0) > 1e-12)
    throw NormalizationError("incoming state must satisfy |I+|^2 + |I-|^2 = 1");
  return {mag_plus, mag_minus, alpha, beta};
}

IntensityReport reflected_intensities(const ScatteringAmplitudes& a, const IncomingState& in) {
  const double delta = in.alpha - in.beta;
  const double wp = in.mag_plus, wm = in.mag_minus;
  // R conj(R~) is structurally imaginary; its imaginary part carries the sign
  // that the |R R~| form leaves implicit for p2 < 0.
  const double interference = 2.0 * wp * wm * (a.R * std::conj(a.R_tilde)).imag();

  IntensityReport rep;
  rep.r_plus = wp * wp * std::norm(a.R) + wm * wm * std::norm(a.R_tilde)
               - interference * std::sin(delta);
  rep.r_minus = wm * wm * std::norm(a.R) + wp * wp * std::norm(a.R_tilde)
                + interference * std::sin(delta);
  rep.t_plus = wp * wp * std::norm(a.T);
  rep.t_minus = wm * wm * std::norm(a.T);
  rep.relative_phase_used = in.relative_phase();

  const HelicityChannels direct = helicity_channels(a, in.I_plus(), in.I_minus());
  if (std::abs(std::norm(direct.R_plus) - rep.r_plus) > 1e-12 ||
      std::abs(std::norm(direct.R_minus) - rep.r_minus) > 1e-12)
    throw Error("interference law disagrees with the direct complex evaluation");
  return rep;
}

ReflectedPhase reflected_relative_phase(const ScatteringAmplitudes& a) {
  if (std::abs(a.R) < 1e-14)
    throw UndefinedPhaseError("helicity-conserving reflection vanishes; relative phase undefined");
  const complexd ratio = a.R_tilde / a.R;
  return {wrap_phase(std::arg(ratio)), std::abs(ratio)};
}

std::vector<double> infer_relative_phase(double measured_r_plus, double measured_r_minus,
                                         const ScatteringAmplitudes& a,
                                         double mag_plus, double mag_minus) {
  const double observable = mag_plus * mag_minus * std::abs(a.R) * std::abs(a.R_tilde);
  if (!(observable > 1e-14))
    throw InconsistentMeasurementError("relative phase is unobservable: |I+ I- R R~| is negligible");

  const double coeff = 2.0 * mag_plus * mag_minus * (a.R * std::conj(a.R_tilde)).imag();
  const double base_plus =
      mag_plus * mag_plus * std::norm(a.R) + mag_minus * mag_minus * std::norm(a.R_tilde);
  const double base_minus =
      mag_minus * mag_minus * std::norm(a.R) + mag_plus * mag_plus * std::norm(a.R_tilde);
  const double s_plus = (base_plus - measured_r_plus) / coeff;
  const double s_minus = (measured_r_minus - base_minus) / coeff;
  double s = 0.5 * (s_plus + s_minus);
  if (std::abs(s) > 1.0 + 1e-9)
    throw InconsistentMeasurementError("measured intensities imply |sin(alpha - beta)| > 1");
  s = std::clamp(s, -1.0, 1.0);

  const double phi = std::asin(s);
  const double mirror = wrap_phase(std::numbers::pi - phi);
  if (std::abs(mirror - phi) < 1e-15) return {phi};
  return {phi, mirror};
}

double isospin_ratio(double theta, double alpha) {
  const double denom = 1.0 + std::cos(alpha) * std::sin(2.0 * theta);
  if (denom <= 1e-12)
    throw DomainError("cross-section ratio diverges: 1 + cos(alpha) sin(2 theta) <= 0");
  return 2.0 / denom;
}

}  // namespace helbar
