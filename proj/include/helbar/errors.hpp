#pragma once

#include <stdexcept>

namespace helbar {

/// Base class of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid physical input: off-shell kinematics, grazing incidence,
/// non-positive mass or width, divergent ratio, ...
struct DomainError : Error {
  using Error::Error;
};

/// The boundary-matching system is singular or ill-conditioned.
struct SingularMatchError : Error {
  using Error::Error;
};

/// Incoming helicity amplitudes do not carry unit total intensity.
struct NormalizationError : Error {
  using Error::Error;
};

/// Relative reflected phase requested where the conserving amplitude vanishes.
struct UndefinedPhaseError : Error {
  using Error::Error;
};

/// Measured intensities are incompatible with any relative phase.
struct InconsistentMeasurementError : Error {
  using Error::Error;
};

/// A scan entered an energy zone where the operation is not defined.
struct ZoneError : Error {
  using Error::Error;
};

}  // namespace helbar
