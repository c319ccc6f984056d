#pragma once

#include "helbar/kinematics.hpp"

namespace helbar {

/// Helicity eigenvalue and sense of longitudinal motion.
struct HelicityLabel {
  int sign = +1;       ///< helicity eigenvalue, +1 or -1
  int direction = +1;  ///< +1 rightward, -1 reflected (p1 -> -p1)
};

using Spinor4 = Vec4;

/// Planar helicity eigenspinor for momentum (direction * p1, p2), without the
/// exp(i p1 x) spatial factor (boundary phases are applied by the matching
/// layer). Unit norm by construction. Throws DomainError if E <= m or the
/// momentum vanishes.
Spinor4 helicity_spinor(HelicityLabel h, double p1, double p2, double E, double m);

/// The same column with E -> E - V0 and longitudinal momentum direction * q1
/// (complex allowed): the matching basis inside the barrier. For complex q1
/// this is not an eigenstate of any real-momentum helicity operator; it is
/// kept purely as a boundary basis. Branch rule: the third component is the
/// principal root of the ratio (E-m)/(E+m) and the momentum-magnitude
/// denominator is tied to it, so the column solves the Dirac equation for
/// every real E and complex q1.
Spinor4 barrier_spinor(HelicityLabel h, complexd q1, double p2, double E, double m);

/// (p1 Sigma_1 + p2 Sigma_2)/|p| in the Pauli-Dirac representation.
Mat4 helicity_operator(double p1, double p2);

// Pauli-Dirac representation matrices, exposed for tests.
Eigen::Matrix2cd pauli(int i);
Mat4 spin_sigma(int i);  ///< Sigma_i = diag(sigma_i, sigma_i)
Mat4 dirac_alpha(int i);
Mat4 dirac_beta();

namespace detail {

/// Lower-component ratio c2 and the tied momentum-magnitude root rho = (E+m) c2
/// with rho^2 = E^2 - m^2. Shared by the spinor constructor and the matching
/// matrix so their branches can never disagree.
struct LowerRatio {
  complexd c2;
  complexd rho;
};

LowerRatio lower_ratio(double E, double m);

}  // namespace detail

}  // namespace helbar
