#pragma once

#include "helbar/kinematics.hpp"
#include "helbar/spinors.hpp"

namespace helbar {

/// Interface-matching matrices of the three-region problem. D holds the
/// barrier phases diag(e^{i q1 L}, e^{i q1 L}, e^{-i q1 L}, e^{-i q1 L}).
/// M relates boundary data across the barrier and is built from the inverse
/// phase diagonal, which coincides with D* for real q1 and is its analytic
/// continuation when q1 is evanescent.
struct MatchMatrices {
  Mat4 S;
  Mat4 D;
  Mat4 M;
};

/// Scalars of the closed-form transfer matrix:
///   a± = cos(q1 L) ± (p2/q1) sin(q1 L),
///   b± = -i ((E - V0 ± m)/q1) sin(q1 L),
/// evaluated through sin(q1 L)/q1 so the q1 -> 0 limit is regular.
struct TransferClosedForm {
  complexd a_plus;
  complexd a_minus;
  complexd b_plus;
  complexd b_minus;

  /// [[a-, 0, 0, b+], [0, a+, b+, 0], [0, b-, a-, 0], [b-, 0, 0, a+]]
  Mat4 as_matrix() const;
};

/// Every channel amplitude of the continuity solve, including the interior
/// ones the closed forms eliminate, plus the linear-solve residual.
struct FullSolution {
  complexd I_plus, I_minus;
  complexd R_plus, R_minus;
  complexd A_plus, A_minus;  ///< interior amplitudes moving toward x = L
  complexd B_plus, B_minus;  ///< interior amplitudes moving toward x = 0
  complexd T_plus, T_minus;
  double residual = 0.0;     ///< max-norm residual of the 8x8 solve
};

/// Basis matrix of barrier-spinor component ratios (first row normalized to
/// +-1). Throws SingularMatchError in the boundary band and where the entries
/// degenerate, |(E - V0)^2 - m^2| < eps.
Mat4 build_S(const Kinematics& k, const BarrierChannel& ch, double eps = kDefaultZoneEps);

/// M from a column-by-column linear solve of M S = S Dbar (no explicit
/// inverse). Throws SingularMatchError if the solve is rank deficient.
MatchMatrices transfer_matrix_numeric(const Kinematics& k, const BarrierChannel& ch);

TransferClosedForm transfer_matrix_closed(const Kinematics& k, const BarrierChannel& ch);

/// Assembles the raw 8x8 system from matching the region wavefunctions at
/// x = 0 and x = L (four spinor components per interface; unknowns R±, A±,
/// B±, T±) and solves it. Independent of the closed forms; serves as their
/// oracle. Requires |I+|^2 + |I-|^2 = 1 to 1e-12.
FullSolution solve_continuity(const Kinematics& k, const BarrierChannel& ch,
                              complexd I_plus, complexd I_minus);

}  // namespace helbar
