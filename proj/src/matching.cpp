#include "helbar/matching.hpp"

#include <cmath>

#include "helbar/numeric.hpp"

namespace helbar {

Mat4 TransferClosedForm::as_matrix() const {
  Mat4 M = Mat4::Zero();
  M(0, 0) = a_minus;
  M(0, 3) = b_plus;
  M(1, 1) = a_plus;
  M(1, 2) = b_plus;
  M(2, 1) = b_minus;
  M(2, 2) = a_minus;
  M(3, 0) = b_minus;
  M(3, 3) = a_plus;
  return M;
}

Mat4 build_S(const Kinematics& k, const BarrierChannel& ch, double eps) {
  if (ch.zone == EnergyZone::Boundary)
    throw SingularMatchError("matching basis is singular in the boundary band");
  const double shifted = k.E - k.V0;
  if (std::abs(shifted * shifted - k.m * k.m) < eps)
    throw SingularMatchError("matching basis is singular at |E - V0| = m");
  const auto [c2, rho] = detail::lower_ratio(shifted, k.m);
  const complexd ip2(0.0, k.p2);
  const complexd fp = (ch.q1 + ip2) / rho;
  const complexd fm = (-ch.q1 + ip2) / rho;
  const complexd gp = (ch.q1 + ip2) / (shifted + k.m);
  const complexd gm = (-ch.q1 + ip2) / (shifted + k.m);
  Mat4 S;
  S << 1, -1, 1, -1,
       fp, fp, fm, fm,
       c2, c2, c2, c2,
       gp, -gp, gm, -gm;
  return S;
}

MatchMatrices transfer_matrix_numeric(const Kinematics& k, const BarrierChannel& ch) {
  MatchMatrices out;
  out.S = build_S(k, ch);
  const complexd i1(0.0, 1.0);
  const complexd forward = std::exp(i1 * ch.q1 * k.L);
  const complexd backward = std::exp(-i1 * ch.q1 * k.L);
  out.D = Mat4::Zero();
  out.D.diagonal() << forward, forward, backward, backward;
  // Inverse phase diagonal: equal to D* for real q1, its continuation otherwise.
  Mat4 Dbar = Mat4::Zero();
  Dbar.diagonal() << backward, backward, forward, forward;
  const Mat4 rhs = out.S * Dbar;
  out.M = out.S.transpose().partialPivLu().solve(rhs.transpose()).transpose();
  // For real q1 the phase diagonal is unit modulus and ||rhs|| = ||S||; in the
  // evanescent zone the residual scales with the growing exponentials instead.
  const double scale = std::max(out.S.norm(), rhs.norm());
  const double residual = (out.M * out.S - rhs).norm();
  if (!std::isfinite(residual) || residual > 1e-11 * scale)
    throw SingularMatchError("transfer-matrix solve is rank deficient");
  return out;
}

TransferClosedForm transfer_matrix_closed(const Kinematics& k, const BarrierChannel& ch) {
  const auto [cos_qL, sinc] = trig_pair(ch.q1, k.L);
  const double shifted = k.E - k.V0;
  const complexd i1(0.0, 1.0);
  TransferClosedForm t;
  t.a_plus = cos_qL + k.p2 * sinc;
  t.a_minus = cos_qL - k.p2 * sinc;
  t.b_plus = -i1 * (shifted + k.m) * sinc;
  t.b_minus = -i1 * (shifted - k.m) * sinc;
  return t;
}

FullSolution solve_continuity(const Kinematics& k, const BarrierChannel& ch,
                              complexd I_plus, complexd I_minus) {
  validate(k);
  if (std::abs(std::norm(I_plus) + std::norm(I_minus) - 1.0) > 1e-12)
    throw NormalizationError("incoming amplitudes must satisfy |I+|^2 + |I-|^2 = 1");

  const double shifted = k.E - k.V0;
  const Spinor4 in_p = helicity_spinor({+1, +1}, k.p1, k.p2, k.E, k.m);
  const Spinor4 in_m = helicity_spinor({-1, +1}, k.p1, k.p2, k.E, k.m);
  const Spinor4 re_p = helicity_spinor({+1, -1}, k.p1, k.p2, k.E, k.m);
  const Spinor4 re_m = helicity_spinor({-1, -1}, k.p1, k.p2, k.E, k.m);
  const Spinor4 fw_p = barrier_spinor({+1, +1}, ch.q1, k.p2, shifted, k.m);
  const Spinor4 fw_m = barrier_spinor({-1, +1}, ch.q1, k.p2, shifted, k.m);
  const Spinor4 bw_p = barrier_spinor({+1, -1}, ch.q1, k.p2, shifted, k.m);
  const Spinor4 bw_m = barrier_spinor({-1, -1}, ch.q1, k.p2, shifted, k.m);

  const complexd i1(0.0, 1.0);
  const complexd eP = std::exp(i1 * ch.q1 * k.L);
  const complexd eM = std::exp(-i1 * ch.q1 * k.L);
  const complexd eF = std::exp(i1 * k.p1 * k.L);

  // Unknown ordering: R+, R-, A+, A-, B+, B-, T+, T-.
  Mat8 A = Mat8::Zero();
  Vec8 b = Vec8::Zero();
  A.block<4, 1>(0, 0) = re_p;
  A.block<4, 1>(0, 1) = re_m;
  A.block<4, 1>(0, 2) = -fw_p;
  A.block<4, 1>(0, 3) = -fw_m;
  A.block<4, 1>(0, 4) = -bw_p;
  A.block<4, 1>(0, 5) = -bw_m;
  b.segment<4>(0) = -(I_plus * in_p + I_minus * in_m);
  A.block<4, 1>(4, 2) = fw_p * eP;
  A.block<4, 1>(4, 3) = fw_m * eP;
  A.block<4, 1>(4, 4) = bw_p * eM;
  A.block<4, 1>(4, 5) = bw_m * eM;
  A.block<4, 1>(4, 6) = -in_p * eF;
  A.block<4, 1>(4, 7) = -in_m * eF;

  const Eigen::FullPivLU<Mat8> lu(A);
  if (!lu.isInvertible())
    throw SingularMatchError("continuity system is rank deficient");
  const Vec8 x = lu.solve(b);
  const double residual = (A * x - b).cwiseAbs().maxCoeff();

  FullSolution out;
  out.I_plus = I_plus;
  out.I_minus = I_minus;
  out.R_plus = x(0);
  out.R_minus = x(1);
  out.A_plus = x(2);
  out.A_minus = x(3);
  out.B_plus = x(4);
  out.B_minus = x(5);
  out.T_plus = x(6);
  out.T_minus = x(7);
  out.residual = residual;
  return out;
}

}  // namespace helbar
