#include "helbar/spinors.hpp"

#include <cmath>

#include "helbar/numeric.hpp"

namespace helbar {

namespace {

void check_label(HelicityLabel h) {
  if ((h.sign != 1 && h.sign != -1) || (h.direction != 1 && h.direction != -1))
    throw DomainError("helicity label entries must be +1 or -1");
}

}  // namespace

namespace detail {

LowerRatio lower_ratio(double E, double m) {
  const complexd c2 = sqrt_ratio(E - m, E + m);
  return {c2, (E + m) * c2};
}

}  // namespace detail

Spinor4 barrier_spinor(HelicityLabel h, complexd q1, double p2, double E, double m) {
  check_label(h);
  if (std::abs(E) < 1e-14)
    throw SingularMatchError("barrier basis undefined at E - V0 = 0");
  if (std::abs(E * E - m * m) < 1e-14)
    throw SingularMatchError("barrier basis degenerate at |E - V0| = m");
  const auto [c2, rho] = detail::lower_ratio(E, m);
  const complexd prefactor = 0.5 * sqrt_ratio(E + m, E);
  const complexd u = double(h.direction) * q1 + complexd(0.0, p2);
  const double s = double(h.sign);
  Spinor4 psi;
  psi << complexd(s, 0.0), u / rho, c2, s * u / (E + m);
  return prefactor * psi;
}

Spinor4 helicity_spinor(HelicityLabel h, double p1, double p2, double E, double m) {
  check_label(h);
  if (!(E > m)) throw DomainError("helicity spinor requires E > m");
  if (p1 == 0.0 && p2 == 0.0) throw DomainError("helicity is undefined at zero momentum");
  return barrier_spinor(h, complexd(p1, 0.0), p2, E, m);
}

Eigen::Matrix2cd pauli(int i) {
  const complexd I(0.0, 1.0);
  Eigen::Matrix2cd s;
  switch (i) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I, I, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw DomainError("Pauli index must be 1, 2 or 3");
  }
  return s;
}

namespace {

Mat4 make_sigma(int i) {
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 0) = pauli(i);
  m.block<2, 2>(2, 2) = pauli(i);
  return m;
}

Mat4 make_alpha(int i) {
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 2) = pauli(i);
  m.block<2, 2>(2, 0) = pauli(i);
  return m;
}

}  // namespace

Mat4 spin_sigma(int i) {
  static const Mat4 cached[3] = {make_sigma(1), make_sigma(2), make_sigma(3)};
  if (i < 1 || i > 3) throw DomainError("Pauli index must be 1, 2 or 3");
  return cached[i - 1];
}

Mat4 dirac_alpha(int i) {
  static const Mat4 cached[3] = {make_alpha(1), make_alpha(2), make_alpha(3)};
  if (i < 1 || i > 3) throw DomainError("Pauli index must be 1, 2 or 3");
  return cached[i - 1];
}

Mat4 dirac_beta() {
  static const Mat4 beta = [] {
    Mat4 m = Mat4::Zero();
    m.diagonal() << 1, 1, -1, -1;
    return m;
  }();
  return beta;
}

Mat4 helicity_operator(double p1, double p2) {
  const double p = std::hypot(p1, p2);
  if (p == 0.0) throw DomainError("helicity is undefined at zero momentum");
  return (p1 * spin_sigma(1) + p2 * spin_sigma(2)) / p;
}

}  // namespace helbar
