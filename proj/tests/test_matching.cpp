#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helbar/amplitudes.hpp"
#include "helbar/matching.hpp"
#include "helbar/sampling.hpp"
#include "test_helpers.hpp"

using namespace helbar;

namespace {
constexpr double pi = std::numbers::pi;

EnergyZone cycle_zone(int i) {
  return i % 3 == 0 ? EnergyZone::Diffusion : i % 3 == 1 ? EnergyZone::Klein : EnergyZone::Tunneling;
}
}  // namespace

TEST_CASE("zero-width barrier gives the identity transfer matrix") {
  const Kinematics k = kinematics_from_momenta(1.2, 0.4, 1.0, 0.8, 0.0);
  const BarrierChannel ch = barrier_channel(k);
  const MatchMatrices mm = transfer_matrix_numeric(k, ch);
  CHECK((mm.M - Mat4::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((mm.D - Mat4::Identity()).cwiseAbs().maxCoeff() == 0.0);

  const TransferClosedForm t = transfer_matrix_closed(k, ch);
  CHECK(t.a_plus == complexd(1.0, 0.0));
  CHECK(t.a_minus == complexd(1.0, 0.0));
  CHECK(t.b_plus == complexd(0.0, 0.0));
  CHECK(t.b_minus == complexd(0.0, 0.0));
}

TEST_CASE("half-wave barrier q1 L = pi flips sign: M = -1") {
  Kinematics k = kinematics_from_momenta(1.4, 0.3, 1.0, 0.5, 1.0);
  const BarrierChannel ch = barrier_channel(k);
  REQUIRE(ch.zone == EnergyZone::Diffusion);
  k.L = pi / ch.q1.real();
  const MatchMatrices mm = transfer_matrix_numeric(k, ch);
  CHECK((mm.M + Mat4::Identity()).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("head-on symmetric case: a+ equals a-") {
  const Kinematics k = kinematics_from_momenta(1.3, 0.0, 1.0, 0.6, 1.7);
  const TransferClosedForm t = transfer_matrix_closed(k, barrier_channel(k));
  CHECK(t.a_plus == t.a_minus);
}

TEST_CASE("S entries match an independent evaluation of the displayed forms") {
  // E = 3, m = 1, V0 = 1, p2 = 0.5: E' = 2, q1^2 = 4 - 0.25 - 1 = 2.75
  const double p2 = 0.5;
  const Kinematics k = kinematics_from_momenta(std::sqrt(9.0 - 1.0 - p2 * p2), p2, 1.0, 1.0, 1.0);
  const BarrierChannel ch = barrier_channel(k);
  REQUIRE(ch.q1.real() == doctest::Approx(std::sqrt(2.75)).epsilon(1e-15));
  const Mat4 S = build_S(k, ch);

  const double den = std::sqrt(3.0);  // sqrt(E'^2 - m^2)
  const complexd f_fwd = (ch.q1 + complexd(0, p2)) / den;
  const complexd f_bwd = (-ch.q1 + complexd(0, p2)) / den;
  const double c2 = std::sqrt(1.0 / 3.0);  // sqrt((E'-m)/(E'+m))
  const complexd g_fwd = (ch.q1 + complexd(0, p2)) / 3.0;
  const complexd g_bwd = (-ch.q1 + complexd(0, p2)) / 3.0;

  CHECK(test::close(S(0, 0), 1.0, 0.0));
  CHECK(test::close(S(0, 1), -1.0, 0.0));
  CHECK(test::close(S(0, 2), 1.0, 0.0));
  CHECK(test::close(S(0, 3), -1.0, 0.0));
  for (int j : {0, 1}) CHECK(test::close(S(1, j), f_fwd, 1e-15));
  for (int j : {2, 3}) CHECK(test::close(S(1, j), f_bwd, 1e-15));
  for (int j : {0, 1, 2, 3}) CHECK(test::close(S(2, j), c2, 1e-15));
  CHECK(test::close(S(3, 0), g_fwd, 1e-15));
  CHECK(test::close(S(3, 1), -g_fwd, 1e-15));
  CHECK(test::close(S(3, 2), g_bwd, 1e-15));
  CHECK(test::close(S(3, 3), -g_bwd, 1e-15));
}

TEST_CASE("free limit: S columns are the free spinor component ratios") {
  const Kinematics k = kinematics_from_momenta(1.2, 0.5, 1.0, 0.0, 1.0);
  const BarrierChannel ch = barrier_channel(k);
  const Mat4 S = build_S(k, ch);
  const double rho = std::sqrt(k.E * k.E - 1.0);
  const double c2 = std::sqrt((k.E - 1.0) / (k.E + 1.0));
  for (int j : {0, 1}) {
    const double sgn = j == 0 ? 1.0 : -1.0;
    CHECK(test::close(S(0, j), sgn, 1e-15));
    CHECK(test::close(S(1, j), complexd(k.p1, k.p2) / rho, 1e-14));
    CHECK(test::close(S(2, j), c2, 1e-15));
    CHECK(test::close(S(3, j), sgn * complexd(k.p1, k.p2) / (k.E + 1.0), 1e-14));
  }
  for (int j : {2, 3}) {
    const double sgn = j == 2 ? 1.0 : -1.0;
    CHECK(test::close(S(1, j), complexd(-k.p1, k.p2) / rho, 1e-14));
    CHECK(test::close(S(3, j), sgn * complexd(-k.p1, k.p2) / (k.E + 1.0), 1e-14));
  }
}

TEST_CASE("S is nonsingular on random diffusion kinematics") {
  Sampler rng(31);
  for (int i = 0; i < 200; ++i) {
    const Kinematics k = sample_kinematics(rng, EnergyZone::Diffusion);
    const Mat4 S = build_S(k, barrier_channel(k));
    CHECK(std::abs(S.determinant()) > 1e-8);
  }
}

TEST_CASE("numeric transfer matrix reproduces the closed form in every zone") {
  Sampler rng(32);
  for (int i = 0; i < 600; ++i) {
    const Kinematics k = sample_kinematics(rng, cycle_zone(i));
    const BarrierChannel ch = barrier_channel(k);
    const MatchMatrices mm = transfer_matrix_numeric(k, ch);
    const Mat4 mc = transfer_matrix_closed(k, ch).as_matrix();
    const double scale = std::max(1.0, mc.cwiseAbs().maxCoeff());
    CHECK((mm.M - mc).cwiseAbs().maxCoeff() <= 1e-11 * scale);

    // eight structural zeros
    const double zero_tol = 1e-11 * mm.M.cwiseAbs().maxCoeff();
    for (auto [r, c] : {std::pair{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}})
      CHECK(std::abs(mm.M(r, c)) <= zero_tol);

    // defining identity M S = S Dbar, with Dbar the inverse phase diagonal
    Mat4 Dbar = Mat4::Zero();
    Dbar.diagonal() << mm.D(2, 2), mm.D(2, 2), mm.D(0, 0), mm.D(0, 0);
    const Mat4 rhs = mm.S * Dbar;
    const double id_scale = std::max(mm.S.norm(), rhs.norm());
    CHECK((mm.M * mm.S - rhs).norm() <= 1e-12 * id_scale);

    CHECK(std::abs(mm.D.determinant() - 1.0) <= 1e-12);
  }
}

TEST_CASE("D carries the forward phases exactly as constructed") {
  const Kinematics k = kinematics_from_momenta(1.1, 0.2, 1.0, 0.4, 2.3);
  const BarrierChannel ch = barrier_channel(k);
  const MatchMatrices mm = transfer_matrix_numeric(k, ch);
  const complexd fwd = std::exp(complexd(0, 1) * ch.q1 * k.L);
  CHECK(mm.D(0, 0) == fwd);
  CHECK(mm.D(1, 1) == fwd);
  CHECK(mm.D(2, 2) == std::exp(-complexd(0, 1) * ch.q1 * k.L));
  CHECK(mm.D(3, 3) == mm.D(2, 2));
}

TEST_CASE("continuity solve with no barrier is the identity channel") {
  const Kinematics k = kinematics_from_momenta(1.6, 0.5, 1.0, 0.0, 1.2);
  const BarrierChannel ch = barrier_channel(k);
  const complexd ip = complexd(0.6, 0.0), im = complexd(0.0, 0.8);
  const FullSolution fs = solve_continuity(k, ch, ip, im);
  CHECK(std::abs(fs.R_plus) <= 1e-13);
  CHECK(std::abs(fs.R_minus) <= 1e-13);
  CHECK(std::abs(fs.B_plus) <= 1e-13);
  CHECK(std::abs(fs.B_minus) <= 1e-13);
  CHECK(test::close(fs.A_plus, ip, 1e-13));
  CHECK(test::close(fs.A_minus, im, 1e-13));
  CHECK(test::close(fs.T_plus, ip, 1e-13));
  CHECK(test::close(fs.T_minus, im, 1e-13));
}

TEST_CASE("continuity solve rejects unnormalized input") {
  const Kinematics k = kinematics_from_momenta(1.6, 0.5, 1.0, 0.4, 1.2);
  CHECK_THROWS_AS(solve_continuity(k, barrier_channel(k), 1.0, 0.5), NormalizationError);
}

TEST_CASE("continuity solve satisfies both interface conditions") {
  Sampler rng(33);
  for (int i = 0; i < 300; ++i) {
    const Kinematics k = sample_kinematics(rng, cycle_zone(i));
    const BarrierChannel ch = barrier_channel(k);
    const double mix = rng.uniform(0.0, pi / 2.0);
    const FullSolution fs =
        solve_continuity(k, ch, std::cos(mix), complexd(0, 1) * std::sin(mix));
    CHECK(fs.residual <= 1e-10);
  }
}

TEST_CASE("interior amplitudes in a tunneling sample") {
  // fixed evanescent sample; the forward component dominates and the backward
  // one sits within e^{-2 kappa L} of it
  const Kinematics k = make_kinematics(2.0, 0.95, 1.0, 2.35, 1.5);
  const BarrierChannel ch = barrier_channel(k);
  REQUIRE(ch.zone == EnergyZone::Tunneling);
  const FullSolution fs = solve_continuity(k, ch, 1.0, 0.0);
  const double band = std::exp(-2.0 * ch.q1.imag() * k.L);
  CHECK(std::abs(fs.B_plus) >= band * std::abs(fs.A_plus));
  CHECK(std::abs(fs.B_minus) >= band * std::abs(fs.A_minus));
  CHECK(std::abs(fs.B_plus) < std::abs(fs.A_plus));
  // unit total outgoing intensity
  const double total = std::norm(fs.R_plus) + std::norm(fs.R_minus) +
                       std::norm(fs.T_plus) + std::norm(fs.T_minus);
  CHECK(std::abs(total - 1.0) <= 1e-11);
}

TEST_CASE("oracle equivalence: closed forms against the continuity solve") {
  Sampler rng(34);
  for (int i = 0; i < 1000; ++i) {
    const Kinematics k =
        sample_kinematics(rng, i % 2 == 0 ? EnergyZone::Diffusion : EnergyZone::Tunneling);
    const BarrierChannel ch = barrier_channel(k);
    const ScatteringAmplitudes a = closed_form_amplitudes(k, ch);
    const FullSolution fs = solve_continuity(k, ch, 1.0, 0.0);
    CHECK(test::rel_diff(a.R, fs.R_plus) <= 1e-10);
    CHECK(test::rel_diff(a.R_tilde, fs.R_minus) <= 1e-10);
    CHECK(test::rel_diff(a.T, fs.T_plus) <= 1e-10);
    CHECK(std::abs(fs.T_minus) <= 1e-10);
  }
}

TEST_CASE("singular configurations are rejected") {
  // boundary band: V0 tuned so q1^2 = 0
  const Kinematics k0 = kinematics_from_momenta(1.2, 0.5, 1.0, 0.0, 1.0);
  const Kinematics kb = kinematics_from_momenta(1.2, 0.5, 1.0,
                                                k0.E - k0.transverse_energy(), 1.0);
  const BarrierChannel chb = barrier_channel(kb);
  REQUIRE(chb.zone == EnergyZone::Boundary);
  CHECK_THROWS_AS(build_S(kb, chb), SingularMatchError);

  // degenerate basis at |E - V0| = m
  const Kinematics kd = kinematics_from_momenta(1.2, 0.5, 1.0, k0.E - 1.0, 1.0);
  CHECK_THROWS_AS(build_S(kd, barrier_channel(kd)), SingularMatchError);
  CHECK_THROWS_AS(solve_continuity(kd, barrier_channel(kd), 1.0, 0.0), SingularMatchError);
}
