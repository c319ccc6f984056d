#include "helbar/amplitudes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "helbar/numeric.hpp"

namespace helbar {

ScatteringAmplitudes closed_form_amplitudes(const Kinematics& k, const BarrierChannel& ch) {
  validate(k);
  const auto [cos_qL, sinc] = trig_pair(ch.q1, k.L);
  const complexd i1(0.0, 1.0);
  const double psq = k.E * k.E - k.m * k.m;  // p1^2 + p2^2
  const complexd u(k.p1, k.p2);
  const complexd phase = std::exp(i1 * k.p1 * k.L);

  ScatteringAmplitudes a;
  a.T = std::conj(phase) / (cos_qL + i1 * ((k.E * k.V0 - k.p1 * k.p1) / k.p1) * sinc);
  a.R_tilde = i1 * (k.m * k.V0 / psq) * u * sinc * a.T * phase;
  // the leading p2 factor keeps head-on reflection an exact structural zero
  a.R = -k.p2 * (k.V0 * k.E / (k.p1 * psq)) * u * sinc * a.T * phase;
  a.zone = ch.zone;
  if (ch.zone == EnergyZone::Klein)
    a.warning = "Klein zone: amplitudes evaluated as written; no pair-production bookkeeping";
  return a;
}

double unitarity_residual(const ScatteringAmplitudes& a) {
  return std::abs(std::norm(a.R) + std::norm(a.R_tilde) + std::norm(a.T) - 1.0);
}

HelicityChannels helicity_channels(const ScatteringAmplitudes& a,
                                   complexd I_plus, complexd I_minus) {
  if (std::abs(std::norm(I_plus) + std::norm(I_minus) - 1.0) > 1e-12)
    throw NormalizationError("incoming amplitudes must satisfy |I+|^2 + |I-|^2 = 1");
  HelicityChannels ch;
  ch.R_plus = I_plus * a.R + I_minus * a.R_tilde;
  ch.R_minus = I_minus * a.R + I_plus * a.R_tilde;
  ch.T_plus = I_plus * a.T;
  ch.T_minus = I_minus * a.T;
  return ch;
}

TunnelingReport tunneling_branch_check(const Kinematics& k, const BarrierChannel& ch,
                                       double L_max, int grid) {
  if (ch.zone != EnergyZone::Tunneling)
    throw ZoneError("tunneling branch check requires an evanescent channel");
  if (!(L_max > 0.0) || grid < 2) throw DomainError("invalid tunneling scan grid");

  TunnelingReport rep;
  rep.kappa = ch.q1.imag();
  const double kappa = rep.kappa;

  const auto [cos_qL, sinc] = trig_pair(ch.q1, k.L);
  rep.trig_identity_residual =
      std::max(std::abs(cos_qL - std::cosh(kappa * k.L)),
               std::abs(sinc - std::sinh(kappa * k.L) / kappa));

  // amplitudes via the explicit cosh/sinh substitution
  const complexd i1(0.0, 1.0);
  const double psq = k.E * k.E - k.m * k.m;
  const complexd u(k.p1, k.p2);
  const complexd phase = std::exp(i1 * k.p1 * k.L);
  const double sh = std::sinh(kappa * k.L) / kappa;
  const complexd T2 =
      std::conj(phase) / (std::cosh(kappa * k.L) + i1 * ((k.E * k.V0 - k.p1 * k.p1) / k.p1) * sh);
  const complexd Rt2 = i1 * (k.m * k.V0 / psq) * u * sh * T2 * phase;
  const complexd R2 = -k.p2 * (k.V0 * k.E / (k.p1 * psq)) * u * sh * T2 * phase;

  const ScatteringAmplitudes a = closed_form_amplitudes(k, ch);
  rep.substitution_residual = std::max({std::abs(a.R - R2), std::abs(a.R_tilde - Rt2),
                                        std::abs(a.T - T2)});

  rep.min_abs_R = std::numeric_limits<double>::infinity();
  rep.min_abs_sin = std::numeric_limits<double>::infinity();
  rep.max_unitarity_residual = 0.0;
  Kinematics scan = k;
  for (int i = 1; i <= grid; ++i) {
    scan.L = L_max * double(i) / double(grid);
    const ScatteringAmplitudes ai = closed_form_amplitudes(scan, ch);
    rep.min_abs_R = std::min(rep.min_abs_R, std::abs(ai.R));
    rep.min_abs_sin = std::min(rep.min_abs_sin, std::abs(std::sin(ch.q1 * scan.L)));
    rep.max_unitarity_residual = std::max(rep.max_unitarity_residual, unitarity_residual(ai));
  }
  rep.no_resonance = rep.min_abs_R > 0.0;
  return rep;
}

ScanVariable parse_scan_variable(std::string_view name) {
  if (name == "L" || name == "l") return ScanVariable::L;
  if (name == "E" || name == "e") return ScanVariable::E;
  if (name == "angle") return ScanVariable::Angle;
  throw DomainError("scan variable must be one of L, E, angle");
}

namespace {

Kinematics kinematics_at(const Kinematics& base, ScanVariable variable, double x) {
  switch (variable) {
    case ScanVariable::L: {
      Kinematics k = base;
      k.L = x;
      return k;
    }
    case ScanVariable::E:
      return make_kinematics(x, base.angle(), base.m, base.V0, base.L);
    case ScanVariable::Angle:
      return make_kinematics(base.E, x, base.m, base.V0, base.L);
  }
  throw DomainError("unknown scan variable");
}

}  // namespace

ResonanceScan find_resonances(const Kinematics& k, ScanVariable variable,
                              double lo, double hi, int n_max, int grid) {
  validate(k);
  if (!(lo < hi)) throw DomainError("resonance scan requires lo < hi");
  if (grid < 2) throw DomainError("resonance scan grid must have at least 2 points");
  if (n_max < 0) throw DomainError("n_max must be non-negative");

  ResonanceScan out;
  if (n_max == 0) return out;

  constexpr double pi = std::numbers::pi;

  if (variable == ScanVariable::L) {
    const BarrierChannel ch = barrier_channel(k);
    if (ch.zone != EnergyZone::Diffusion)
      throw ZoneError("resonance search requires the diffusion zone");
    const double q1 = ch.q1.real();
    for (int n = 1; n <= n_max; ++n) {
      const double Ln = double(n) * pi / q1;
      if (Ln < lo || Ln > hi) continue;
      Kinematics kn = k;
      kn.L = Ln;
      const ScatteringAmplitudes a = closed_form_amplitudes(kn, ch);
      out.points.push_back({n, Ln, std::abs(a.T),
                            std::max(std::abs(a.R), std::abs(a.R_tilde))});
    }
    return out;
  }

  // Grid march for E/angle scans; stop at the first departure from diffusion.
  std::vector<double> xs;
  std::vector<double> qs;  // q1 L at each kept grid point
  xs.reserve(grid + 1);
  qs.reserve(grid + 1);
  for (int i = 0; i <= grid; ++i) {
    const double x = lo + (hi - lo) * double(i) / double(grid);
    Kinematics kx;
    BarrierChannel chx;
    bool ok = true;
    try {
      kx = kinematics_at(k, variable, x);
      chx = barrier_channel(kx);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok || chx.zone != EnergyZone::Diffusion) {
      if (i == 0) throw ZoneError("resonance search requires the diffusion zone at the range start");
      out.truncated = true;
      out.warning = "scan truncated at " + std::to_string(x) +
                    ": range leaves the diffusion zone";
      break;
    }
    xs.push_back(x);
    qs.push_back(chx.q1.real() * kx.L);
  }

  auto g_at = [&](double x, int n) {
    const Kinematics kx = kinematics_at(k, variable, x);
    const BarrierChannel chx = barrier_channel(kx);
    return chx.q1.real() * kx.L - double(n) * pi;
  };

  for (int n = 1; n <= n_max; ++n) {
    const double target = double(n) * pi;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const double ga = qs[i] - target;
      const double gb = qs[i + 1] - target;
      double root;
      if (ga == 0.0) {
        if (i != 0) continue;  // interior exact hits are caught as the right bracket
        root = xs[i];
      } else if (gb == 0.0) {
        root = xs[i + 1];
      } else if ((ga < 0.0) != (gb < 0.0)) {
        double a = xs[i], b = xs[i + 1], fa = ga;
        root = 0.5 * (a + b);
        for (int it = 0; it < 200; ++it) {
          root = 0.5 * (a + b);
          const double fr = g_at(root, n);
          if (std::abs(fr) <= 1e-12 || a == root || b == root) break;
          if ((fr < 0.0) == (fa < 0.0)) {
            a = root;
            fa = fr;
          } else {
            b = root;
          }
        }
      } else {
        continue;
      }
      const Kinematics kr = kinematics_at(k, variable, root);
      const BarrierChannel chr = barrier_channel(kr);
      const ScatteringAmplitudes a = closed_form_amplitudes(kr, chr);
      out.points.push_back({n, root, std::abs(a.T),
                            std::max(std::abs(a.R), std::abs(a.R_tilde))});
    }
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const ResonancePoint& a, const ResonancePoint& b) { return a.value < b.value; });
  return out;
}

}  // namespace helbar
