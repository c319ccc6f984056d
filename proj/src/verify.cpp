#include "helbar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <cstdio>
#include <ostream>

#include "helbar/amplitudes.hpp"
#include "helbar/matching.hpp"
#include "helbar/numeric.hpp"
#include "helbar/phases.hpp"
#include "helbar/run_record.hpp"
#include "helbar/sampling.hpp"
#include "helbar/spinors.hpp"

namespace helbar {

namespace {

std::string describe(const Kinematics& k) {
  return "E=" + fmt_double(k.E) + " angle=" + fmt_double(k.angle()) +
         " m=" + fmt_double(k.m) + " V0=" + fmt_double(k.V0) + " L=" + fmt_double(k.L);
}

struct Accum {
  double max_residual = 0.0;
  std::string worst;

  void update(double r, const std::string& who) {
    if (r > max_residual || worst.empty()) {
      max_residual = std::max(r, max_residual);
      worst = who;
    }
  }
};

double rel_diff(complexd a, complexd b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

CheckResult finish(const std::string& name, const Accum& acc, double tol,
                   double tol_override) {
  const double t = tol_override > 0.0 ? tol_override : tol;
  return {name, acc.max_residual, t, acc.max_residual <= t, acc.worst};
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt) {
  if (opt.samples < 1) throw DomainError("verify requires at least one sample");
  if (opt.zones.empty()) throw DomainError("verify requires at least one zone");

  VerifyReport report;
  report.options = opt;

  Accum oracle, transfer, unitarity, eigen, norm, orth, head_on, resonance, law, round_trip;

  // Oracle equivalence, transfer-matrix identity, unitarity: per-zone samples.
  {
    Sampler rng(opt.seed);
    for (EnergyZone zone : opt.zones) {
      for (int i = 0; i < opt.samples; ++i) {
        const Kinematics k = sample_kinematics(rng, zone);
        const BarrierChannel ch = barrier_channel(k);
        const ScatteringAmplitudes a = closed_form_amplitudes(k, ch);
        const std::string who = describe(k);

        const FullSolution fs = solve_continuity(k, ch, 1.0, 0.0);
        const double d_oracle =
            std::max({rel_diff(a.R, fs.R_plus), rel_diff(a.R_tilde, fs.R_minus),
                      rel_diff(a.T, fs.T_plus), std::abs(fs.T_minus)});
        oracle.update(d_oracle, who);

        const MatchMatrices mm = transfer_matrix_numeric(k, ch);
        const Mat4 mc = transfer_matrix_closed(k, ch).as_matrix();
        const double scale = std::max(1.0, mc.cwiseAbs().maxCoeff());
        transfer.update((mm.M - mc).cwiseAbs().maxCoeff() / scale, who);

        unitarity.update(unitarity_residual(a), who);
      }
    }
  }

  // Spinor suite on free kinematics.
  {
    Sampler rng(opt.seed + 1);
    for (int i = 0; i < opt.samples; ++i) {
      const double p1 = rng.uniform(0.05, 3.0);
      const double p2 = rng.uniform(-3.0, 3.0);
      const double m = 1.0;
      const double E = std::sqrt(p1 * p1 + p2 * p2 + m * m);
      const std::string who =
          "p1=" + fmt_double(p1) + " p2=" + fmt_double(p2) + " m=" + fmt_double(m);
      const Spinor4 plus = helicity_spinor({+1, +1}, p1, p2, E, m);
      const Spinor4 minus = helicity_spinor({-1, +1}, p1, p2, E, m);
      const Mat4 h = helicity_operator(p1, p2);
      eigen.update(std::max((h * plus - plus).cwiseAbs().maxCoeff(),
                            (h * minus + minus).cwiseAbs().maxCoeff()),
                   who);
      norm.update(std::max(std::abs(plus.squaredNorm() - 1.0),
                           std::abs(minus.squaredNorm() - 1.0)),
                  who);
      orth.update(std::abs(plus.dot(minus)), who);
    }
  }

  // Head-on collisions: the conserving reflection must vanish identically.
  {
    Sampler rng(opt.seed + 2);
    for (EnergyZone zone : opt.zones) {
      for (int i = 0; i < opt.samples; ++i) {
        const Kinematics oblique = sample_kinematics(rng, zone);
        const Kinematics k = kinematics_from_momenta(oblique.momentum(), 0.0, oblique.m,
                                                     oblique.V0, oblique.L);
        const ScatteringAmplitudes a = closed_form_amplitudes(k, barrier_channel(k));
        head_on.update(std::abs(a.R), describe(k));
      }
    }
  }

  // Resonance totality over L-scans, n = 1..5.
  {
    Sampler rng(opt.seed + 3);
    constexpr double pi = std::numbers::pi;
    const int count = std::min(opt.samples, 64);
    for (int i = 0; i < count; ++i) {
      const Kinematics k = sample_kinematics(rng, EnergyZone::Diffusion);
      const double q1 = barrier_channel(k).q1.real();
      const ResonanceScan scan =
          find_resonances(k, ScanVariable::L, 0.5 * pi / q1, 5.5 * pi / q1, 5);
      for (const ResonancePoint& p : scan.points)
        resonance.update(std::max(p.max_abs_R, std::abs(p.abs_T - 1.0)),
                         describe(k) + " n=" + std::to_string(p.n));
    }
  }

  // Interference law against direct evaluation, plus the phase sum rule and
  // the inference round trip. Requires an observable interference term.
  {
    Sampler rng(opt.seed + 4);
    SampleOptions so;
    so.min_abs_angle = 0.15;
    so.min_abs_V0 = 0.15;
    for (EnergyZone zone : opt.zones) {
      int produced = 0;
      int guard = 0;
      while (produced < opt.samples && guard < 100 * opt.samples) {
        ++guard;
        const Kinematics k = sample_kinematics(rng, zone, so);
        const ScatteringAmplitudes a = closed_form_amplitudes(k, barrier_channel(k));
        if (std::abs(a.R) * std::abs(a.R_tilde) < 1e-8) continue;  // unobservable
        ++produced;

        const double mix = rng.uniform(0.15, std::numbers::pi / 2.0 - 0.15);
        const double alpha = rng.uniform(-3.0, 3.0);
        const double beta = rng.uniform(-3.0, 3.0);
        const IncomingState in{std::sin(mix), std::cos(mix), alpha, beta};
        const std::string who = describe(k) + " alpha=" + fmt_double(alpha) +
                                " beta=" + fmt_double(beta);

        const IntensityReport rep = reflected_intensities(a, in);
        const HelicityChannels direct = helicity_channels(a, in.I_plus(), in.I_minus());
        double resid = std::max(std::abs(std::norm(direct.R_plus) - rep.r_plus),
                                std::abs(std::norm(direct.R_minus) - rep.r_minus));

        IncomingState other = in;
        other.alpha = alpha + rng.uniform(0.5, 2.0);
        const IntensityReport rep2 = reflected_intensities(a, other);
        resid = std::max(resid, std::abs((rep.r_plus + rep.r_minus) -
                                         (rep2.r_plus + rep2.r_minus)));
        law.update(resid, who);

        const auto sols = infer_relative_phase(rep.r_plus, rep.r_minus, a,
                                               in.mag_plus, in.mag_minus);
        double rt = 1.0;
        for (double s : sols)
          rt = std::min(rt, std::abs(std::sin(s) - std::sin(alpha - beta)));
        round_trip.update(rt, who);
      }
      if (produced < opt.samples)
        law.update(1.0, "sampler could not reach an observable configuration");
    }
  }

  const double ov = opt.tol_override;
  report.checks.push_back(finish("closed form vs continuity solve", oracle, 1e-10, ov));
  report.checks.push_back(finish("numeric vs closed transfer matrix", transfer, 1e-11, ov));
  report.checks.push_back(finish("unitarity", unitarity, 1e-11, ov));
  report.checks.push_back(finish("helicity eigenvalue", eigen, 1e-13, ov));
  report.checks.push_back(finish("spinor norm", norm, 1e-12, ov));
  report.checks.push_back(finish("spinor orthogonality", orth, 1e-13, ov));
  report.checks.push_back(finish("head-on conserving reflection", head_on, 0.0, ov));
  report.checks.push_back(finish("resonance totality", resonance, 1e-10, ov));
  report.checks.push_back(finish("interference law", law, 1e-12, ov));
  report.checks.push_back(finish("phase inference round trip", round_trip, 1e-10, ov));

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const CheckResult& c) { return c.pass; });
  return report;
}

void print_report(std::ostream& os, const VerifyReport& report) {
  const VerifyOptions& o = report.options;
  os << "helbar verify: samples=" << o.samples << " seed=" << o.seed << " zones=";
  for (std::size_t i = 0; i < o.zones.size(); ++i)
    os << (i ? "," : "") << zone_name(o.zones[i]);
  os << " tol=" << (o.tol_override > 0.0 ? fmt_double(o.tol_override) : "default") << '\n';

  int passed = 0;
  for (const CheckResult& c : report.checks) {
    char tol[32];
    std::snprintf(tol, sizeof(tol), "%.3g", c.tolerance);
    os << "check " << c.name;
    for (std::size_t pad = c.name.size(); pad < 36; ++pad) os << ' ';
    os << " max residual " << fmt_double(c.max_residual) << "  tol " << tol << "  "
       << (c.pass ? "PASS" : "FAIL") << '\n';
    if (!c.pass) os << "  worst sample: " << c.worst_input << '\n';
    if (c.pass) ++passed;
  }
  os << "result: " << (report.all_pass ? "PASS" : "FAIL") << " (" << passed << '/'
     << report.checks.size() << " checks)\n";
}

}  // namespace helbar
