// helbar: planar Dirac scattering of helicity plane waves off a stratified
// electrostatic barrier. Subcommands evaluate single configurations, run
// parameter sweeps, map energy zones, locate transmission resonances, scan
// relative phases, and self-verify against an independent continuity solve.

#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "helbar/amplitudes.hpp"
#include "helbar/phases.hpp"
#include "helbar/run_record.hpp"
#include "helbar/sweep.hpp"
#include "helbar/verify.hpp"

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct CommonFlags {
  double E = 2.0;
  double angle = 0.0;
  double m = 1.0;
  double V0 = 2.0;
  double L = 1.0;
  double mag_plus = 1.0;
  double mag_minus = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  bool deg = false;
  std::string out;
  std::string format = "csv";
};

void add_kinematics_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--E", f.E, "Total energy in units of m");
  cmd->add_option("--angle", f.angle, "Incidence angle (radians unless --deg)");
  cmd->add_option("--m", f.m, "Rest mass (sets the unit scale)");
  cmd->add_option("--V0", f.V0, "Barrier height");
  cmd->add_option("--L", f.L, "Barrier width (units of 1/m)");
  cmd->add_flag("--deg", f.deg, "Interpret angles and phases in degrees");
}

void add_incoming_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--Iplus-mag", f.mag_plus, "|I+| of the incoming state");
  cmd->add_option("--Iminus-mag", f.mag_minus, "|I-| of the incoming state");
  cmd->add_option("--alpha", f.alpha, "Phase of I+ (radians unless --deg)");
  cmd->add_option("--beta", f.beta, "Phase of I- (radians unless --deg)");
}

void add_output_flags(CLI::App* cmd, CommonFlags& f, bool required) {
  auto* opt = cmd->add_option("--out", f.out, "Output file path");
  if (required) opt->required();
  cmd->add_option("--format", f.format, "Output format: csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
}

void to_radians(CommonFlags& f) {
  if (!f.deg) return;
  f.angle *= kDegToRad;
  f.alpha *= kDegToRad;
  f.beta *= kDegToRad;
}

helbar::IncomingState incoming_from(const CommonFlags& f) {
  return helbar::make_incoming(f.mag_plus, f.mag_minus, f.alpha, f.beta);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar Dirac scattering off a stratified electrostatic barrier"};
  app.require_subcommand(1);

  CommonFlags f;

  // amplitudes
  auto* cmd_amp = app.add_subcommand("amplitudes", "Evaluate one configuration");
  add_kinematics_flags(cmd_amp, f);
  add_incoming_flags(cmd_amp, f);
  add_output_flags(cmd_amp, f, false);

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "Scan one variable over a grid");
  std::string sweep_variable = "L";
  double sweep_start = 0.1, sweep_stop = 5.0;
  int sweep_steps = 128;
  cmd_sweep->add_option("--variable", sweep_variable, "One of E, angle, V0, L, phase")
      ->check(CLI::IsMember({"E", "angle", "V0", "L", "phase"}));
  cmd_sweep->add_option("--start", sweep_start, "Grid start")->required();
  cmd_sweep->add_option("--stop", sweep_stop, "Grid stop")->required();
  cmd_sweep->add_option("--steps", sweep_steps, "Grid points (>= 2)");
  add_kinematics_flags(cmd_sweep, f);
  add_incoming_flags(cmd_sweep, f);
  add_output_flags(cmd_sweep, f, true);

  // zones
  auto* cmd_zones = app.add_subcommand("zones", "Classify energy zones over an (E, angle) grid");
  helbar::ZoneMapSpec zspec;
  cmd_zones->add_option("--E-start", zspec.E_start, "Energy grid start");
  cmd_zones->add_option("--E-stop", zspec.E_stop, "Energy grid stop");
  cmd_zones->add_option("--E-steps", zspec.E_steps, "Energy grid points");
  cmd_zones->add_option("--angle-start", zspec.angle_start, "Angle grid start");
  cmd_zones->add_option("--angle-stop", zspec.angle_stop, "Angle grid stop");
  cmd_zones->add_option("--angle-steps", zspec.angle_steps, "Angle grid points");
  cmd_zones->add_option("--m", zspec.m, "Rest mass");
  cmd_zones->add_option("--V0", zspec.V0, "Barrier height");
  bool zones_deg = false;
  cmd_zones->add_flag("--deg", zones_deg, "Interpret angles in degrees");
  std::string zones_out, zones_format = "csv";
  cmd_zones->add_option("--out", zones_out, "Output file path")->required();
  cmd_zones->add_option("--format", zones_format, "Output format: csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  // resonances
  auto* cmd_res = app.add_subcommand("resonances", "Locate total-transmission points");
  std::string res_variable = "L";
  double res_start = 0.1, res_stop = 10.0;
  int res_nmax = 5, res_grid = 2048;
  cmd_res->add_option("--variable", res_variable, "One of L, E, angle")
      ->check(CLI::IsMember({"L", "E", "angle"}));
  cmd_res->add_option("--start", res_start, "Scan start")->required();
  cmd_res->add_option("--stop", res_stop, "Scan stop")->required();
  cmd_res->add_option("--n-max", res_nmax, "Highest resonance index");
  cmd_res->add_option("--grid", res_grid, "Bracketing grid points");
  add_kinematics_flags(cmd_res, f);
  add_output_flags(cmd_res, f, false);

  // phase-scan (sugar for sweep --variable phase)
  auto* cmd_phase = app.add_subcommand("phase-scan", "Sweep the incoming relative phase");
  double phase_start = -std::numbers::pi, phase_stop = std::numbers::pi;
  int phase_steps = 128;
  cmd_phase->add_option("--start", phase_start, "Relative-phase start");
  cmd_phase->add_option("--stop", phase_stop, "Relative-phase stop");
  cmd_phase->add_option("--steps", phase_steps, "Grid points (>= 2)");
  add_kinematics_flags(cmd_phase, f);
  add_incoming_flags(cmd_phase, f);
  add_output_flags(cmd_phase, f, true);

  // demo-isospin
  auto* cmd_iso = app.add_subcommand("demo-isospin", "Cross-section ratio of a mixed two-state beam");
  double iso_theta = 0.0, iso_alpha = 0.0;
  bool iso_deg = false;
  cmd_iso->add_option("--theta", iso_theta, "Mixing angle");
  cmd_iso->add_option("--alpha", iso_alpha, "Relative phase");
  cmd_iso->add_flag("--deg", iso_deg, "Interpret inputs in degrees");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "Run the self-verification battery");
  helbar::VerifyOptions vopt;
  std::vector<std::string> verify_zones;
  cmd_verify->add_option("--samples", vopt.samples, "Samples per zone");
  cmd_verify->add_option("--seed", vopt.seed, "Sampler seed");
  cmd_verify->add_option("--tol", vopt.tol_override, "Override every check tolerance");
  cmd_verify->add_option("--zones", verify_zones, "Zones to sample (diffusion, klein, tunneling)")
      ->check(CLI::IsMember({"diffusion", "klein", "tunneling"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    to_radians(f);

    if (*cmd_amp) {
      const helbar::Kinematics k = helbar::make_kinematics(f.E, f.angle, f.m, f.V0, f.L);
      const helbar::RunRecord r = helbar::evaluate_record(k, incoming_from(f));
      helbar::print_human(std::cout, r);
      if (!f.out.empty())
        helbar::write_records(f.out, {r}, helbar::parse_format(f.format));
      return 0;
    }

    if (*cmd_sweep || *cmd_phase) {
      helbar::SweepSpec spec;
      if (*cmd_phase) {
        spec.variable = helbar::SweepVariable::Phase;
        spec.start = f.deg ? phase_start * kDegToRad : phase_start;
        spec.stop = f.deg ? phase_stop * kDegToRad : phase_stop;
        spec.steps = phase_steps;
      } else {
        spec.variable = helbar::parse_sweep_variable(sweep_variable);
        const bool angular = spec.variable == helbar::SweepVariable::Angle ||
                             spec.variable == helbar::SweepVariable::Phase;
        spec.start = (f.deg && angular) ? sweep_start * kDegToRad : sweep_start;
        spec.stop = (f.deg && angular) ? sweep_stop * kDegToRad : sweep_stop;
        spec.steps = sweep_steps;
      }
      spec.base = {f.E, f.angle, f.m, f.V0, f.L};
      spec.incoming = incoming_from(f);
      const auto rows = helbar::run_sweep(spec);
      helbar::write_records(f.out, rows, helbar::parse_format(f.format));
      std::cout << "wrote " << rows.size() << " records to " << f.out << '\n';
      return 0;
    }

    if (*cmd_zones) {
      if (zones_deg) {
        zspec.angle_start *= kDegToRad;
        zspec.angle_stop *= kDegToRad;
      }
      const auto cells = helbar::zone_map(zspec);
      std::vector<std::string> lines;
      lines.reserve(cells.size() + 1);
      if (zones_format == "csv") {
        lines.push_back(helbar::zone_csv_header());
        for (const auto& c : cells) lines.push_back(helbar::to_csv_row(c));
      } else {
        for (const auto& c : cells) lines.push_back(helbar::to_jsonl(c));
      }
      helbar::write_lines_atomic(zones_out, lines);
      std::cout << "wrote " << cells.size() << " cells to " << zones_out << '\n';
      return 0;
    }

    if (*cmd_res) {
      const helbar::Kinematics k = helbar::make_kinematics(f.E, f.angle, f.m, f.V0, f.L);
      const bool angular = res_variable == "angle";
      const double lo = (f.deg && angular) ? res_start * kDegToRad : res_start;
      const double hi = (f.deg && angular) ? res_stop * kDegToRad : res_stop;
      const auto scan = helbar::find_resonances(k, helbar::parse_scan_variable(res_variable),
                                                lo, hi, res_nmax, res_grid);
      std::cout << "n  " << res_variable << "  |T|  max|R|\n";
      for (const auto& p : scan.points)
        std::cout << p.n << "  " << helbar::fmt_double(p.value) << "  "
                  << helbar::fmt_double(p.abs_T) << "  "
                  << helbar::fmt_double(p.max_abs_R) << '\n';
      if (scan.truncated) std::cout << "warning: " << scan.warning << '\n';
      std::cout << scan.points.size() << " resonance point(s)\n";
      if (!f.out.empty()) {
        std::vector<std::string> lines;
        if (helbar::parse_format(f.format) == helbar::OutputFormat::Csv) {
          lines.push_back("n,value,abs_T,max_abs_R");
          for (const auto& p : scan.points)
            lines.push_back(std::to_string(p.n) + "," + helbar::fmt_double(p.value) + "," +
                            helbar::fmt_double(p.abs_T) + "," + helbar::fmt_double(p.max_abs_R));
        } else {
          for (const auto& p : scan.points)
            lines.push_back(std::string("{\"n\":") + std::to_string(p.n) +
                            ",\"value\":" + helbar::fmt_double(p.value) +
                            ",\"abs_T\":" + helbar::fmt_double(p.abs_T) +
                            ",\"max_abs_R\":" + helbar::fmt_double(p.max_abs_R) + "}");
        }
        helbar::write_lines_atomic(f.out, lines);
      }
      return 0;
    }

    if (*cmd_iso) {
      const double th = iso_deg ? iso_theta * kDegToRad : iso_theta;
      const double al = iso_deg ? iso_alpha * kDegToRad : iso_alpha;
      std::cout << "ratio " << helbar::fmt_double(helbar::isospin_ratio(th, al)) << '\n';
      return 0;
    }

    if (*cmd_verify) {
      if (!verify_zones.empty()) {
        vopt.zones.clear();
        for (const auto& z : verify_zones) vopt.zones.push_back(helbar::parse_zone(z));
      }
      const helbar::VerifyReport report = helbar::run_verify(vopt);
      helbar::print_report(std::cout, report);
      return report.all_pass ? 0 : 1;
    }
  } catch (const helbar::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  return 0;
}
