#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "helbar/amplitudes.hpp"
#include "helbar/phases.hpp"

namespace helbar {

/// One fully evaluated scattering configuration, as emitted by the CLI.
/// Every row self-validates: the kinematics are re-checked on shell, the
/// zone is classified from scratch, and the unitarity residual is recorded
/// (rows above 1e-9 are flagged).
struct RunRecord {
  // inputs echoed
  double E = 0, angle = 0, m = 0, V0 = 0, L = 0;
  double mag_plus = 0, mag_minus = 0, alpha = 0, beta = 0;
  // derived
  std::string zone;
  double q1_re = 0, q1_im = 0;
  double R_re = 0, R_im = 0;
  double Rt_re = 0, Rt_im = 0;
  double T_re = 0, T_im = 0;
  double r_plus = 0, r_minus = 0, t_plus = 0, t_minus = 0;
  double unitarity_residual = 0;
  bool flagged = false;
  std::string warning;
};

RunRecord evaluate_record(const Kinematics& k, const IncomingState& in,
                          double eps_zone = kDefaultZoneEps);

enum class OutputFormat { Csv, Jsonl };
OutputFormat parse_format(std::string_view s);

/// %.17g, lossless double round trip.
std::string fmt_double(double x);

std::string record_csv_header();
std::string to_csv_row(const RunRecord& r);
std::string to_jsonl(const RunRecord& r);

void print_human(std::ostream& os, const RunRecord& r);

/// Writes lines through a temp file renamed into place, so a failed run
/// leaves no partial output behind.
void write_lines_atomic(const std::string& path, const std::vector<std::string>& lines);

void write_records(const std::string& path, const std::vector<RunRecord>& rows,
                   OutputFormat fmt);

}  // namespace helbar
