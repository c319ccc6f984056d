#include "helbar/run_record.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace helbar {

RunRecord evaluate_record(const Kinematics& k, const IncomingState& in, double eps_zone) {
  validate(k);
  const BarrierChannel ch = barrier_channel(k, eps_zone);
  const ScatteringAmplitudes amp = closed_form_amplitudes(k, ch);
  const IntensityReport ir = reflected_intensities(amp, in);

  RunRecord r;
  r.E = k.E;
  r.angle = k.angle();
  r.m = k.m;
  r.V0 = k.V0;
  r.L = k.L;
  r.mag_plus = in.mag_plus;
  r.mag_minus = in.mag_minus;
  r.alpha = in.alpha;
  r.beta = in.beta;
  r.zone = std::string(zone_name(ch.zone));
  r.q1_re = ch.q1.real();
  r.q1_im = ch.q1.imag();
  r.R_re = amp.R.real();
  r.R_im = amp.R.imag();
  r.Rt_re = amp.R_tilde.real();
  r.Rt_im = amp.R_tilde.imag();
  r.T_re = amp.T.real();
  r.T_im = amp.T.imag();
  r.r_plus = ir.r_plus;
  r.r_minus = ir.r_minus;
  r.t_plus = ir.t_plus;
  r.t_minus = ir.t_minus;
  r.unitarity_residual = unitarity_residual(amp);
  r.flagged = r.unitarity_residual > 1e-9;
  r.warning = amp.warning;
  return r;
}

OutputFormat parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "jsonl") return OutputFormat::Jsonl;
  throw DomainError("output format must be csv or jsonl");
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string record_csv_header() {
  return "E,angle,m,V0,L,Iplus_mag,Iminus_mag,alpha,beta,zone,"
         "q1_re,q1_im,R_re,R_im,Rtilde_re,Rtilde_im,T_re,T_im,"
         "r_plus,r_minus,t_plus,t_minus,unitarity_residual,flagged,warning";
}

std::string to_csv_row(const RunRecord& r) {
  std::ostringstream os;
  os << fmt_double(r.E) << ',' << fmt_double(r.angle) << ',' << fmt_double(r.m) << ','
     << fmt_double(r.V0) << ',' << fmt_double(r.L) << ','
     << fmt_double(r.mag_plus) << ',' << fmt_double(r.mag_minus) << ','
     << fmt_double(r.alpha) << ',' << fmt_double(r.beta) << ','
     << r.zone << ','
     << fmt_double(r.q1_re) << ',' << fmt_double(r.q1_im) << ','
     << fmt_double(r.R_re) << ',' << fmt_double(r.R_im) << ','
     << fmt_double(r.Rt_re) << ',' << fmt_double(r.Rt_im) << ','
     << fmt_double(r.T_re) << ',' << fmt_double(r.T_im) << ','
     << fmt_double(r.r_plus) << ',' << fmt_double(r.r_minus) << ','
     << fmt_double(r.t_plus) << ',' << fmt_double(r.t_minus) << ','
     << fmt_double(r.unitarity_residual) << ','
     << (r.flagged ? 1 : 0) << ',' << csv_escape(r.warning);
  return os.str();
}

std::string to_jsonl(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["E"] = r.E;
  j["angle"] = r.angle;
  j["m"] = r.m;
  j["V0"] = r.V0;
  j["L"] = r.L;
  j["Iplus_mag"] = r.mag_plus;
  j["Iminus_mag"] = r.mag_minus;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["zone"] = r.zone;
  j["q1_re"] = r.q1_re;
  j["q1_im"] = r.q1_im;
  j["R_re"] = r.R_re;
  j["R_im"] = r.R_im;
  j["Rtilde_re"] = r.Rt_re;
  j["Rtilde_im"] = r.Rt_im;
  j["T_re"] = r.T_re;
  j["T_im"] = r.T_im;
  j["r_plus"] = r.r_plus;
  j["r_minus"] = r.r_minus;
  j["t_plus"] = r.t_plus;
  j["t_minus"] = r.t_minus;
  j["unitarity_residual"] = r.unitarity_residual;
  j["flagged"] = r.flagged;
  j["warning"] = r.warning;
  return j.dump();
}

void print_human(std::ostream& os, const RunRecord& r) {
  os << "inputs      E=" << fmt_double(r.E) << "  angle=" << fmt_double(r.angle)
     << "  m=" << fmt_double(r.m) << "  V0=" << fmt_double(r.V0)
     << "  L=" << fmt_double(r.L) << '\n'
     << "incoming    |I+|=" << fmt_double(r.mag_plus) << "  |I-|=" << fmt_double(r.mag_minus)
     << "  alpha=" << fmt_double(r.alpha) << "  beta=" << fmt_double(r.beta) << '\n'
     << "zone        " << r.zone << '\n'
     << "q1          " << fmt_double(r.q1_re) << " + " << fmt_double(r.q1_im) << "i\n"
     << "R           " << fmt_double(r.R_re) << " + " << fmt_double(r.R_im) << "i\n"
     << "Rtilde      " << fmt_double(r.Rt_re) << " + " << fmt_double(r.Rt_im) << "i\n"
     << "T           " << fmt_double(r.T_re) << " + " << fmt_double(r.T_im) << "i\n"
     << "intensities r+=" << fmt_double(r.r_plus) << "  r-=" << fmt_double(r.r_minus)
     << "  t+=" << fmt_double(r.t_plus) << "  t-=" << fmt_double(r.t_minus) << '\n'
     << "unitarity   " << fmt_double(r.unitarity_residual)
     << (r.flagged ? "  [FLAGGED]" : "") << '\n';
  if (!r.warning.empty()) os << "warning     " << r.warning << '\n';
}

void write_lines_atomic(const std::string& path, const std::vector<std::string>& lines) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot open output file: " + tmp.string());
    for (const auto& line : lines) os << line << '\n';
    os.flush();
    if (!os) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error("write failed: " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

void write_records(const std::string& path, const std::vector<RunRecord>& rows,
                   OutputFormat fmt) {
  std::vector<std::string> lines;
  lines.reserve(rows.size() + 1);
  if (fmt == OutputFormat::Csv) {
    lines.push_back(record_csv_header());
    for (const auto& r : rows) lines.push_back(to_csv_row(r));
  } else {
    for (const auto& r : rows) lines.push_back(to_jsonl(r));
  }
  write_lines_atomic(path, lines);
}

}  // namespace helbar
