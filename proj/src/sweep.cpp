#include "helbar/sweep.hpp"

#include <json.hpp>

namespace helbar {

SweepVariable parse_sweep_variable(std::string_view name) {
  if (name == "E" || name == "e") return SweepVariable::E;
  if (name == "angle") return SweepVariable::Angle;
  if (name == "V0" || name == "v0") return SweepVariable::V0;
  if (name == "L" || name == "l") return SweepVariable::L;
  if (name == "phase") return SweepVariable::Phase;
  throw DomainError("sweep variable must be one of E, angle, V0, L, phase");
}

std::vector<RunRecord> run_sweep(const SweepSpec& spec) {
  if (!(spec.start < spec.stop)) throw DomainError("sweep requires start < stop");
  if (spec.steps < 2) throw DomainError("sweep requires at least 2 steps");

  std::vector<RunRecord> rows;
  rows.reserve(spec.steps);
  for (int i = 0; i < spec.steps; ++i) {
    const double x = spec.start + (spec.stop - spec.start) * double(i) / double(spec.steps - 1);
    BaseInputs b = spec.base;
    IncomingState in = spec.incoming;
    switch (spec.variable) {
      case SweepVariable::E: b.E = x; break;
      case SweepVariable::Angle: b.angle = x; break;
      case SweepVariable::V0: b.V0 = x; break;
      case SweepVariable::L: b.L = x; break;
      case SweepVariable::Phase: in.alpha = in.beta + x; break;
    }
    const Kinematics k = make_kinematics(b.E, b.angle, b.m, b.V0, b.L);
    rows.push_back(evaluate_record(k, in, spec.eps_zone));
  }
  return rows;
}

std::vector<ZoneCell> zone_map(const ZoneMapSpec& spec) {
  if (!(spec.E_start < spec.E_stop) || !(spec.angle_start < spec.angle_stop))
    throw DomainError("zone map requires start < stop on both axes");
  if (spec.E_steps < 2 || spec.angle_steps < 2)
    throw DomainError("zone map requires at least 2 steps per axis");

  std::vector<ZoneCell> cells;
  cells.reserve(std::size_t(spec.E_steps) * std::size_t(spec.angle_steps));
  for (int i = 0; i < spec.E_steps; ++i) {
    const double E = spec.E_start + (spec.E_stop - spec.E_start) * double(i) / double(spec.E_steps - 1);
    for (int j = 0; j < spec.angle_steps; ++j) {
      const double angle = spec.angle_start +
          (spec.angle_stop - spec.angle_start) * double(j) / double(spec.angle_steps - 1);
      const Kinematics k = make_kinematics(E, angle, spec.m, spec.V0, 1.0);
      const BarrierChannel ch = barrier_channel(k, spec.eps_zone);
      cells.push_back({E, angle, k.p1, k.p2, ch.q1_squared, std::string(zone_name(ch.zone))});
    }
  }
  return cells;
}

std::string zone_csv_header() { return "E,angle,p1,p2,q1_squared,zone"; }

std::string to_csv_row(const ZoneCell& c) {
  return fmt_double(c.E) + "," + fmt_double(c.angle) + "," + fmt_double(c.p1) + "," +
         fmt_double(c.p2) + "," + fmt_double(c.q1_squared) + "," + c.zone;
}

std::string to_jsonl(const ZoneCell& c) {
  nlohmann::ordered_json j;
  j["E"] = c.E;
  j["angle"] = c.angle;
  j["p1"] = c.p1;
  j["p2"] = c.p2;
  j["q1_squared"] = c.q1_squared;
  j["zone"] = c.zone;
  return j.dump();
}

}  // namespace helbar
