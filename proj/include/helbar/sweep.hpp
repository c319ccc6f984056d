#pragma once

#include "helbar/run_record.hpp"

namespace helbar {

enum class SweepVariable { E, Angle, V0, L, Phase };
SweepVariable parse_sweep_variable(std::string_view name);

/// Everything a grid point needs that is not being swept.
struct BaseInputs {
  double E = 2.0;
  double angle = 0.3;
  double m = 1.0;
  double V0 = 2.0;
  double L = 1.0;
};

/// One-parameter grid scan. Phase sweeps vary alpha - beta by moving alpha.
struct SweepSpec {
  SweepVariable variable = SweepVariable::L;
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;
  BaseInputs base;
  IncomingState incoming;
  double eps_zone = kDefaultZoneEps;
};

/// One record per grid point, ordered by index. Throws on an invalid spec or
/// any invalid grid point, so callers never persist partial results.
std::vector<RunRecord> run_sweep(const SweepSpec& spec);

/// Zone classification over an (E, angle) grid at fixed V0 and m.
struct ZoneMapSpec {
  double E_start = 1.01, E_stop = 5.0;
  int E_steps = 64;
  double angle_start = -1.4, angle_stop = 1.4;
  int angle_steps = 64;
  double m = 1.0;
  double V0 = 0.0;
  double eps_zone = kDefaultZoneEps;
};

struct ZoneCell {
  double E = 0, angle = 0, p1 = 0, p2 = 0, q1_squared = 0;
  std::string zone;
};

std::vector<ZoneCell> zone_map(const ZoneMapSpec& spec);

std::string zone_csv_header();
std::string to_csv_row(const ZoneCell& c);
std::string to_jsonl(const ZoneCell& c);

}  // namespace helbar
