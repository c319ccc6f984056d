#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "helbar/run_record.hpp"
#include "helbar/sweep.hpp"

using namespace helbar;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream is(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("doubles round-trip through the 17-digit format") {
  for (double x : {0.1, 1.0 / 3.0, -2.7182818284590452, 1e-300, 6.02e23, 0.0,
                   std::sqrt(2.0), -0.0, pi}) {
    const std::string s = fmt_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("csv rows line up with the header") {
  const Kinematics k = make_kinematics(2.0, 0.3, 1.0, 4.0, 1.0);
  const RunRecord r = evaluate_record(k, make_incoming(1.0, 0.0, 0.0, 0.0));
  const auto header = split_csv(record_csv_header());
  const auto row = split_csv(to_csv_row(r));
  CHECK(header.size() == row.size());
  CHECK(r.zone == "Klein");
  CHECK(!r.warning.empty());
  CHECK(r.unitarity_residual <= 1e-11);
  CHECK(!r.flagged);
}

TEST_CASE("jsonl records parse back with matching fields") {
  const Kinematics k = make_kinematics(2.0, 0.3, 1.0, 0.7, 1.0);
  const RunRecord r = evaluate_record(k, make_incoming(0.6, 0.8, 0.5, -0.2));
  const auto j = nlohmann::json::parse(to_jsonl(r));
  CHECK(j["E"].get<double>() == r.E);
  CHECK(j["zone"].get<std::string>() == "Diffusion");
  CHECK(j["R_re"].get<double>() == r.R_re);
  CHECK(j["r_plus"].get<double>() == r.r_plus);
  CHECK(j["flagged"].get<bool>() == r.flagged);
}

TEST_CASE("record evaluation is deterministic") {
  const Kinematics k = make_kinematics(2.0, 0.3, 1.0, 2.6, 1.0);
  const IncomingState in = make_incoming(0.6, 0.8, 0.4, 0.1);
  CHECK(to_csv_row(evaluate_record(k, in)) == to_csv_row(evaluate_record(k, in)));
  CHECK(to_jsonl(evaluate_record(k, in)) == to_jsonl(evaluate_record(k, in)));
}

TEST_CASE("sweep grids") {
  SweepSpec spec;
  spec.variable = SweepVariable::L;
  spec.start = 0.5;
  spec.stop = 1.5;
  spec.steps = 2;
  spec.base = {2.0, 0.3, 1.0, 0.7, 1.0};

  SUBCASE("steps = 2 yields exactly the endpoints") {
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 2);
    CHECK(rows.front().L == 0.5);
    CHECK(rows.back().L == 1.5);
  }
  SUBCASE("invalid specs are rejected") {
    spec.steps = 1;
    CHECK_THROWS_AS(run_sweep(spec), DomainError);
    spec.steps = 8;
    spec.stop = spec.start;
    CHECK_THROWS_AS(run_sweep(spec), DomainError);
  }
  SUBCASE("an invalid grid point aborts the whole sweep") {
    spec.variable = SweepVariable::E;
    spec.start = 0.5;  // below the rest mass
    spec.stop = 3.0;
    spec.steps = 8;
    CHECK_THROWS_AS(run_sweep(spec), DomainError);
  }
}

TEST_CASE("width sweep shows the total-transmission spike") {
  const Kinematics k = make_kinematics(1.5, 0.3, 1.0, 0.4, 1.0);
  const double q1 = barrier_channel(k).q1.real();
  const double L1 = pi / q1;

  SweepSpec spec;
  spec.variable = SweepVariable::L;
  spec.start = L1 - 1.0;
  spec.stop = L1 + 1.0;
  spec.steps = 41;  // odd: midpoint lands on the resonance
  spec.base = {1.5, 0.3, 1.0, 0.4, 1.0};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 41);

  const RunRecord& mid = rows[20];
  const double t_mid = std::hypot(mid.T_re, mid.T_im);
  CHECK(std::abs(t_mid - 1.0) <= 1e-10);
  double t_min = 1.0;
  for (const auto& r : rows) t_min = std::min(t_min, std::hypot(r.T_re, r.T_im));
  CHECK(t_min < 0.95);
}

TEST_CASE("phase sweep keeps the reflected pair balanced") {
  SweepSpec spec;
  spec.variable = SweepVariable::Phase;
  spec.start = -pi;
  spec.stop = pi;
  spec.steps = 17;
  spec.base = {2.0, 0.4, 1.0, 1.1, 1.3};
  spec.incoming = make_incoming(std::sin(0.6), std::cos(0.6), 0.0, 0.0);
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 17);
  const double sum0 = rows[0].r_plus + rows[0].r_minus;
  double spread = 0.0;
  for (const auto& r : rows) {
    CHECK(std::abs((r.r_plus + r.r_minus) - sum0) <= 1e-12);
    spread = std::max(spread, std::abs(r.r_plus - rows[0].r_plus));
  }
  CHECK(spread > 1e-3);  // the interference term actually moves intensity
}

TEST_CASE("barrier-height sweep walks through the zones in order") {
  SweepSpec spec;
  spec.variable = SweepVariable::V0;
  spec.start = -1.0;
  spec.stop = 8.0;
  spec.steps = 64;
  spec.base = {2.0, 0.3, 1.0, 0.0, 1.0};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 64);
  // raising V0 moves diffusion -> tunneling -> Klein, never backwards
  int stage = 0;
  for (const auto& r : rows) {
    CHECK(r.unitarity_residual <= 1e-11);
    if (r.zone == "Diffusion") CHECK(stage == 0);
    if (r.zone == "Tunneling") {
      CHECK(stage <= 1);
      stage = 1;
    }
    if (r.zone == "Klein") stage = 2;
  }
  CHECK(stage == 2);
}

TEST_CASE("angle sweep is symmetric for polarized input") {
  SweepSpec spec;
  spec.variable = SweepVariable::Angle;
  spec.start = -0.8;
  spec.stop = 0.8;
  spec.steps = 9;  // odd, symmetric grid
  spec.base = {2.0, 0.0, 1.0, 0.9, 1.2};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 9);
  for (int i = 0; i < 4; ++i) {
    CHECK(rows[i].r_plus == doctest::Approx(rows[8 - i].r_plus).epsilon(1e-12));
    CHECK(rows[i].t_plus == doctest::Approx(rows[8 - i].t_plus).epsilon(1e-12));
  }
}

TEST_CASE("zone map") {
  SUBCASE("free case is all diffusion") {
    ZoneMapSpec spec;
    spec.V0 = 0.0;
    spec.E_steps = 8;
    spec.angle_steps = 8;
    for (const auto& c : zone_map(spec)) CHECK(c.zone == "Diffusion");
  }
  SUBCASE("tall barrier opens a Klein band near threshold") {
    ZoneMapSpec spec;
    spec.V0 = 10.0;
    spec.E_start = 1.05;
    spec.E_stop = 1.2;
    spec.E_steps = 4;
    spec.angle_start = -0.1;
    spec.angle_stop = 0.1;
    spec.angle_steps = 3;
    bool klein_seen = false;
    for (const auto& c : zone_map(spec)) klein_seen |= c.zone == "Klein";
    CHECK(klein_seen);
  }
  SUBCASE("cells agree with the defining inequalities") {
    ZoneMapSpec spec;
    spec.V0 = 2.4;
    spec.E_steps = 24;
    spec.angle_steps = 24;
    for (const auto& c : zone_map(spec)) {
      const double et = std::hypot(c.p2, spec.m);
      if (c.E > spec.V0 + et)
        CHECK(c.zone == "Diffusion");
      else if (c.E < spec.V0 - et && c.E > spec.m)
        CHECK(c.zone == "Klein");
      else if (std::abs(c.q1_squared) > 1e-9)
        CHECK(c.zone == "Tunneling");
    }
  }
}

TEST_CASE("record files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "helbar_records_test";
  fs::remove_all(dir);

  SweepSpec spec;
  spec.variable = SweepVariable::L;
  spec.start = 0.5;
  spec.stop = 2.5;
  spec.steps = 5;
  spec.base = {2.0, 0.3, 1.0, 0.7, 1.0};
  const auto rows = run_sweep(spec);

  SUBCASE("csv files carry one header row") {
    const std::string path = (dir / "rows.csv").string();
    write_records(path, rows, OutputFormat::Csv);
    const auto lines = read_lines(path);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == record_csv_header());
    CHECK(!fs::exists(path + ".tmp"));
  }
  SUBCASE("jsonl files carry one record per line") {
    const std::string path = (dir / "rows.jsonl").string();
    write_records(path, rows, OutputFormat::Jsonl);
    const auto lines = read_lines(path);
    REQUIRE(lines.size() == 5);
    for (const auto& line : lines) CHECK_NOTHROW((void)nlohmann::json::parse(line));
  }
  SUBCASE("identical sweeps produce byte-identical files") {
    const std::string p1 = (dir / "a.csv").string();
    const std::string p2 = (dir / "b.csv").string();
    write_records(p1, run_sweep(spec), OutputFormat::Csv);
    write_records(p2, run_sweep(spec), OutputFormat::Csv);
    std::ifstream f1(p1, std::ios::binary), f2(p2, std::ios::binary);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(!s1.str().empty());
  }
  SUBCASE("a failed write leaves no partial file") {
    const fs::path blocker = dir / "blocker";
    fs::create_directories(dir);
    std::ofstream(blocker.string()) << "regular file\n";
    const std::string path = (blocker / "sub" / "rows.csv").string();
    CHECK_THROWS(write_records(path, rows, OutputFormat::Csv));
    CHECK(!fs::exists(path));
  }

  fs::remove_all(dir);
}

TEST_CASE("format parsing") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("jsonl") == OutputFormat::Jsonl);
  CHECK_THROWS_AS(parse_format("xml"), DomainError);
  CHECK_THROWS_AS(parse_sweep_variable("momentum"), DomainError);
  CHECK(parse_sweep_variable("phase") == SweepVariable::Phase);
}
