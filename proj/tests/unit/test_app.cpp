#include <doctest/doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fho/app/commands.hpp"
#include "fho/app/scenario.hpp"
#include "fho/app/verify.hpp"

using namespace fho;
using namespace fho::app;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("fho_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

Scenario quick(ForcingSpec forcing) {
  Scenario s;
  s.forcing = std::move(forcing);
  s.time = {3.0, 7};
  return s;
}

}  // namespace

TEST_CASE("scenario defaults and round trip") {
  const auto s = parse_scenario(nlohmann::json::object());
  CHECK(s.params.mass == 1.0);
  CHECK(s.params.omega == 1.0);
  CHECK(s.time.samples == 101);
  CHECK_FALSE(s.grid.has_value());

  Scenario custom = quick(ForcingSpec::pulse(2.0, 0.5, 1.0));
  custom.grid = GridSpec{-8.0, 8.0, 512, 1e-2};
  const nlohmann::json j = custom;
  const auto back = parse_scenario(j);
  CHECK(nlohmann::json(back) == j);
}

TEST_CASE("invalid scenarios are config errors") {
  CHECK_THROWS_AS(parse_scenario(nlohmann::json::array()), ConfigError);
  CHECK_THROWS_AS(parse_scenario({{"params", {{"mass", -1.0}}}}), ConfigError);
  CHECK_THROWS_AS(parse_scenario({{"time", {{"samples", 1}}}}), ConfigError);
  CHECK_THROWS_AS(parse_scenario({{"time", {{"samples", -5}}}}), ConfigError);
  CHECK_THROWS_AS(parse_scenario({{"forcing", {{"type", "nope"}}}}), ConfigError);
  CHECK_THROWS_AS(parse_scenario({{"grid", {{"points", 100}}}}), ConfigError);
  CHECK_THROWS_AS(parse_scenario({{"quantum", {{"tail_tol", 0.0}}}}), ConfigError);
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), ConfigError);
}

TEST_CASE("classical command writes trajectory and frame CSVs") {
  const auto out = scratch("classical");
  const auto r = run_command(Command::classical, quick(ForcingSpec::zero()), out, {});
  CHECK(r.exit_code == kOk);
  CHECK(first_line(out / "trajectory.csv") == "t,x,p,x_nh,p_nh,invariant");
  CHECK(first_line(out / "frame.csv") == "t,x_nh,xdot_nh,G");

  std::ifstream in(out / "trajectory.csv");
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::stringstream row(line);
    std::string cell;
    for (int i = 0; i < 4; ++i) std::getline(row, cell, ',');
    CHECK(std::stod(cell) == 0.0);
  }
}

TEST_CASE("transitions command under zero forcing stays put") {
  const auto out = scratch("transitions");
  auto s = quick(ForcingSpec::zero());
  s.quantum.n_initial = 2;
  s.quantum.m_max = 4;
  REQUIRE(run_command(Command::transitions, s, out, {}).exit_code == kOk);
  CHECK(first_line(out / "transitions.csv") == "t,n,m,P");
  CHECK(first_line(out / "transitions_summary.csv") == "t,lambda,survival,tail_bound");
  const auto rows = nlohmann::json::parse(slurp(out / "rows.json"));
  REQUIRE(rows.size() == 7);
  for (const auto& row : rows) {
    CHECK(row.at("probabilities").size() == 5);
    CHECK(row.at("probabilities")[2] == 1.0);
  }
}

TEST_CASE("survival and evolve-pde commands") {
  const auto out = scratch("survival");
  REQUIRE(run_command(Command::survival, quick(ForcingSpec::constant(1.0)), out, {}).exit_code == kOk);
  CHECK(first_line(out / "survival.csv") == "t,x_nh,xdot_nh,lambda,survival");

  auto s = quick(ForcingSpec::constant(0.5));
  s.time = {0.5, 3};
  s.grid = GridSpec{-10.0, 10.0, 256, 1e-2};
  const auto pde = scratch("pde");
  REQUIRE(run_command(Command::evolve_pde, s, pde, {}).exit_code == kOk);
  CHECK(first_line(pde / "evolution_log.csv") == "t,norm,energy,overlap_ground");
  CHECK(first_line(pde / "state_final.csv") == "x,re,im,abs2");
}

TEST_CASE("exit-code contract") {
  Scenario bad;
  bad.params.mass = 0.0;
  CHECK(run_command(Command::classical, bad, scratch("bad"), {}).exit_code == kConfigError);

  auto wide = quick(ForcingSpec::constant(8.0));
  wide.time = {3.2, 3};
  CHECK(run_command(Command::evolve_pde, wide, scratch("wide"), {}).exit_code == kNumericError);

  RunOptions no_tol;
  no_tol.tol = 0.0;
  CHECK(run_command(Command::classical, quick(ForcingSpec::zero()), scratch("tol"), no_tol).exit_code ==
        kConfigError);
}

TEST_CASE("outputs are bit-stable and independent of --jobs") {
  const auto dir = scratch("jobs");
  fs::create_directories(dir);
  std::vector<Job> jobs;
  for (int i = 0; i < 3; ++i) {
    auto s = quick(ForcingSpec::sinusoid(0.5 + i, 1.1));
    const auto file = dir / ("s" + std::to_string(i) + ".json");
    std::ofstream(file) << nlohmann::json(s).dump();
    jobs.push_back({file, dir / "serial" / file.stem()});
  }
  auto parallel = jobs;
  for (auto& j : parallel) j.out = dir / "parallel" / j.scenario_file.stem();

  for (const auto& r : run_jobs(Command::classical, jobs, {}, 1)) CHECK(r.exit_code == kOk);
  for (const auto& r : run_jobs(Command::classical, parallel, {}, 3)) CHECK(r.exit_code == kOk);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    CHECK(slurp(jobs[i].out / "trajectory.csv") == slurp(parallel[i].out / "trajectory.csv"));
    CHECK(slurp(jobs[i].out / "frame.csv") == slurp(parallel[i].out / "frame.csv"));
  }

  std::vector<Job> broken{{dir / "missing.json", dir / "missing"}};
  CHECK(run_jobs(Command::classical, broken, {}, 2).front().exit_code == kConfigError);
}

TEST_CASE("verify suites") {
  CHECK(check_names(Suite::all).size() >= 15);
  CHECK(check_names(Suite::classical).size() + check_names(Suite::canonical).size() +
            check_names(Suite::quantum).size() ==
        check_names(Suite::all).size());
  CHECK_THROWS_AS(parse_suite("everything"), ConfigError);

  const auto report = run_verification(Scenario{}, Suite::classical);
  CHECK(report.passed());
  const nlohmann::json j = report;
  CHECK(j.at("checks").size() == check_names(Suite::classical).size());
  for (const auto& c : j.at("checks")) {
    CHECK(c.contains("check"));
    CHECK(c.contains("status"));
    CHECK(c.contains("max_error"));
    CHECK(c.contains("tolerance"));
  }
}

TEST_CASE("coarse time step fails the frame-covariance check") {
  Scenario s;
  s.grid = GridSpec{-12.0, 12.0, 1024, 0.1};
  const auto out = scratch("coarse");
  RunOptions options;
  options.suite = Suite::quantum;
  const auto r = run_command(Command::verify, s, out, options);
  CHECK(r.exit_code == kVerifyFailed);
  const auto report = nlohmann::json::parse(slurp(out / "verify_report.json"));
  bool seen = false;
  for (const auto& c : report.at("checks")) {
    if (c.at("check") == "quantum_frame_covariance") {
      seen = true;
      CHECK(c.at("status") == "fail");
      CHECK(c.at("max_error").get<double>() > 1e-4);
    }
  }
  CHECK(seen);
}
