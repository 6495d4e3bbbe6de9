#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI/CLI.hpp>

#include "fho/app/commands.hpp"

namespace {

using fho::app::Command;

struct Flags {
  std::vector<std::string> scenarios;
  std::string out;
  unsigned jobs = 1;
  double tol = 1e-12;
  std::string suite = "all";
};

void add_common(CLI::App* sub, Flags& flags) {
  sub->add_option("--scenario", flags.scenarios, "Scenario JSON file (repeatable)")->check(CLI::ExistingFile);
  sub->add_option("--out", flags.out, "Output directory (overrides the scenario's output field)");
  sub->add_option("--jobs", flags.jobs, "Scenarios run in parallel")->check(CLI::PositiveNumber);
  sub->add_option("--tol", flags.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
}

std::vector<fho::app::Job> make_jobs(const Flags& flags) {
  namespace fs = std::filesystem;
  std::vector<fho::app::Job> jobs;
  if (flags.scenarios.empty()) {
    jobs.push_back({{}, flags.out.empty() ? fs::path(fho::app::Scenario{}.output) : fs::path(flags.out)});
    return jobs;
  }
  for (const auto& file : flags.scenarios) {
    fs::path out;
    if (!flags.out.empty()) {
      out = flags.scenarios.size() == 1 ? fs::path(flags.out) : fs::path(flags.out) / fs::path(file).stem();
    } else {
      try {
        out = fho::app::load_scenario(file).output;
      } catch (const fho::app::ConfigError&) {
        out = fho::app::Scenario{}.output;  // the run itself reports the error
      }
    }
    jobs.push_back({file, out});
  }
  return jobs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forced harmonic oscillator: classical, canonical and quantum computations"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"classical", "Trajectory and moving-frame CSVs"},
      {"transitions", "Transition probabilities P_{n,m}(t)"},
      {"survival", "Ground-state survival over time"},
      {"evolve-pde", "Grid Schrodinger evolution from an eigenstate"},
      {"verify", "Run the invariant and oracle checks"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, flags);
    if (name == "verify") {
      sub->add_option("--suite", flags.suite, "classical|canonical|quantum|all")
          ->check(CLI::IsMember({"classical", "canonical", "quantum", "all"}));
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fho::app::kConfigError;
  }

  const auto command = fho::app::parse_command(app.get_subcommands().front()->get_name());
  fho::app::RunOptions options;
  options.tol = flags.tol;
  options.suite = fho::app::parse_suite(flags.suite);

  const auto jobs = make_jobs(flags);
  const auto results = fho::app::run_jobs(command, jobs, options, flags.jobs);
  int exit_code = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const std::string label = jobs[i].scenario_file.empty() ? "default" : jobs[i].scenario_file.string();
    (r.exit_code == 0 ? std::cout : std::cerr) << label << ": " << r.message << '\n';
    exit_code = std::max(exit_code, r.exit_code);
  }
  return exit_code;
}
