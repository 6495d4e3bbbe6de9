#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fho/app/scenario.hpp"
#include "fho/app/verify.hpp"

namespace fho::app {

enum class Command { classical, transitions, survival, evolve_pde, verify };

Command parse_command(const std::string& name);

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kNumericError = 3 };

struct RunOptions {
  double tol = 1e-12;
  Suite suite = Suite::all;
};

struct RunResult {
  int exit_code = kOk;
  std::string message;
  std::vector<std::filesystem::path> files;
};

/// Runs one command for one scenario, writing into `out` (created if needed).
/// Library exceptions are mapped onto the exit-code contract and never escape.
RunResult run_command(Command command, const Scenario& scenario, const std::filesystem::path& out,
                      const RunOptions& options);

struct Job {
  std::filesystem::path scenario_file;  // empty: built-in default scenario
  std::filesystem::path out;
};

/// Loads and runs each job on up to `jobs` worker threads. Results come back
/// in job order; a scenario that fails to load yields kConfigError.
std::vector<RunResult> run_jobs(Command command, const std::vector<Job>& jobs_list,
                                const RunOptions& options, unsigned jobs);

}  // namespace fho::app
