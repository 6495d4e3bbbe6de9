#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fho/app/scenario.hpp"

namespace fho::app {

enum class Suite { classical, canonical, quantum, all };

/// Throws ConfigError for anything other than classical|canonical|quantum|all.
Suite parse_suite(const std::string& name);
std::string to_string(Suite suite);

struct CheckResult {
  std::string check;
  std::string suite;
  std::string status;  // "pass", "fail" or "error"
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string detail;
  double seconds = 0.0;

  bool passed() const { return status == "pass"; }
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

void to_json(nlohmann::json& j, const CheckResult& r);
void to_json(nlohmann::json& j, const VerifyReport& r);

/// Names of the checks a suite runs, in execution order.
std::vector<std::string> check_names(Suite suite);

/// Runs every invariant check of the suite against the scenario. Randomized
/// checks use fixed seeds. `tol` is the quadrature tolerance handed to the
/// library; check thresholds are fixed per check.
VerifyReport run_verification(const Scenario& scenario, Suite suite, double tol = 1e-12);

}  // namespace fho::app
