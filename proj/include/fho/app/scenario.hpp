#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fho/classical.hpp"
#include "fho/forcing.hpp"
#include "fho/schrodinger.hpp"

namespace fho::app {

/// Malformed or invalid scenario configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TimeSpec {
  double t_max = 6.283185307179586;
  std::size_t samples = 101;

  /// samples equally spaced times from 0 to t_max inclusive.
  std::vector<double> times() const;
};

struct QuantumSpec {
  int n_initial = 0;
  int m_max = 10;
  double tail_tol = 1e-12;
};

/// One run of the command-line tool. Missing JSON fields take the defaults
/// below (see schemas/scenario.schema.json).
struct Scenario {
  OscillatorParams params;
  ForcingSpec forcing = ForcingSpec::constant(1.0);
  PhaseState initial;
  TimeSpec time;
  QuantumSpec quantum;
  std::optional<GridSpec> grid;
  std::string output = "out";

  /// Throws ConfigError if any component invariant is violated.
  void validate() const;

  /// The configured grid, or GridSpec::default_for(params).
  GridSpec grid_or_default() const;
};

void to_json(nlohmann::json& j, const Scenario& s);
void from_json(const nlohmann::json& j, Scenario& s);

/// Parses and validates; every failure surfaces as ConfigError.
Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace fho::app
