#include "fho/app/scenario.hpp"

#include <cmath>
#include <fstream>

#include "fho/errors.hpp"

namespace fho::app {

std::vector<double> TimeSpec::times() const {
  std::vector<double> out(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    out[i] = i + 1 == samples ? t_max : t_max * static_cast<double>(i) / static_cast<double>(samples - 1);
  }
  return out;
}

void Scenario::validate() const {
  try {
    params.validate();
    if (grid) grid->validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (!std::isfinite(time.t_max) || !(time.t_max > 0.0)) throw ConfigError("time.t_max must be > 0");
  if (time.samples < 2) throw ConfigError("time.samples must be >= 2");
  if (quantum.n_initial < 0) throw ConfigError("quantum.n_initial must be >= 0");
  if (quantum.m_max < 0) throw ConfigError("quantum.m_max must be >= 0");
  if (!(quantum.tail_tol > 0.0) || !(quantum.tail_tol < 1.0)) {
    throw ConfigError("quantum.tail_tol must lie in (0, 1)");
  }
  if (!std::isfinite(initial.x) || !std::isfinite(initial.p)) {
    throw ConfigError("initial state must be finite");
  }
}

GridSpec Scenario::grid_or_default() const {
  if (grid) return *grid;
  try {
    return GridSpec::default_for(params);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

void to_json(nlohmann::json& j, const Scenario& s) {
  j = {{"params", {{"mass", s.params.mass}, {"omega", s.params.omega}}},
       {"forcing", s.forcing},
       {"initial", {{"x", s.initial.x}, {"p", s.initial.p}}},
       {"time", {{"t_max", s.time.t_max}, {"samples", s.time.samples}}},
       {"quantum",
        {{"n_initial", s.quantum.n_initial},
         {"m_max", s.quantum.m_max},
         {"tail_tol", s.quantum.tail_tol}}},
       {"output", s.output}};
  if (s.grid) {
    j["grid"] = {{"x_min", s.grid->x_min},
                 {"x_max", s.grid->x_max},
                 {"points", s.grid->points},
                 {"dt", s.grid->dt}};
  }
}

void from_json(const nlohmann::json& j, Scenario& s) {
  s = Scenario{};
  if (auto it = j.find("params"); it != j.end()) {
    s.params.mass = it->value("mass", s.params.mass);
    s.params.omega = it->value("omega", s.params.omega);
  }
  if (auto it = j.find("forcing"); it != j.end()) s.forcing = it->get<ForcingSpec>();
  if (auto it = j.find("initial"); it != j.end()) {
    s.initial.x = it->value("x", 0.0);
    s.initial.p = it->value("p", 0.0);
  }
  if (auto it = j.find("time"); it != j.end()) {
    s.time.t_max = it->value("t_max", s.time.t_max);
    const auto samples = it->value("samples", static_cast<long long>(s.time.samples));
    if (samples < 2) throw ConfigError("time.samples must be >= 2");
    s.time.samples = static_cast<std::size_t>(samples);
  }
  if (auto it = j.find("quantum"); it != j.end()) {
    s.quantum.n_initial = it->value("n_initial", s.quantum.n_initial);
    s.quantum.m_max = it->value("m_max", s.quantum.m_max);
    s.quantum.tail_tol = it->value("tail_tol", s.quantum.tail_tol);
  }
  if (auto it = j.find("grid"); it != j.end() && !it->is_null()) {
    GridSpec g;
    g.x_min = it->value("x_min", g.x_min);
    g.x_max = it->value("x_max", g.x_max);
    const auto points = it->value("points", static_cast<long long>(g.points));
    if (points < 1) throw ConfigError("grid.points must be positive");
    g.points = static_cast<std::size_t>(points);
    g.dt = it->value("dt", g.dt);
    s.grid = g;
  }
  s.output = j.value("output", s.output);
}

Scenario parse_scenario(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("scenario must be a JSON object");
  Scenario s;
  try {
    s = j.get<Scenario>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("scenario: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("scenario: ") + e.what());
  }
  s.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("scenario " + path.string() + ": " + e.what());
  }
  return parse_scenario(j);
}

}  // namespace fho::app
