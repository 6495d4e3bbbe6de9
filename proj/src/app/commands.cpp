#include "fho/app/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <memory>
#include <thread>

#include "fho/canonical.hpp"
#include "fho/classical.hpp"
#include "fho/errors.hpp"
#include "fho/format.hpp"
#include "fho/hermite.hpp"
#include "fho/schrodinger.hpp"
#include "fho/transitions.hpp"

namespace fho::app {

namespace {

namespace fs = std::filesystem;

class Outputs {
 public:
  explicit Outputs(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

  std::ofstream open(const std::string& name) {
    files_.push_back(dir_ / name);
    std::ofstream out(files_.back());
    if (!out) throw std::runtime_error("cannot write " + files_.back().string());
    out.precision(17);
    return out;
  }

  std::vector<fs::path> files() const { return files_; }

 private:
  fs::path dir_;
  std::vector<fs::path> files_;
};

CanonicalFrame frame_for(const Scenario& s, double tol) {
  return CanonicalFrame::build(s.params, s.forcing, s.time.t_max, s.time.samples, tol);
}

void cmd_classical(const Scenario& s, Outputs& out, double tol) {
  const auto times = s.time.times();
  const auto traj = trajectory(s.params, s.initial, s.forcing, times, tol);
  auto csv = out.open("trajectory.csv");
  write_trajectory_csv(csv, s.params, traj);
  auto frame_csv = out.open("frame.csv");
  write_frame_csv(frame_csv, frame_for(s, tol));
}

void cmd_transitions(const Scenario& s, Outputs& out, double tol) {
  const auto frame = frame_for(s, tol);
  auto long_csv = out.open("transitions.csv");
  auto summary = out.open("transitions_summary.csv");
  long_csv << "t,n,m,P\n";
  summary << "t,lambda,survival,tail_bound\n";
  auto rows = nlohmann::json::array();
  for (double t : s.time.times()) {
    const auto d = DisplacementParams::from_frame(frame, t);
    auto row = probability_row(s.quantum.n_initial, d, s.quantum.tail_tol);
    for (int m = row.truncation_m + 1; m <= s.quantum.m_max; ++m) {
      row.probabilities.push_back(transition_probability(s.quantum.n_initial, m, d));
    }
    write_transition_rows_csv(long_csv, row);
    csv_row(summary, {t, row.lambda, ground_state_survival(d), row.tail_bound});
    rows.push_back(row);
  }
  auto json = out.open("rows.json");
  json << rows.dump(2) << '\n';
}

void cmd_survival(const Scenario& s, Outputs& out, double tol) {
  const auto frame = frame_for(s, tol);
  auto csv = out.open("survival.csv");
  csv << "t,x_nh,xdot_nh,lambda,survival\n";
  for (double t : s.time.times()) {
    const auto f = frame.at(t);
    const auto d = DisplacementParams::from_sample(s.params, f);
    csv_row(csv, {t, f.x_nh, f.xdot_nh, d.lambda(), ground_state_survival(d)});
  }
}

void cmd_evolve_pde(const Scenario& s, Outputs& out) {
  const auto grid = s.grid_or_default();
  const auto psi0 = eigenstate_wave(s.params, grid, s.quantum.n_initial);
  const auto ground = eigenstate_wave(s.params, grid, 0);
  const double steps = std::ceil(s.time.t_max / grid.dt - 1e-9);
  const auto every = static_cast<std::size_t>(
      std::max(1.0, std::round(steps / static_cast<double>(s.time.samples - 1))));

  auto initial = out.open("state_initial.csv");
  write_state_csv(initial, psi0);
  auto log = out.open("evolution_log.csv");
  log << "t,norm,energy,overlap_ground\n";
  auto record = [&](double t, const WaveFunction& psi) {
    csv_row(log, {t, psi.norm(), lab_energy(s.params, s.forcing, psi, t),
                  std::norm(overlap(ground, psi))});
  };
  record(0.0, psi0);
  const auto psi = evolve_lab(s.params, s.forcing, psi0, s.time.t_max, record, every);
  auto final_csv = out.open("state_final.csv");
  write_state_csv(final_csv, psi);
}

bool cmd_verify(const Scenario& s, Outputs& out, const RunOptions& options) {
  const auto report = run_verification(s, options.suite, options.tol);
  auto json = out.open("verify_report.json");
  json << nlohmann::json(report).dump(2) << '\n';
  return report.passed();
}

std::string summary(const std::vector<fs::path>& files) {
  std::string msg = "wrote";
  for (const auto& f : files) msg += " " + f.string();
  return msg;
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "classical") return Command::classical;
  if (name == "transitions") return Command::transitions;
  if (name == "survival") return Command::survival;
  if (name == "evolve-pde") return Command::evolve_pde;
  if (name == "verify") return Command::verify;
  throw ConfigError("unknown command '" + name + "'");
}

RunResult run_command(Command command, const Scenario& scenario, const fs::path& out,
                      const RunOptions& options) {
  RunResult result;
  std::unique_ptr<Outputs> outputs;
  try {
    scenario.validate();
    if (!(options.tol > 0.0)) throw ConfigError("--tol must be > 0");
    outputs = std::make_unique<Outputs>(out);
    switch (command) {
      case Command::classical: cmd_classical(scenario, *outputs, options.tol); break;
      case Command::transitions: cmd_transitions(scenario, *outputs, options.tol); break;
      case Command::survival: cmd_survival(scenario, *outputs, options.tol); break;
      case Command::evolve_pde: cmd_evolve_pde(scenario, *outputs); break;
      case Command::verify:
        if (!cmd_verify(scenario, *outputs, options)) {
          result.exit_code = kVerifyFailed;
          result.message = "verification failed; ";
        }
        break;
    }
    result.message += summary(outputs->files());
  } catch (const ConfigError& e) {
    result.exit_code = kConfigError;
    result.message = std::string("config error: ") + e.what();
  } catch (const DomainError& e) {
    result.exit_code = kConfigError;
    result.message = std::string("invalid input: ") + e.what();
  } catch (const NumericError& e) {
    result.exit_code = kNumericError;
    result.message = std::string("numeric error: ") + e.what() +
                     " (partial value " + format_double(e.partial_value()) + ")";
  } catch (const BoundaryError& e) {
    result.exit_code = kNumericError;
    result.message = std::string("numeric error: ") + e.what();
  } catch (const std::exception& e) {
    result.exit_code = kNumericError;
    result.message = std::string("error: ") + e.what();
  }
  if (outputs) result.files = outputs->files();
  return result;
}

std::vector<RunResult> run_jobs(Command command, const std::vector<Job>& jobs_list,
                                const RunOptions& options, unsigned jobs) {
  std::vector<RunResult> results(jobs_list.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs_list.size(); i = next++) {
      const auto& job = jobs_list[i];
      try {
        const auto scenario = job.scenario_file.empty() ? Scenario{} : load_scenario(job.scenario_file);
        results[i] = run_command(command, scenario, job.out, options);
      } catch (const ConfigError& e) {
        results[i] = {kConfigError, std::string("config error: ") + e.what(), {}};
      }
    }
  };
  const unsigned n = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(1, jobs_list.size())));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();
  return results;
}

}  // namespace fho::app
