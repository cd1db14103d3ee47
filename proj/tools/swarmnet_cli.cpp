// Command-line front end: run / sweep / analyze / destruction.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "swarmnet/config.hpp"
#include "swarmnet/errors.hpp"
#include "swarmnet/experiment.hpp"
#include "swarmnet/io.hpp"

namespace fs = std::filesystem;
using namespace swarmnet;

namespace {

struct Options {
  std::string config_path;
  std::string out_dir = "swarmnet_out";
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 0;
  int verbosity = 0;
  std::string logs;
  std::optional<std::size_t> iteration;
};

ExperimentConfig load(const Options& opt) {
  auto overrides = opt.overrides;
  if (opt.seed) overrides.push_back("base_seed=" + std::to_string(*opt.seed));
  return parse_config(opt.config_path, overrides);
}

void write_config_record(const fs::path& out, const ExperimentConfig& config) {
  fs::create_directories(out);
  std::ofstream rec(out / kConfigRecordFile);
  rec << "# generator = " << Rng::kGenerator << '\n' << render_config(config);
  if (!rec) throw RunError("cannot write " + (out / kConfigRecordFile).string());
}

int execute_sweep(const Options& opt, bool single_cell) {
  auto config = load(opt);
  if (single_cell) {
    config.objectives.resize(1);
    config.topologies.resize(1);
  }
  const fs::path out = opt.out_dir;
  write_config_record(out, config);

  std::mutex log_mutex;
  const auto observer = [&](const ObjectiveSpec& objective, const TopologySpec& topology,
                            std::size_t rep, const CellRun& run) {
    write_run(out / run_directory(objective, topology, config.params.swarm_size, rep), run,
              objective, topology);
    if (opt.verbosity > 0) {
      std::lock_guard lock(log_mutex);
      std::cerr << to_string(objective.function) << ' '
                << topology.label(config.params.swarm_size) << " rep " << rep
                << ": iterations=" << run.trace.iterations()
                << " final=" << format_real(run.trace.final_fitness)
                << " mean_id=" << format_real(run.mean_id) << '\n';
    }
  };
  const auto result = run_sweep(config, opt.jobs, observer);
  write_summary(out / kSummaryFile, result.rows);
  for (const auto& row : result.rows) {
    std::cout << to_string(row.function) << ' ' << to_string(row.kind) << " k=" << row.k
              << " mean_id=" << format_real(row.mean_id) << " ci=("
              << format_real(row.id_ci.low) << ", " << format_real(row.id_ci.high) << ")"
              << (row.id_ci.degenerate ? " [single repetition]" : "")
              << " final=" << format_real(row.mean_final_fitness) << '\n';
  }
  return 0;
}

int execute_analyze(const Options& opt) {
  const auto config = load(opt);
  const auto count =
      analyze_logs(opt.logs, opt.out_dir, config.window_set, config.id_sample_stride);
  std::cout << "analyzed " << count << " log(s) into " << opt.out_dir << '\n';
  return 0;
}

int execute_destruction(const Options& opt) {
  const auto config = load(opt);
  fs::path log_path = opt.logs;
  if (fs::is_directory(log_path)) log_path /= kLogFile;
  const auto log = read_interaction_log(log_path);
  const std::size_t t = opt.iteration.value_or(log.iterations());
  if (t < 1 || t > log.iterations())
    throw InputError("--iteration must lie in [1, " + std::to_string(log.iterations()) + "]");
  fs::path out = opt.out_dir;
  if (out.extension() != ".csv") out /= "destruction.csv";
  write_destruction_surface(out, destruction_surface(log, t, config.window_set));
  std::cout << "wrote " << out.string() << '\n';
  return 0;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config_path, "Experiment config file (key = value)");
  cmd->add_option("--out", opt.out_dir, "Output directory");
  cmd->add_option("--set", opt.overrides, "Override a config field, key=value (repeatable)")
      ->take_all();
  cmd->add_option("--seed", opt.seed, "Base seed (overrides base_seed)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swarmnet: interaction networks of constricted particle swarms"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("-v,--verbose", opt.verbosity, "Per-run progress on stderr");

  auto* run_cmd = app.add_subcommand("run", "Run one (function, topology) cell");
  auto* sweep_cmd = app.add_subcommand("sweep", "Run every function x topology cell");
  for (auto* cmd : {run_cmd, sweep_cmd}) {
    add_common(cmd, opt);
    cmd->add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)");
  }
  auto* analyze_cmd = app.add_subcommand("analyze", "Recompute ID series from saved logs");
  add_common(analyze_cmd, opt);
  analyze_cmd->add_option("--logs", opt.logs, "Directory searched for interaction logs")
      ->required();
  auto* destruction_cmd =
      app.add_subcommand("destruction", "Destruction surface of one saved run");
  add_common(destruction_cmd, opt);
  destruction_cmd->add_option("--logs", opt.logs, "Run directory or interaction log file")
      ->required();
  destruction_cmd->add_option("--iteration", opt.iteration, "Iteration t (default: last)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run_cmd) return execute_sweep(opt, true);
    if (*sweep_cmd) return execute_sweep(opt, false);
    if (*analyze_cmd) return execute_analyze(opt);
    if (*destruction_cmd) return execute_destruction(opt);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
