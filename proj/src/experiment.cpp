#include "swarmnet/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "swarmnet/errors.hpp"

namespace swarmnet {

std::size_t TopologySpec::degree(std::size_t swarm_size) const {
  switch (kind) {
    case TopologyKind::Ring: return 2;
    case TopologyKind::VonNeumann: return 4;
    case TopologyKind::KRegular: return k;
    case TopologyKind::Global: return swarm_size - 1;
  }
  return k;
}

std::string TopologySpec::label(std::size_t swarm_size) const {
  return std::string(to_string(kind)) + "_" + std::to_string(degree(swarm_size));
}

void ExperimentConfig::validate() const {
  if (objectives.empty()) throw ConfigError("function: at least one function is required");
  for (const auto& o : objectives) o.validate();
  params.validate();
  if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (id_sample_stride < 1) throw ConfigError("id_sample_stride must be >= 1");
  if (window_set.empty()) throw ConfigError("window_set must not be empty");
  for (auto w : window_set)
    if (w < 1) throw ConfigError("window_set entries must be >= 1");
  if (topologies.empty()) throw ConfigError("topologies: at least one topology is required");
  for (const auto& t : topologies) {
    const auto g = t.build(params.swarm_size);
    if (!is_connected(g))
      throw ConfigError("topologies: " + t.label(params.swarm_size) + " is not connected");
  }
}

std::vector<IdSample> sample_diversity(const InteractionLog& log,
                                       std::span<const std::size_t> windows,
                                       std::size_t stride) {
  auto series = diversity_series(log, windows, stride);
  if (series.empty() && log.iterations() > 0) {
    const std::size_t t = log.iterations();
    const auto clipped = clip_windows(windows, t);
    series.push_back({t, interaction_diversity(log, t, clipped).id_value});
  }
  return series;
}

CellRun run_cell(const ExperimentConfig& config, const Objective& objective,
                 const TopologySpec& topology, std::size_t repetition) {
  PsoParams params = config.params;
  params.rng_seed = config.seed_for(repetition);
  const auto graph = topology.build(params.swarm_size);
  auto result = run(objective, graph, params);

  CellRun cell;
  cell.seed = params.rng_seed;
  cell.trace = std::move(result.trace);
  cell.log = std::move(result.log);
  cell.id_series = sample_diversity(cell.log, config.window_set, config.id_sample_stride);

  std::vector<double> ids;
  ids.reserve(cell.id_series.size());
  for (const auto& s : cell.id_series) ids.push_back(s.id_value);
  cell.mean_id = mean(ids);
  cell.mean_fdelta = mean(cell.trace.fitness_improvement);
  return cell;
}

RunOutcome outcome_of(const CellRun& run) {
  return {run.mean_id, run.mean_fdelta, run.trace.final_fitness,
          run.trace.converged_at.has_value(), run.trace.iterations()};
}

SummaryRow summarize(FunctionId function, TopologyKind kind, std::size_t degree,
                     std::span<const RunOutcome> runs) {
  if (runs.empty()) throw InputError("summarize: no runs");
  std::vector<double> ids;
  std::vector<double> finals;
  std::vector<double> fdeltas;
  std::size_t converged = 0;
  for (const auto& r : runs) {
    ids.push_back(r.mean_id);
    finals.push_back(r.final_fitness);
    fdeltas.push_back(r.mean_fdelta);
    if (r.converged) ++converged;
  }
  SummaryRow row;
  row.function = function;
  row.kind = kind;
  row.k = degree;
  row.repetitions = runs.size();
  row.mean_id = mean(ids);
  row.id_ci = t_interval(ids);
  row.mean_final_fitness = mean(finals);
  row.mean_fdelta = mean(fdeltas);
  row.converged_fraction = static_cast<double>(converged) / static_cast<double>(runs.size());
  return row;
}

SweepResult run_sweep(const ExperimentConfig& config, std::size_t jobs,
                      const RunObserver& observer) {
  config.validate();
  std::vector<Objective> objectives;
  objectives.reserve(config.objectives.size());
  for (const auto& spec : config.objectives) objectives.emplace_back(spec);

  const std::size_t n_topo = config.topologies.size();
  const std::size_t reps = config.repetitions;
  const std::size_t n_cells = objectives.size() * n_topo;
  const std::size_t n_tasks = n_cells * reps;

  SweepResult result;
  result.outcomes.assign(n_cells, std::vector<RunOutcome>(reps));
  std::vector<std::exception_ptr> failures(n_tasks);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t task = next++; task < n_tasks; task = next++) {
      const std::size_t cell = task / reps;
      const std::size_t rep = task % reps;
      const auto& objective = objectives[cell / n_topo];
      const auto& topology = config.topologies[cell % n_topo];
      try {
        const CellRun run = run_cell(config, objective, topology, rep);
        result.outcomes[cell][rep] = outcome_of(run);
        if (observer) observer(objective.spec(), topology, rep, run);
      } catch (...) {
        failures[task] = std::current_exception();
      }
    }
  };

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(n_tasks, 1));
  std::vector<std::jthread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  for (std::size_t cell = 0; cell < n_cells; ++cell) {
    const auto& spec = objectives[cell / n_topo].spec();
    const auto& topology = config.topologies[cell % n_topo];
    result.rows.push_back(summarize(spec.function, topology.kind,
                                    topology.degree(config.params.swarm_size),
                                    result.outcomes[cell]));
  }
  return result;
}

}  // namespace swarmnet
