#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "swarmnet/benchmarks.hpp"
#include "swarmnet/interaction_net.hpp"
#include "swarmnet/pso.hpp"
#include "swarmnet/stats.hpp"
#include "swarmnet/topology.hpp"

namespace swarmnet {

struct TopologySpec {
  TopologyKind kind = TopologyKind::Ring;
  std::size_t k = 0;  // only meaningful for KRegular

  TopologyGraph build(std::size_t swarm_size) const { return build_topology(kind, swarm_size, k); }
  // Node degree of the built graph.
  std::size_t degree(std::size_t swarm_size) const;
  // Directory label "<kind>_<degree>", e.g. "ring_2" or "kregular_10".
  std::string label(std::size_t swarm_size) const;

  friend bool operator==(const TopologySpec&, const TopologySpec&) = default;
};

struct ExperimentConfig {
  std::vector<ObjectiveSpec> objectives{make_objective_spec(FunctionId::F2, 1000, 50, 0)};
  std::vector<TopologySpec> topologies{{TopologyKind::Ring, 0}};
  PsoParams params;
  std::size_t repetitions = 30;
  std::vector<std::size_t> window_set{10, 25, 50, 75, 100};
  std::size_t id_sample_stride = 1;
  std::uint64_t base_seed = 0;

  // Throws ConfigError naming the offending field.
  void validate() const;

  std::uint64_t seed_for(std::size_t repetition) const { return base_seed + repetition; }

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct CellRun {
  std::uint64_t seed = 0;
  RunTrace trace;
  InteractionLog log;
  std::vector<IdSample> id_series;
  double mean_id = 0.0;
  double mean_fdelta = 0.0;
};

// diversity_series at the given stride; when the log ends before the first
// sample, the final iteration is sampled instead.
std::vector<IdSample> sample_diversity(const InteractionLog& log,
                                       std::span<const std::size_t> windows,
                                       std::size_t stride);

// One seeded run of a (function, topology) cell with ID sampled through
// sample_diversity.
CellRun run_cell(const ExperimentConfig& config, const Objective& objective,
                 const TopologySpec& topology, std::size_t repetition);

// Per-run numbers kept after the logs of a run are released.
struct RunOutcome {
  double mean_id = 0.0;
  double mean_fdelta = 0.0;
  double final_fitness = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
};

RunOutcome outcome_of(const CellRun& run);

struct SummaryRow {
  FunctionId function = FunctionId::F2;
  TopologyKind kind = TopologyKind::Ring;
  std::size_t k = 0;  // node degree
  std::size_t repetitions = 0;
  double mean_id = 0.0;
  ConfidenceInterval id_ci;
  double mean_final_fitness = 0.0;
  double mean_fdelta = 0.0;
  double converged_fraction = 0.0;
};

SummaryRow summarize(FunctionId function, TopologyKind kind, std::size_t degree,
                     std::span<const RunOutcome> runs);

// Called once per finished run, possibly from several worker threads at once.
using RunObserver = std::function<void(const ObjectiveSpec&, const TopologySpec&,
                                       std::size_t repetition, const CellRun&)>;

struct SweepResult {
  std::vector<SummaryRow> rows;  // function-major, then topology order
  // outcomes[row][repetition]
  std::vector<std::vector<RunOutcome>> outcomes;
};

// Runs every (function, topology, repetition) on up to `jobs` threads
// (0 = hardware concurrency). Results are keyed by cell, so they do not depend
// on completion order.
SweepResult run_sweep(const ExperimentConfig& config, std::size_t jobs,
                      const RunObserver& observer = {});

}  // namespace swarmnet
