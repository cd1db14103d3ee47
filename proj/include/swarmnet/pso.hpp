#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "swarmnet/benchmarks.hpp"
#include "swarmnet/rng.hpp"
#include "swarmnet/topology.hpp"

namespace swarmnet {

// chi = 2 / |2 - phi - sqrt(phi^2 - 4 phi)| with phi = c1 + c2.
// Throws DomainError unless phi > 4.
double constriction_factor(double c1, double c2);

struct PsoParams {
  double c1 = 2.05;
  double c2 = 2.05;
  double chi = constriction_factor(2.05, 2.05);
  std::size_t swarm_size = 100;
  std::size_t t_max = 10000;
  // Relative improvement below which an iteration counts as stagnant.
  double epsilon = 1e-5;
  // Number of consecutive stagnant iterations that declares convergence.
  std::size_t delta_window = 500;
  std::uint64_t rng_seed = 0;

  void validate() const;  // throws ConfigError

  friend bool operator==(const PsoParams&, const PsoParams&) = default;
};

struct ParticleState {
  std::vector<double> position;
  std::vector<double> velocity;
  std::vector<double> pbest;
  double pbest_fitness = 0.0;
};

using Swarm = std::vector<ParticleState>;

// Best-neighbor choices n_i(t) for every iteration, stored densely.
class InteractionLog {
 public:
  explicit InteractionLog(std::size_t swarm_size = 0) : swarm_size_(swarm_size) {}

  std::size_t swarm_size() const { return swarm_size_; }
  std::size_t iterations() const {
    return swarm_size_ == 0 ? 0 : choices_.size() / swarm_size_;
  }

  // Appends one iteration; choices.size() must equal swarm_size().
  void append(std::span<const std::uint32_t> choices);

  // Choices of iteration t, 1-based. Throws InputError when out of range.
  std::span<const std::uint32_t> at(std::size_t t) const;

  friend bool operator==(const InteractionLog&, const InteractionLog&) = default;

 private:
  std::size_t swarm_size_;
  std::vector<std::uint32_t> choices_;
};

struct RunTrace {
  // Index t-1 holds iteration t.
  std::vector<double> global_best_fitness;
  std::vector<double> fitness_improvement;
  // Iteration t_s after which delta_window stagnant iterations followed.
  std::optional<std::size_t> converged_at;
  double final_fitness = 0.0;

  std::size_t iterations() const { return global_best_fitness.size(); }
  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

// (f_prev - f_curr) / |f_prev|; 0 when f_prev == 0.
double fitness_improvement(double f_prev, double f_curr);

// Neighbor of i with the lowest personal-best fitness; ties go to the lowest
// index. The particle itself never competes.
std::size_t best_neighbor(const Swarm& swarm, const TopologyGraph& g, std::size_t i);

// Positions uniform in the objective bounds, zero velocity, pbest = position.
// Draws are ordered by (particle, dimension).
Swarm initialize_swarm(const Objective& objective, std::size_t swarm_size, Rng& rng);

double global_best(const Swarm& swarm);

struct StepResult {
  std::vector<std::uint32_t> choices;
  double global_best = 0.0;
};

// One synchronous constricted-PSO iteration. All particles pick their best
// neighbor from the current personal bests, then move; personal bests update
// afterwards on strict improvement. Random draws are ordered by
// (particle, dimension, r1 before r2). Throws RunError on non-finite fitness.
StepResult step(Swarm& swarm, const TopologyGraph& g, const PsoParams& params,
                const Objective& objective, Rng& rng);

struct RunResult {
  RunTrace trace;
  InteractionLog log;
};

// Runs until t_max iterations or convergence (delta_window consecutive
// iterations, starting after iteration 1, with improvement below epsilon).
RunResult run(const Objective& objective, const TopologyGraph& g, const PsoParams& params);

}  // namespace swarmnet
