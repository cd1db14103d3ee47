#include "swarmnet/pso.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swarmnet/errors.hpp"

namespace swarmnet {

double constriction_factor(double c1, double c2) {
  const double phi = c1 + c2;
  if (!(phi > 4.0))
    throw DomainError("constriction factor requires c1 + c2 > 4 (got " +
                      std::to_string(phi) + ")");
  return 2.0 / std::abs(2.0 - phi - std::sqrt(phi * phi - 4.0 * phi));
}

void PsoParams::validate() const {
  if (!(chi > 0.0 && chi <= 1.0)) throw ConfigError("chi must lie in (0, 1]");
  if (swarm_size < 3) throw ConfigError("swarm_size must be >= 3");
  if (t_max < 1) throw ConfigError("t_max must be >= 1");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
  if (delta_window < 1) throw ConfigError("delta_window must be >= 1");
}

void InteractionLog::append(std::span<const std::uint32_t> choices) {
  if (choices.size() != swarm_size_)
    throw InputError("interaction log: expected " + std::to_string(swarm_size_) +
                     " choices, got " + std::to_string(choices.size()));
  choices_.insert(choices_.end(), choices.begin(), choices.end());
}

std::span<const std::uint32_t> InteractionLog::at(std::size_t t) const {
  if (t < 1 || t > iterations())
    throw InputError("interaction log: iteration " + std::to_string(t) +
                     " outside [1, " + std::to_string(iterations()) + "]");
  return std::span<const std::uint32_t>(choices_).subspan((t - 1) * swarm_size_,
                                                          swarm_size_);
}

double fitness_improvement(double f_prev, double f_curr) {
  if (f_prev == 0.0) return 0.0;
  return (f_prev - f_curr) / std::abs(f_prev);
}

std::size_t best_neighbor(const Swarm& swarm, const TopologyGraph& g, std::size_t i) {
  const auto nbrs = g.neighbors(i);
  std::size_t best = nbrs.front();
  for (std::size_t j : nbrs) {
    // Lists are ascending, so strict comparison keeps the lowest index on ties.
    if (swarm[j].pbest_fitness < swarm[best].pbest_fitness) best = j;
  }
  return best;
}

namespace {

double checked(double fitness, std::size_t particle) {
  if (!std::isfinite(fitness))
    throw RunError("non-finite fitness " + std::to_string(fitness) + " at particle " +
                   std::to_string(particle));
  return fitness;
}

}  // namespace

Swarm initialize_swarm(const Objective& objective, std::size_t swarm_size, Rng& rng) {
  const std::size_t d = objective.dimension();
  const Bounds b = objective.bounds();
  Swarm swarm(swarm_size);
  for (std::size_t i = 0; i < swarm_size; ++i) {
    auto& p = swarm[i];
    p.position.resize(d);
    for (auto& x : p.position) x = b.lower + (b.upper - b.lower) * rng.uniform();
    p.velocity.assign(d, 0.0);
    p.pbest = p.position;
    p.pbest_fitness = checked(objective(p.position), i);
  }
  return swarm;
}

double global_best(const Swarm& swarm) {
  double best = swarm.front().pbest_fitness;
  for (const auto& p : swarm) best = std::min(best, p.pbest_fitness);
  return best;
}

StepResult step(Swarm& swarm, const TopologyGraph& g, const PsoParams& params,
                const Objective& objective, Rng& rng) {
  const std::size_t n = swarm.size();
  StepResult result;
  result.choices.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    result.choices[i] = static_cast<std::uint32_t>(best_neighbor(swarm, g, i));

  for (std::size_t i = 0; i < n; ++i) {
    auto& p = swarm[i];
    const auto& social = swarm[result.choices[i]].pbest;
    for (std::size_t k = 0; k < p.position.size(); ++k) {
      const double r1 = rng.uniform();
      const double r2 = rng.uniform();
      p.velocity[k] = params.chi * (p.velocity[k] +
                                    r1 * params.c1 * (p.pbest[k] - p.position[k]) +
                                    r2 * params.c2 * (social[k] - p.position[k]));
      p.position[k] += p.velocity[k];
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    auto& p = swarm[i];
    const double f = checked(objective(p.position), i);
    if (f < p.pbest_fitness) {
      p.pbest = p.position;
      p.pbest_fitness = f;
    }
  }
  result.global_best = global_best(swarm);
  return result;
}

RunResult run(const Objective& objective, const TopologyGraph& g, const PsoParams& params) {
  params.validate();
  if (g.size() != params.swarm_size)
    throw ConfigError("topology size " + std::to_string(g.size()) +
                      " does not match swarm_size " + std::to_string(params.swarm_size));
  Rng rng(params.rng_seed);
  Swarm swarm = initialize_swarm(objective, params.swarm_size, rng);

  RunResult out{RunTrace{}, InteractionLog(params.swarm_size)};
  auto& trace = out.trace;
  trace.global_best_fitness.reserve(params.t_max);
  trace.fitness_improvement.reserve(params.t_max);

  double previous = global_best(swarm);
  std::size_t stagnant = 0;
  for (std::size_t t = 1; t <= params.t_max; ++t) {
    const StepResult s = step(swarm, g, params, objective, rng);
    const double improvement = fitness_improvement(previous, s.global_best);
    trace.global_best_fitness.push_back(s.global_best);
    trace.fitness_improvement.push_back(improvement);
    out.log.append(s.choices);
    previous = s.global_best;

    // t_s >= 1, so the first counted iteration is t = 2.
    if (t >= 2) stagnant = improvement < params.epsilon ? stagnant + 1 : 0;
    if (stagnant == params.delta_window) {
      trace.converged_at = t - params.delta_window;
      break;
    }
  }
  trace.final_fitness = trace.global_best_fitness.back();
  return out;
}

}  // namespace swarmnet
