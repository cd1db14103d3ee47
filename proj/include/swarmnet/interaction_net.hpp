#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "swarmnet/pso.hpp"

namespace swarmnet {

struct WeightedEdge {
  std::uint32_t i = 0;  // i < j
  std::uint32_t j = 0;
  std::uint32_t weight = 0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Interaction network over a time window: the weight of {i, j} counts how often
// i was the best neighbor of j or j the best neighbor of i. Only edges with a
// positive weight are stored, ordered by (i, j).
class WeightedNetwork {
 public:
  WeightedNetwork(std::size_t node_count, std::size_t window,
                  std::vector<WeightedEdge> edges);

  std::size_t node_count() const { return node_count_; }
  std::size_t window() const { return window_; }
  // Largest possible weight, 2 * window.
  std::size_t max_weight() const { return 2 * window_; }
  std::span<const WeightedEdge> edges() const { return edges_; }

  // Weight of {i, j} in either order; 0 when absent or i == j.
  std::uint32_t weight(std::size_t i, std::size_t j) const;
  std::uint64_t total_weight() const;

  friend bool operator==(const WeightedNetwork&, const WeightedNetwork&) = default;

 private:
  std::size_t node_count_;
  std::size_t window_;
  std::vector<WeightedEdge> edges_;
};

// Network from iterations (t - t_w, t] of the log.
// Throws InputError unless 1 <= t_w <= t <= log.iterations().
WeightedNetwork build_network(const InteractionLog& log, std::size_t t, std::size_t t_w);

// Connected components after dropping every edge whose normalized weight
// weight / (2 t_w) is below tau. Isolated nodes count as components.
std::size_t count_components(const WeightedNetwork& net, double tau);

struct DestructionCurve {
  std::vector<double> thresholds;         // k / (2 t_w), k = 0 .. 2 t_w
  std::vector<std::size_t> components;    // non-decreasing
};

DestructionCurve destruction_curve(const WeightedNetwork& net);

// Mean component count over the threshold grid, in [1, node_count].
double area_under_destruction(const DestructionCurve& curve);

struct DiversityReport {
  std::vector<std::size_t> windows;  // ascending
  std::vector<double> areas;         // A_tw, aligned with windows
  double id_value = 0.0;
};

// ID(t) = 1 - sum(A_tw) / (|S| |T|). Areas are summed in ascending window
// order. Throws InputError when T is empty or a window exceeds t.
DiversityReport interaction_diversity(const InteractionLog& log, std::size_t t,
                                      std::span<const std::size_t> windows);

// Windows longer than t shrink to t, so ID is defined from iteration 1.
std::vector<std::size_t> clip_windows(std::span<const std::size_t> windows, std::size_t t);

// Incrementally maintained network over the most recent `window` iterations.
class SlidingNetwork {
 public:
  SlidingNetwork(std::size_t node_count, std::size_t window);

  // Adds the next iteration's choices, evicting the oldest beyond the window.
  void push(std::span<const std::uint32_t> choices);

  std::size_t window() const { return window_; }
  // Iterations currently covered, min(window, pushed).
  std::size_t covered() const { return history_.size() / node_count_; }

  WeightedNetwork snapshot() const;

 private:
  void apply(std::span<const std::uint32_t> choices, int sign);

  std::size_t node_count_;
  std::size_t window_;
  std::vector<std::uint32_t> counts_;    // dense, upper triangle used
  std::vector<std::uint32_t> history_;   // ring of the covered iterations
  std::size_t oldest_ = 0;
};

struct IdSample {
  std::size_t iteration = 0;
  double id_value = 0.0;

  friend bool operator==(const IdSample&, const IdSample&) = default;
};

// ID at every iteration t with t % stride == 0, windows clipped to t.
// Equal to interaction_diversity(log, t, clip_windows(windows, t)).
std::vector<IdSample> diversity_series(const InteractionLog& log,
                                       std::span<const std::size_t> windows,
                                       std::size_t stride);

// Destruction curves of all windows (clipped to t) at iteration t.
struct DestructionSurfaceRow {
  std::size_t window = 0;
  double threshold = 0.0;
  std::size_t components = 0;
};
std::vector<DestructionSurfaceRow> destruction_surface(const InteractionLog& log,
                                                       std::size_t t,
                                                       std::span<const std::size_t> windows);

}  // namespace swarmnet
