#include "swarmnet/interaction_net.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "swarmnet/errors.hpp"

namespace swarmnet {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
  }

  // True when a and b were in different sets.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

void check_choices(std::span<const std::uint32_t> choices, std::size_t t) {
  const std::size_t n = choices.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (choices[i] >= n || choices[i] == i)
      throw InputError("interaction log: invalid best neighbor " +
                       std::to_string(choices[i]) + " for particle " + std::to_string(i) +
                       " at iteration " + std::to_string(t));
  }
}

std::vector<WeightedEdge> upper_triangle_edges(std::span<const std::uint32_t> dense,
                                               std::size_t n) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (const auto w = dense[i * n + j]; w > 0)
        edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), w});
  return edges;
}

// nets must be ordered by ascending window.
DiversityReport report_from_networks(std::size_t node_count,
                                     std::span<const WeightedNetwork> nets) {
  DiversityReport report;
  double area_sum = 0.0;
  for (const auto& net : nets) {
    const double area = area_under_destruction(destruction_curve(net));
    report.windows.push_back(net.window());
    report.areas.push_back(area);
    area_sum += area;
  }
  report.id_value = 1.0 - area_sum / (static_cast<double>(node_count) *
                                      static_cast<double>(nets.size()));
  return report;
}

}  // namespace

WeightedNetwork::WeightedNetwork(std::size_t node_count, std::size_t window,
                                 std::vector<WeightedEdge> edges)
    : node_count_(node_count), window_(window), edges_(std::move(edges)) {
  for (auto& e : edges_)
    if (e.i > e.j) std::swap(e.i, e.j);
  std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
}

std::uint32_t WeightedNetwork::weight(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  if (i > j) std::swap(i, j);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{i, j},
                                   [](const WeightedEdge& e, const auto& key) {
                                     return e.i != key.first ? e.i < key.first
                                                             : e.j < key.second;
                                   });
  return it != edges_.end() && it->i == i && it->j == j ? it->weight : 0;
}

std::uint64_t WeightedNetwork::total_weight() const {
  std::uint64_t sum = 0;
  for (const auto& e : edges_) sum += e.weight;
  return sum;
}

WeightedNetwork build_network(const InteractionLog& log, std::size_t t, std::size_t t_w) {
  if (t_w < 1 || t_w > t || t > log.iterations())
    throw InputError("build_network requires 1 <= t_w <= t <= " +
                     std::to_string(log.iterations()) + " (t=" + std::to_string(t) +
                     ", t_w=" + std::to_string(t_w) + ")");
  const std::size_t n = log.swarm_size();
  std::vector<std::uint32_t> dense(n * n, 0);
  for (std::size_t tp = t - t_w + 1; tp <= t; ++tp) {
    const auto choices = log.at(tp);
    check_choices(choices, tp);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t c = choices[i];
      const std::size_t a = std::min(i, c), b = std::max(i, c);
      ++dense[a * n + b];
    }
  }
  return {n, t_w, upper_triangle_edges(dense, n)};
}

std::size_t count_components(const WeightedNetwork& net, double tau) {
  const double scale = static_cast<double>(net.max_weight());
  DisjointSet sets(net.node_count());
  std::size_t components = net.node_count();
  for (const auto& e : net.edges())
    if (static_cast<double>(e.weight) / scale >= tau && sets.unite(e.i, e.j)) --components;
  return components;
}

DestructionCurve destruction_curve(const WeightedNetwork& net) {
  const std::size_t top = net.max_weight();
  std::vector<WeightedEdge> edges(net.edges().begin(), net.edges().end());
  std::stable_sort(edges.begin(), edges.end(),
                   [](const WeightedEdge& a, const WeightedEdge& b) {
                     return a.weight > b.weight;
                   });

  // Sweep the threshold downward; integer weight >= k is exactly the
  // normalized comparison weight / (2 t_w) >= k / (2 t_w).
  DestructionCurve curve;
  curve.thresholds.resize(top + 1);
  curve.components.resize(top + 1);
  DisjointSet sets(net.node_count());
  std::size_t components = net.node_count();
  std::size_t next = 0;
  for (std::size_t k = top + 1; k-- > 0;) {
    while (next < edges.size() && edges[next].weight >= k) {
      if (sets.unite(edges[next].i, edges[next].j)) --components;
      ++next;
    }
    curve.thresholds[k] = static_cast<double>(k) / static_cast<double>(top);
    curve.components[k] = components;
  }
  return curve;
}

double area_under_destruction(const DestructionCurve& curve) {
  if (curve.components.empty()) throw InputError("area_under_destruction: empty curve");
  std::size_t sum = 0;
  for (auto c : curve.components) sum += c;
  return static_cast<double>(sum) / static_cast<double>(curve.components.size());
}

DiversityReport interaction_diversity(const InteractionLog& log, std::size_t t,
                                      std::span<const std::size_t> windows) {
  if (windows.empty()) throw InputError("interaction_diversity: empty window set");
  std::vector<std::size_t> sorted(windows.begin(), windows.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() > t)
    throw InputError("interaction_diversity: window " + std::to_string(sorted.back()) +
                     " exceeds iteration " + std::to_string(t));
  std::vector<WeightedNetwork> nets;
  nets.reserve(sorted.size());
  for (auto w : sorted) nets.push_back(build_network(log, t, w));
  return report_from_networks(log.swarm_size(), nets);
}

std::vector<std::size_t> clip_windows(std::span<const std::size_t> windows, std::size_t t) {
  std::vector<std::size_t> clipped;
  clipped.reserve(windows.size());
  for (auto w : windows) clipped.push_back(std::min(w, t));
  return clipped;
}

SlidingNetwork::SlidingNetwork(std::size_t node_count, std::size_t window)
    : node_count_(node_count), window_(window), counts_(node_count * node_count, 0) {
  if (node_count == 0 || window == 0)
    throw InputError("SlidingNetwork needs at least one node and a positive window");
  history_.reserve(node_count * window);
}

void SlidingNetwork::apply(std::span<const std::uint32_t> choices, int sign) {
  const std::size_t n = node_count_;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = choices[i];
    const std::size_t a = std::min(i, c), b = std::max(i, c);
    counts_[a * n + b] += static_cast<std::uint32_t>(sign);
  }
}

void SlidingNetwork::push(std::span<const std::uint32_t> choices) {
  if (choices.size() != node_count_)
    throw InputError("SlidingNetwork: choice vector has wrong length");
  check_choices(choices, covered() + 1);
  const std::size_t n = node_count_;
  if (covered() < window_) {
    history_.insert(history_.end(), choices.begin(), choices.end());
  } else {
    auto slot = std::span<std::uint32_t>(history_).subspan(oldest_ * n, n);
    apply(slot, -1);
    std::copy(choices.begin(), choices.end(), slot.begin());
    oldest_ = (oldest_ + 1) % window_;
  }
  apply(choices, +1);
}

WeightedNetwork SlidingNetwork::snapshot() const {
  return {node_count_, covered(), upper_triangle_edges(counts_, node_count_)};
}

std::vector<IdSample> diversity_series(const InteractionLog& log,
                                       std::span<const std::size_t> windows,
                                       std::size_t stride) {
  if (windows.empty()) throw InputError("diversity_series: empty window set");
  if (stride < 1) throw InputError("diversity_series: stride must be >= 1");
  std::vector<std::size_t> sorted(windows.begin(), windows.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1) throw InputError("diversity_series: windows must be >= 1");

  std::vector<SlidingNetwork> trackers;
  trackers.reserve(sorted.size());
  for (auto w : sorted) trackers.emplace_back(log.swarm_size(), w);

  std::vector<IdSample> series;
  std::vector<WeightedNetwork> nets;
  for (std::size_t t = 1; t <= log.iterations(); ++t) {
    const auto choices = log.at(t);
    for (auto& tracker : trackers) tracker.push(choices);
    if (t % stride != 0) continue;
    nets.clear();
    for (const auto& tracker : trackers) nets.push_back(tracker.snapshot());
    series.push_back({t, report_from_networks(log.swarm_size(), nets).id_value});
  }
  return series;
}

std::vector<DestructionSurfaceRow> destruction_surface(const InteractionLog& log,
                                                       std::size_t t,
                                                       std::span<const std::size_t> windows) {
  auto clipped = clip_windows(windows, t);
  std::sort(clipped.begin(), clipped.end());
  std::vector<DestructionSurfaceRow> rows;
  for (auto w : clipped) {
    const auto curve = destruction_curve(build_network(log, t, w));
    for (std::size_t k = 0; k < curve.thresholds.size(); ++k)
      rows.push_back({w, curve.thresholds[k], curve.components[k]});
  }
  return rows;
}

}  // namespace swarmnet
