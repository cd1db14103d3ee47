#include "swarmnet/topology.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

#include "swarmnet/errors.hpp"

namespace swarmnet {

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

// Circulant graph with the given forward offsets (each offset s links i to i +- s).
Adjacency circulant(std::size_t n, std::span<const std::size_t> offsets) {
  Adjacency adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s : offsets) {
      adj[i].push_back((i + s) % n);
      adj[i].push_back((i + n - s) % n);
    }
    std::sort(adj[i].begin(), adj[i].end());
    adj[i].erase(std::unique(adj[i].begin(), adj[i].end()), adj[i].end());
  }
  return adj;
}

Adjacency k_regular(std::size_t n, std::size_t k) {
  if (k < 2 || k >= n)
    throw ConfigError("k-regular topology requires 2 <= k < n (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  if ((n * k) % 2 != 0)
    throw ConfigError("k-regular topology requires n*k even (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  std::vector<std::size_t> offsets;
  for (std::size_t s = 1; s <= k / 2; ++s) offsets.push_back(s);
  if (k % 2 == 1) offsets.push_back(n / 2);  // diametric chord, n is even here
  return circulant(n, offsets);
}

Adjacency torus(std::size_t n) {
  const auto [rows, cols] = torus_shape(n);
  Adjacency adj(n);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto& list = adj[r * cols + c];
      list = {((r + rows - 1) % rows) * cols + c, ((r + 1) % rows) * cols + c,
              r * cols + (c + cols - 1) % cols, r * cols + (c + 1) % cols};
      std::sort(list.begin(), list.end());
    }
  }
  return adj;
}

}  // namespace

std::string_view to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Ring: return "ring";
    case TopologyKind::VonNeumann: return "von_neumann";
    case TopologyKind::KRegular: return "kregular";
    case TopologyKind::Global: return "global";
  }
  return "?";
}

TopologyKind parse_topology_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (auto kind : {TopologyKind::Ring, TopologyKind::VonNeumann, TopologyKind::KRegular,
                    TopologyKind::Global}) {
    if (lower == to_string(kind)) return kind;
  }
  throw ConfigError("unknown topology kind '" + std::string(text) + "'");
}

TopologyGraph::TopologyGraph(TopologyKind kind, std::size_t degree,
                             std::vector<std::vector<std::size_t>> adjacency)
    : kind_(kind), degree_(degree), adjacency_(std::move(adjacency)) {}

std::span<const std::size_t> TopologyGraph::neighbors(std::size_t i) const {
  if (i >= adjacency_.size())
    throw InputError("neighbors: node " + std::to_string(i) + " out of range [0, " +
                     std::to_string(adjacency_.size()) + ")");
  return adjacency_[i];
}

std::pair<std::size_t, std::size_t> torus_shape(std::size_t n) {
  std::size_t best = 0;
  for (std::size_t rows = 3; rows * rows <= n; ++rows)
    if (n % rows == 0 && n / rows >= 3) best = rows;
  if (best == 0)
    throw ConfigError("von Neumann topology needs n = r*c with r, c >= 3 (n=" +
                      std::to_string(n) + ")");
  return {best, n / best};
}

TopologyGraph build_topology(TopologyKind kind, std::size_t n, std::size_t k) {
  if (n < 3) throw ConfigError("topology requires at least 3 particles");
  switch (kind) {
    case TopologyKind::Ring:
      return {kind, 2, k_regular(n, 2)};
    case TopologyKind::VonNeumann:
      return {kind, 4, torus(n)};
    case TopologyKind::KRegular:
      return {kind, k, k_regular(n, k)};
    case TopologyKind::Global: {
      Adjacency adj(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) adj[i].push_back(j);
      return {kind, n - 1, std::move(adj)};
    }
  }
  throw ConfigError("unsupported topology kind");
}

bool is_connected(const TopologyGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == n;
}

}  // namespace swarmnet
