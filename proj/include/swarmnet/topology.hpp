#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swarmnet {

enum class TopologyKind { Ring, VonNeumann, KRegular, Global };

std::string_view to_string(TopologyKind kind);
// Accepts "ring", "von_neumann", "kregular", "global".
TopologyKind parse_topology_kind(std::string_view text);

// Static undirected communication structure over particle indices 0..n-1.
// Neighbor lists are sorted ascending and never contain the node itself.
class TopologyGraph {
 public:
  TopologyGraph(TopologyKind kind, std::size_t degree,
                std::vector<std::vector<std::size_t>> adjacency);

  TopologyKind kind() const { return kind_; }
  // Degree of every node (2 for ring, 4 for von Neumann, n-1 for global).
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return adjacency_.size(); }

  // Throws InputError when i >= size().
  std::span<const std::size_t> neighbors(std::size_t i) const;

 private:
  TopologyKind kind_;
  std::size_t degree_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// k is only read for KRegular. Throws ConfigError for infeasible requests:
// n < 3; von Neumann without an r x c factorization with r, c >= 3;
// k-regular with k < 2, k >= n, or n * k odd.
TopologyGraph build_topology(TopologyKind kind, std::size_t n, std::size_t k = 0);

// Rows and columns of the torus used for a von Neumann swarm of size n: the
// most square factorization with both sides >= 3. Throws ConfigError if none.
std::pair<std::size_t, std::size_t> torus_shape(std::size_t n);

bool is_connected(const TopologyGraph& g);

}  // namespace swarmnet
