#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swarmnet/experiment.hpp"

namespace swarmnet {

// Flat "key = value" experiment configuration with '#' comments.
//
// Keys (defaults in brackets):
//   function          F2 | F6 | F14 | F19 | SPHERE, comma-separated list [F2]
//   dimension         [1000]
//   group_size        rotated group size for F6 / F14 [50]
//   domain_seed       seed of shifts, permutation and rotations [0]
//   topologies        comma list of ring, von_neumann, global, kregular:<k>
//                     [ring, von_neumann, kregular:5..10, 20..90 step 10, global;
//                      entries infeasible for swarm_size are skipped]
//   c1, c2            [2.05, 2.05]
//   chi               [derived from c1 + c2]
//   swarm_size        [100]
//   t_max             [10000]
//   epsilon           [1e-5], "inf" allowed
//   delta_window      [500]
//   repetitions       [30]
//   window_set        comma list [10, 25, 50, 75, 100]
//   id_sample_stride  [1]
//   base_seed         [0]; repetition r runs with seed base_seed + r
//
// Overrides use the same "key=value" syntax and are applied after the file.
// All errors are ConfigError naming the field (and line, for file input).
ExperimentConfig parse_config_text(std::string_view text,
                                   std::span<const std::string> overrides = {},
                                   std::string_view source = "<config>");

// An empty path means "no file": defaults plus overrides.
ExperimentConfig parse_config(const std::filesystem::path& path,
                              std::span<const std::string> overrides = {});

// Renders every field explicitly; parse_config_text(render_config(c)) == c.
std::string render_config(const ExperimentConfig& config);

TopologySpec parse_topology_token(std::string_view token);
std::string topology_token(const TopologySpec& spec);

}  // namespace swarmnet
