#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "swarmnet/experiment.hpp"
#include "swarmnet/interaction_net.hpp"
#include "swarmnet/pso.hpp"

namespace swarmnet {

// Shortest decimal text that parses back to the same double.
std::string format_real(double value);

// interaction_log.csv: "iteration,particle,best_neighbor", one row per
// particle per iteration, iterations ascending and particles 0..n-1 in order.
void write_interaction_log(const std::filesystem::path& path, const InteractionLog& log);
// Errors name the file and line.
InteractionLog read_interaction_log(const std::filesystem::path& path);

// trace.csv: "iteration,global_best_fitness,fitness_improvement".
void write_trace(const std::filesystem::path& path, const RunTrace& trace);
// Restores the two series and final_fitness; converged_at lives in run_info.txt.
RunTrace read_trace(const std::filesystem::path& path);

// diversity.csv: "iteration,id_value".
void write_diversity(const std::filesystem::path& path, std::span<const IdSample> series);
std::vector<IdSample> read_diversity(const std::filesystem::path& path);

// destruction.csv: "t_w,threshold,component_count".
void write_destruction_surface(const std::filesystem::path& path,
                               std::span<const DestructionSurfaceRow> rows);

// summary.csv, one row per (function, topology) cell.
void write_summary(const std::filesystem::path& path, std::span<const SummaryRow> rows);

inline constexpr const char* kLogFile = "interaction_log.csv";
inline constexpr const char* kTraceFile = "trace.csv";
inline constexpr const char* kDiversityFile = "diversity.csv";
inline constexpr const char* kRunInfoFile = "run_info.txt";
inline constexpr const char* kSummaryFile = "summary.csv";
inline constexpr const char* kConfigRecordFile = "config.txt";

// "<function>/<topology>_<k>/rep_<idx>" relative to an output root.
std::filesystem::path run_directory(const ObjectiveSpec& objective, const TopologySpec& topology,
                                    std::size_t swarm_size, std::size_t repetition);

// Writes log, trace, diversity series and run_info.txt into `dir`.
void write_run(const std::filesystem::path& dir, const CellRun& run,
               const ObjectiveSpec& objective, const TopologySpec& topology);

// Recomputes diversity.csv for every interaction log found below log_dir and
// writes it to the same relative location under out_dir. Returns the number
// of logs processed; throws InputError if there are none.
std::size_t analyze_logs(const std::filesystem::path& log_dir,
                         const std::filesystem::path& out_dir,
                         std::span<const std::size_t> windows, std::size_t stride);

}  // namespace swarmnet
