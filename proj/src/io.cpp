#include "swarmnet/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "swarmnet/errors.hpp"
#include "swarmnet/rng.hpp"

namespace swarmnet {

namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RunError("cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw RunError("write failed for " + path.string());
}

// Line-oriented CSV reader that reports file:line on every error.
class CsvReader {
 public:
  CsvReader(const fs::path& path, std::string_view header) : path_(path), in_(path) {
    if (!in_) throw InputError("cannot read " + path.string());
    std::string line;
    if (!next_line(line) || line != header)
      fail("expected header '" + std::string(header) + "'");
  }

  // Splits the next non-empty line into exactly `columns` fields.
  bool next(std::vector<std::string>& fields, std::size_t columns) {
    std::string line;
    do {
      if (!next_line(line)) return false;
    } while (line.empty());
    fields.clear();
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != columns)
      fail("expected " + std::to_string(columns) + " fields, got " +
           std::to_string(fields.size()));
    return true;
  }

  std::uint64_t to_unsigned(const std::string& text) const {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      fail("malformed integer '" + text + "'");
    return v;
  }

  double to_real(const std::string& text) const {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      fail("malformed number '" + text + "'");
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError(path_.string() + ":" + std::to_string(line_no_) + ": " + what);
  }

 private:
  bool next_line(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  fs::path path_;
  std::ifstream in_;
  std::size_t line_no_ = 0;
};

}  // namespace

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_interaction_log(const fs::path& path, const InteractionLog& log) {
  auto out = open_output(path);
  out << "iteration,particle,best_neighbor\n";
  for (std::size_t t = 1; t <= log.iterations(); ++t) {
    const auto choices = log.at(t);
    for (std::size_t i = 0; i < choices.size(); ++i)
      out << t << ',' << i << ',' << choices[i] << '\n';
  }
  finish(out, path);
}

InteractionLog read_interaction_log(const fs::path& path) {
  CsvReader reader(path, "iteration,particle,best_neighbor");
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::string> f;
  while (reader.next(f, 3)) {
    const auto t = reader.to_unsigned(f[0]);
    const auto i = reader.to_unsigned(f[1]);
    const auto j = reader.to_unsigned(f[2]);
    if (i == 0 && t == rows.size() + 1) rows.emplace_back();
    if (rows.empty() || t != rows.size() || i != rows.back().size())
      reader.fail("rows must be ordered by iteration then particle (got iteration " +
                  std::to_string(t) + ", particle " + std::to_string(i) + ")");
    if (j == i) reader.fail("particle " + std::to_string(i) + " selects itself");
    rows.back().push_back(static_cast<std::uint32_t>(j));
  }
  if (rows.empty()) reader.fail("log has no rows");
  const std::size_t n = rows.front().size();
  InteractionLog log(n);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (rows[t].size() != n)
      throw InputError(path.string() + ": iteration " + std::to_string(t + 1) + " has " +
                       std::to_string(rows[t].size()) + " particles, expected " +
                       std::to_string(n));
    for (auto j : rows[t])
      if (j >= n)
        throw InputError(path.string() + ": iteration " + std::to_string(t + 1) +
                         " references particle " + std::to_string(j) + " outside swarm");
    log.append(rows[t]);
  }
  return log;
}

void write_trace(const fs::path& path, const RunTrace& trace) {
  auto out = open_output(path);
  out << "iteration,global_best_fitness,fitness_improvement\n";
  for (std::size_t t = 0; t < trace.iterations(); ++t)
    out << t + 1 << ',' << format_real(trace.global_best_fitness[t]) << ','
        << format_real(trace.fitness_improvement[t]) << '\n';
  finish(out, path);
}

RunTrace read_trace(const fs::path& path) {
  CsvReader reader(path, "iteration,global_best_fitness,fitness_improvement");
  RunTrace trace;
  std::vector<std::string> f;
  while (reader.next(f, 3)) {
    if (reader.to_unsigned(f[0]) != trace.iterations() + 1)
      reader.fail("iterations must be consecutive from 1");
    trace.global_best_fitness.push_back(reader.to_real(f[1]));
    trace.fitness_improvement.push_back(reader.to_real(f[2]));
  }
  if (trace.iterations() > 0) trace.final_fitness = trace.global_best_fitness.back();
  return trace;
}

void write_diversity(const fs::path& path, std::span<const IdSample> series) {
  auto out = open_output(path);
  out << "iteration,id_value\n";
  for (const auto& s : series) out << s.iteration << ',' << format_real(s.id_value) << '\n';
  finish(out, path);
}

std::vector<IdSample> read_diversity(const fs::path& path) {
  CsvReader reader(path, "iteration,id_value");
  std::vector<IdSample> series;
  std::vector<std::string> f;
  while (reader.next(f, 2))
    series.push_back({reader.to_unsigned(f[0]), reader.to_real(f[1])});
  return series;
}

void write_destruction_surface(const fs::path& path,
                               std::span<const DestructionSurfaceRow> rows) {
  auto out = open_output(path);
  out << "t_w,threshold,component_count\n";
  for (const auto& r : rows)
    out << r.window << ',' << format_real(r.threshold) << ',' << r.components << '\n';
  finish(out, path);
}

void write_summary(const fs::path& path, std::span<const SummaryRow> rows) {
  auto out = open_output(path);
  out << "function,topology_kind,k,repetitions,mean_id,id_ci_low,id_ci_high,"
         "mean_final_fitness,mean_fdelta,converged_fraction\n";
  for (const auto& r : rows)
    out << to_string(r.function) << ',' << to_string(r.kind) << ',' << r.k << ','
        << r.repetitions << ',' << format_real(r.mean_id) << ','
        << format_real(r.id_ci.low) << ',' << format_real(r.id_ci.high) << ','
        << format_real(r.mean_final_fitness) << ',' << format_real(r.mean_fdelta) << ','
        << format_real(r.converged_fraction) << '\n';
  finish(out, path);
}

fs::path run_directory(const ObjectiveSpec& objective, const TopologySpec& topology,
                       std::size_t swarm_size, std::size_t repetition) {
  return fs::path(std::string(to_string(objective.function))) / topology.label(swarm_size) /
         ("rep_" + std::to_string(repetition));
}

void write_run(const fs::path& dir, const CellRun& run, const ObjectiveSpec& objective,
               const TopologySpec& topology) {
  write_interaction_log(dir / kLogFile, run.log);
  write_trace(dir / kTraceFile, run.trace);
  write_diversity(dir / kDiversityFile, run.id_series);
  auto out = open_output(dir / kRunInfoFile);
  out << "function = " << to_string(objective.function) << '\n'
      << "topology = " << to_string(topology.kind) << '\n'
      << "k = " << topology.degree(run.log.swarm_size()) << '\n'
      << "seed = " << run.seed << '\n'
      << "generator = " << Rng::kGenerator << '\n'
      << "iterations = " << run.trace.iterations() << '\n'
      << "converged_at = "
      << (run.trace.converged_at ? std::to_string(*run.trace.converged_at) : "none") << '\n'
      << "final_fitness = " << format_real(run.trace.final_fitness) << '\n'
      << "mean_id = " << format_real(run.mean_id) << '\n'
      << "mean_fdelta = " << format_real(run.mean_fdelta) << '\n';
  finish(out, dir / kRunInfoFile);
}

std::size_t analyze_logs(const fs::path& log_dir, const fs::path& out_dir,
                         std::span<const std::size_t> windows, std::size_t stride) {
  if (!fs::is_directory(log_dir))
    throw InputError("log directory " + log_dir.string() + " does not exist");
  std::vector<fs::path> logs;
  for (const auto& entry : fs::recursive_directory_iterator(log_dir))
    if (entry.is_regular_file() && entry.path().filename() == kLogFile)
      logs.push_back(entry.path());
  if (logs.empty()) throw InputError("no logs found under " + log_dir.string());
  std::sort(logs.begin(), logs.end());
  for (const auto& path : logs) {
    const auto log = read_interaction_log(path);
    const auto rel = fs::relative(path.parent_path(), log_dir);
    write_diversity(out_dir / rel / kDiversityFile, sample_diversity(log, windows, stride));
  }
  return logs.size();
}

}  // namespace swarmnet
