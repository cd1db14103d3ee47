#include "swarmnet/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "swarmnet/errors.hpp"
#include "swarmnet/io.hpp"

namespace swarmnet {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> items;
  while (true) {
    const auto comma = s.find(',');
    const auto item = trim(s.substr(0, comma));
    if (!item.empty()) items.push_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return items;
}

std::uint64_t to_unsigned(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw ConfigError(std::string(key) + ": expected a non-negative integer, got '" +
                      std::string(value) + "'");
  return out;
}

double to_real(std::string_view key, std::string_view value) {
  if (value == "inf" || value == "infinity") return std::numeric_limits<double>::infinity();
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size() || std::isnan(out))
    throw ConfigError(std::string(key) + ": expected a real number, got '" +
                      std::string(value) + "'");
  return out;
}

std::vector<TopologySpec> paper_sweep(std::size_t swarm_size) {
  std::vector<TopologySpec> out{{TopologyKind::Ring, 0}};
  try {
    (void)torus_shape(swarm_size);
    out.push_back({TopologyKind::VonNeumann, 0});
  } catch (const ConfigError&) {
  }
  std::vector<std::size_t> ks{5, 6, 7, 8, 9, 10, 20, 30, 40, 50, 60, 70, 80, 90};
  for (auto k : ks)
    if (k + 1 < swarm_size && (k * swarm_size) % 2 == 0)
      out.push_back({TopologyKind::KRegular, k});
  out.push_back({TopologyKind::Global, 0});
  return out;
}

struct Entry {
  std::string value;
  std::string where;
};

class Builder {
 public:
  void set(std::string key, std::string value, std::string where) {
    entries_[std::move(key)] = {std::move(value), std::move(where)};
  }

  ExperimentConfig build() {
    ExperimentConfig c;
    const auto dimension = take_unsigned("dimension", 1000);
    const auto group_size = take_unsigned("group_size", 50);
    const auto domain_seed = take_unsigned("domain_seed", 0);
    c.objectives.clear();
    if (auto v = take("function")) {
      for (auto item : split_list(*v))
        c.objectives.push_back(
            make_objective_spec(guard("function", [&] { return parse_function_id(item); }),
                                dimension, group_size, domain_seed));
    } else {
      c.objectives.push_back(
          make_objective_spec(FunctionId::F2, dimension, group_size, domain_seed));
    }

    auto& p = c.params;
    p.c1 = take_real("c1", 2.05);
    p.c2 = take_real("c2", 2.05);
    if (auto v = take("chi")) {
      p.chi = to_real("chi", *v);
    } else {
      p.chi = guard("chi", [&] { return constriction_factor(p.c1, p.c2); });
    }
    p.swarm_size = take_unsigned("swarm_size", 100);
    p.t_max = take_unsigned("t_max", 10000);
    p.epsilon = take_real("epsilon", 1e-5);
    p.delta_window = take_unsigned("delta_window", 500);
    c.repetitions = take_unsigned("repetitions", 30);
    c.id_sample_stride = take_unsigned("id_sample_stride", 1);
    c.base_seed = take_unsigned("base_seed", 0);
    if (auto v = take("window_set")) {
      c.window_set.clear();
      for (auto item : split_list(*v)) c.window_set.push_back(to_unsigned("window_set", item));
    }
    if (auto v = take("topologies")) {
      c.topologies.clear();
      for (auto item : split_list(*v))
        c.topologies.push_back(guard("topologies", [&] { return parse_topology_token(item); }));
    } else {
      c.topologies = paper_sweep(p.swarm_size);
    }

    for (const auto& [key, entry] : entries_)
      throw ConfigError(entry.where + ": unknown field '" + key + "'");
    c.validate();
    return c;
  }

 private:
  std::optional<std::string> take(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    current_where_ = it->second.where;
    std::string value = std::move(it->second.value);
    entries_.erase(it);
    return value;
  }

  std::uint64_t take_unsigned(const std::string& key, std::uint64_t fallback) {
    auto v = take(key);
    return v ? guard(key, [&] { return to_unsigned(key, *v); }) : fallback;
  }

  double take_real(const std::string& key, double fallback) {
    auto v = take(key);
    return v ? guard(key, [&] { return to_real(key, *v); }) : fallback;
  }

  // Re-throws any parse failure as a ConfigError naming the field and location.
  template <typename F>
  auto guard(std::string_view key, F&& fn) -> decltype(fn()) {
    try {
      return fn();
    } catch (const std::exception& e) {
      throw ConfigError(current_where_ + ": " + std::string(key) + ": " + e.what());
    }
  }

  std::map<std::string, Entry> entries_;
  std::string current_where_ = "<config>";
};

void add_line(Builder& builder, std::string_view line, const std::string& where) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  line = trim(line);
  if (line.empty()) return;
  const auto eq = line.find('=');
  if (eq == std::string_view::npos)
    throw ConfigError(where + ": expected 'key = value', got '" + std::string(line) + "'");
  const auto key = trim(line.substr(0, eq));
  if (key.empty()) throw ConfigError(where + ": missing key before '='");
  builder.set(std::string(key), std::string(trim(line.substr(eq + 1))), where);
}

}  // namespace

TopologySpec parse_topology_token(std::string_view token) {
  token = trim(token);
  const auto colon = token.find(':');
  const auto kind = parse_topology_kind(trim(token.substr(0, colon)));
  if (kind == TopologyKind::KRegular) {
    if (colon == std::string_view::npos)
      throw ConfigError("kregular topology needs a degree, e.g. kregular:10");
    return {kind, static_cast<std::size_t>(to_unsigned("kregular", trim(token.substr(colon + 1))))};
  }
  if (colon != std::string_view::npos)
    throw ConfigError("only kregular takes a degree: '" + std::string(token) + "'");
  return {kind, 0};
}

std::string topology_token(const TopologySpec& spec) {
  if (spec.kind == TopologyKind::KRegular) return "kregular:" + std::to_string(spec.k);
  return std::string(to_string(spec.kind));
}

ExperimentConfig parse_config_text(std::string_view text,
                                   std::span<const std::string> overrides,
                                   std::string_view source) {
  Builder builder;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                      : nl - pos);
    ++line_no;
    add_line(builder, line, std::string(source) + ":" + std::to_string(line_no));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  for (const auto& o : overrides) {
    if (o.find('=') == std::string::npos)
      throw ConfigError("--set: expected key=value, got '" + o + "'");
    add_line(builder, o, "--set " + o);
  }
  return builder.build();
}

ExperimentConfig parse_config(const std::filesystem::path& path,
                              std::span<const std::string> overrides) {
  if (path.empty()) return parse_config_text({}, overrides);
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), overrides, path.string());
}

std::string render_config(const ExperimentConfig& c) {
  std::ostringstream out;
  const auto& first = c.objectives.front();
  out << "function = ";
  for (std::size_t i = 0; i < c.objectives.size(); ++i)
    out << (i ? ", " : "") << to_string(c.objectives[i].function);
  out << "\ndimension = " << first.dimension << "\ngroup_size = " << first.group_size
      << "\ndomain_seed = " << first.domain_seed << "\ntopologies = ";
  for (std::size_t i = 0; i < c.topologies.size(); ++i)
    out << (i ? ", " : "") << topology_token(c.topologies[i]);
  const auto& p = c.params;
  out << "\nc1 = " << format_real(p.c1) << "\nc2 = " << format_real(p.c2)
      << "\nchi = " << format_real(p.chi) << "\nswarm_size = " << p.swarm_size
      << "\nt_max = " << p.t_max << "\nepsilon = " << format_real(p.epsilon)
      << "\ndelta_window = " << p.delta_window << "\nrepetitions = " << c.repetitions
      << "\nwindow_set = ";
  for (std::size_t i = 0; i < c.window_set.size(); ++i)
    out << (i ? ", " : "") << c.window_set[i];
  out << "\nid_sample_stride = " << c.id_sample_stride << "\nbase_seed = " << c.base_seed
      << "\n";
  return out.str();
}

}  // namespace swarmnet
