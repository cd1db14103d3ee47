#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "swarmnet/config.hpp"
#include "swarmnet/errors.hpp"
#include "swarmnet/io.hpp"

using namespace swarmnet;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("swarmnet_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("defaults") {
  const auto c = parse_config_text("");
  CHECK(c.params.swarm_size == 100);
  CHECK(c.params.t_max == 10000);
  CHECK(c.params.epsilon == 1e-5);
  CHECK(c.params.delta_window == 500);
  CHECK(c.params.c1 == 2.05);
  CHECK(c.params.c2 == 2.05);
  CHECK(c.params.chi == constriction_factor(2.05, 2.05));
  CHECK(c.repetitions == 30);
  CHECK(c.window_set == std::vector<std::size_t>{10, 25, 50, 75, 100});
  CHECK(c.objectives.front().dimension == 1000);
  CHECK(c.objectives.front().group_size == 50);
  // ring, von Neumann, 14 k-regular degrees, global
  CHECK(c.topologies.size() == 17);
  CHECK(c.topologies.back().kind == TopologyKind::Global);
}

TEST_CASE("overrides take precedence") {
  const std::vector<std::string> overrides{"swarm_size=50"};
  const auto c = parse_config_text("t_max = 200\n", overrides);
  CHECK(c.params.swarm_size == 50);
  CHECK(c.params.t_max == 200);
  CHECK(c.params.delta_window == 500);
  for (const auto& t : c.topologies) CHECK(t.degree(50) <= 49);
}

TEST_CASE("full file with comments") {
  const auto c = parse_config_text(R"(# desk sweep
function = F6, F14   # two functions
dimension = 20
group_size = 5
topologies = ring, von_neumann, kregular:6, global
swarm_size = 16
epsilon = inf
window_set = 1, 4
id_sample_stride = 3
base_seed = 12
)");
  REQUIRE(c.objectives.size() == 2);
  CHECK(c.objectives[1].function == FunctionId::F14);
  CHECK(c.objectives[1].group_size == 5);
  CHECK(c.topologies[2] == TopologySpec{TopologyKind::KRegular, 6});
  CHECK(std::isinf(c.params.epsilon));
  CHECK(c.base_seed == 12);
  CHECK(parse_config_text(render_config(c)) == c);
}

TEST_CASE("configuration errors name the field") {
  const std::vector<std::string> infeasible{"swarm_size=99", "topologies=kregular:5"};
  CHECK_THROWS_AS(parse_config_text("", infeasible), ConfigError);
  CHECK(error_of([] { parse_config_text("swarm_size = many\n"); }).find("swarm_size") !=
        std::string::npos);
  CHECK(error_of([] { parse_config_text("\ncolour = red\n"); }).find("<config>:2") !=
        std::string::npos);
  CHECK(error_of([] { parse_config_text("t_max 5\n"); }).find("key = value") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_config_text("c1 = 1\nc2 = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("function = F99\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("topologies = kregular\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("repetitions = 0\n"), ConfigError);
  const std::vector<std::string> bad_override{"swarm_size"};
  CHECK_THROWS_AS(parse_config_text("", bad_override), ConfigError);
  CHECK_THROWS_AS(parse_config("/nonexistent/swarmnet.cfg"), ConfigError);
}

TEST_CASE("number formatting round-trips") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(gen) * std::pow(10.0, static_cast<int>(gen() % 40) - 20);
    CHECK(std::stod(format_real(v)) == v);
  }
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(100.0) == "100");
}

TEST_CASE("log and trace files round-trip") {
  const auto dir = scratch("roundtrip");
  std::mt19937_64 gen(12);
  const auto log = oracle::random_log(gen, 7, 13);
  write_interaction_log(dir / "log.csv", log);
  CHECK(read_interaction_log(dir / "log.csv") == log);

  RunTrace trace;
  for (int t = 0; t < 20; ++t) {
    trace.global_best_fitness.push_back(1.0 / (t + 3.0));
    trace.fitness_improvement.push_back(t * 1e-7 / 3.0);
  }
  trace.final_fitness = trace.global_best_fitness.back();
  write_trace(dir / "trace.csv", trace);
  CHECK(read_trace(dir / "trace.csv") == trace);
}

TEST_CASE("malformed logs report file and line") {
  const auto dir = scratch("malformed");
  write_text(dir / "a.csv", "iteration,particle,best_neighbor\n1,0,1\n1,1,x\n");
  CHECK(error_of([&] { read_interaction_log(dir / "a.csv"); }).find("a.csv:3") !=
        std::string::npos);
  write_text(dir / "b.csv", "iteration,particle,best_neighbor\n1,0,0\n");
  CHECK_THROWS_AS(read_interaction_log(dir / "b.csv"), InputError);
  write_text(dir / "c.csv", "iter,p,n\n");
  CHECK_THROWS_AS(read_interaction_log(dir / "c.csv"), InputError);
  write_text(dir / "d.csv", "iteration,particle,best_neighbor\n1,0,1\n1,1,0\n2,0,1\n");
  CHECK_THROWS_AS(read_interaction_log(dir / "d.csv"), InputError);
  write_text(dir / "e.csv", "iteration,particle,best_neighbor\n1,0,1\n1,1,5\n");
  CHECK_THROWS_AS(read_interaction_log(dir / "e.csv"), InputError);
}

TEST_CASE("offline analysis reproduces the online series") {
  const auto dir = scratch("analyze");
  ExperimentConfig config;
  config.objectives = {make_objective_spec(FunctionId::F2, 6, 3, 1)};
  config.topologies = {{TopologyKind::Ring, 0}, {TopologyKind::Global, 0}};
  config.params.swarm_size = 8;
  config.params.t_max = 60;
  config.repetitions = 2;
  config.window_set = {3, 10};
  config.id_sample_stride = 2;
  run_sweep(config, 2, [&](const ObjectiveSpec& o, const TopologySpec& t, std::size_t rep,
                           const CellRun& run) {
    write_run(dir / "runs" / run_directory(o, t, 8, rep), run, o, t);
  });
  CHECK(fs::exists(dir / "runs" / "F2" / "ring_2" / "rep_1" / kLogFile));
  CHECK(fs::exists(dir / "runs" / "F2" / "global_7" / "rep_0" / kRunInfoFile));

  CHECK(analyze_logs(dir / "runs", dir / "offline", config.window_set,
                     config.id_sample_stride) == 4);
  for (const auto& rel : {"F2/ring_2/rep_0", "F2/global_7/rep_1"}) {
    const auto online = read_diversity(dir / "runs" / rel / kDiversityFile);
    const auto offline = read_diversity(dir / "offline" / rel / kDiversityFile);
    CHECK(!online.empty());
    CHECK(online == offline);
  }

  fs::create_directories(dir / "empty");
  CHECK(error_of([&] { analyze_logs(dir / "empty", dir / "x", config.window_set, 1); })
            .find("no logs found") != std::string::npos);
}

TEST_CASE("hand-written star log through the file pipeline") {
  const auto dir = scratch("star");
  fs::create_directories(dir / "logs" / "star");
  write_text(dir / "logs" / "star" / kLogFile,
             "iteration,particle,best_neighbor\n1,0,1\n1,1,0\n1,2,0\n1,3,0\n");
  const std::vector<std::size_t> windows{1};
  CHECK(analyze_logs(dir / "logs", dir / "out", windows, 1) == 1);
  const auto series = read_diversity(dir / "out" / "star" / kDiversityFile);
  REQUIRE(series.size() == 1);
  CHECK(series.front().id_value == doctest::Approx(0.5833).epsilon(1e-4));
}
