// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.
//
// usage: acceptance <path-to-swarmnet-cli> <scratch-dir>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "swarmnet/config.hpp"
#include "swarmnet/experiment.hpp"
#include "swarmnet/interaction_net.hpp"
#include "swarmnet/stats.hpp"

using namespace swarmnet;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << name << " :: " << detail
            << std::endl;
  if (!ok) ++failures;
}

std::string fmt(double v, int digits = 6) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

// Desk-scale k-sweep shared by criteria 1-3.
ExperimentConfig desk_config(FunctionId function, std::size_t group_size) {
  ExperimentConfig c;
  c.objectives = {make_objective_spec(function, 50, group_size, 0)};
  c.topologies = {{TopologyKind::Ring, 0},
                  {TopologyKind::KRegular, 4},
                  {TopologyKind::KRegular, 10},
                  {TopologyKind::KRegular, 20},
                  {TopologyKind::Global, 0}};
  c.params.swarm_size = 50;
  c.params.t_max = 2000;
  c.repetitions = 10;
  return c;
}

constexpr std::size_t kAreaIteration = 1000;
constexpr std::size_t kAreaWindow = 100;

void topology_trend_and_destruction_pace() {
  const auto config = desk_config(FunctionId::F2, 50);
  const std::size_t n_topo = config.topologies.size();
  // area[topology][rep] at t = 1000 (or the last iteration of shorter runs)
  std::vector<std::vector<double>> area(n_topo, std::vector<double>(config.repetitions));
  std::vector<std::vector<std::size_t>> at(n_topo, std::vector<std::size_t>(config.repetitions));
  const auto result = run_sweep(config, 0, [&](const ObjectiveSpec&, const TopologySpec& topo,
                                                std::size_t rep, const CellRun& run) {
    const auto idx = static_cast<std::size_t>(
        std::find(config.topologies.begin(), config.topologies.end(), topo) -
        config.topologies.begin());
    const std::size_t t = std::min(kAreaIteration, run.log.iterations());
    const std::size_t w = std::min(kAreaWindow, t);
    area[idx][rep] = area_under_destruction(destruction_curve(build_network(run.log, t, w)));
    at[idx][rep] = t;
  });

  std::vector<double> ks, ids;
  bool decreasing = true;
  std::string series;
  for (std::size_t r = 0; r < result.rows.size(); ++r) {
    ks.push_back(static_cast<double>(result.rows[r].k));
    ids.push_back(result.rows[r].mean_id);
    if (r > 0 && !(ids[r] < ids[r - 1])) decreasing = false;
    series += (r ? ", " : "") + std::string("k=") + std::to_string(result.rows[r].k) + ":" +
              fmt(ids[r], 4);
  }
  const auto rho = spearman(ks, ids);
  report(1, "topology-diversity trend (F2, d=50, |S|=50, t_max=2000, 10 reps)",
         decreasing && rho && *rho <= -0.9,
         "mean ID " + series + "; strictly decreasing=" + (decreasing ? "yes" : "no") +
             "; spearman=" + (rho ? fmt(*rho) : "undefined") + " (need <= -0.9)");

  const double ring = mean(area.front());
  const double global = mean(area.back());
  std::size_t short_runs = 0;
  for (const auto& row : at)
    for (auto t : row)
      if (t < kAreaIteration) ++short_runs;
  report(2, "destruction pace at t=1000, t_w=100", global > ring,
         "mean A(global)=" + fmt(global) + " vs mean A(ring)=" + fmt(ring) +
             "; runs shorter than t=1000 measured at their last iteration: " +
             std::to_string(short_runs));
}

void id_improvement_association() {
  const auto config = desk_config(FunctionId::F6, 50);
  const auto result = run_sweep(config, 0);
  std::vector<double> ids, fdeltas;
  for (const auto& row : result.rows) {
    ids.push_back(row.mean_id);
    fdeltas.push_back(row.mean_fdelta);
  }
  const auto r = pearson(ids, fdeltas);
  report(3, "ID vs mean f_delta association (F6, d=50, m=50)", r && *r < 0.0,
         "pearson=" + (r ? fmt(*r) : std::string("undefined")) + " (need < 0)");
}

void constriction_value() {
  // Closed form in extended precision, plus a 40-digit reference value.
  const long double phi = 4.1L;
  const long double extended = 2.0L / std::fabs(2.0L - phi - std::sqrt(phi * phi - 4.0L * phi));
  const double reference = 0.72984378812835797062;
  const double chi = constriction_factor(2.05, 2.05);
  const bool ok = std::abs(chi - static_cast<double>(extended)) <= 1e-4 &&
                  std::abs(chi - reference) <= 1e-4 && std::abs(chi - 0.72984) <= 1e-4;
  report(4, "constriction factor (2.05, 2.05)", ok,
         "chi=" + fmt(chi, 12) + " reference=" + fmt(reference, 12));
}

// Criteria 5-7 share the property instances.
void network_properties() {
  std::mt19937_64 gen(20240501);
  bool conserved = true;
  bool monotone = true;
  bool bounded = true;
  std::size_t checked_instances = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 20)(gen);
    const std::size_t iters = std::uniform_int_distribution<std::size_t>(1, 50)(gen);
    const auto log = oracle::random_log(gen, n, iters);
    const std::size_t t = std::uniform_int_distribution<std::size_t>(1, iters)(gen);
    const std::size_t t_w = std::uniform_int_distribution<std::size_t>(1, 60)(gen);
    const std::size_t w_eff = std::min(t_w, t);
    const auto net = build_network(log, t, w_eff);
    if (net.total_weight() != n * w_eff) conserved = false;
    const auto curve = destruction_curve(net);
    for (std::size_t k = 1; k < curve.components.size(); ++k)
      if (curve.components[k] < curve.components[k - 1]) monotone = false;
    const std::vector<std::size_t> windows{w_eff};
    const double id = interaction_diversity(log, t, windows).id_value;
    if (!(id >= 0.0 && id <= 1.0 - 1.0 / static_cast<double>(n))) bounded = false;
    ++checked_instances;
  }
  report(5, "weight conservation on 1000 random logs", conserved,
         "sum I_ij == |S| * min(t_w, t) on every instance");

  bool equal = true;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 10)(gen);
    const std::size_t iters = std::uniform_int_distribution<std::size_t>(1, 20)(gen);
    const auto log = oracle::random_log(gen, n, iters);
    const std::size_t t = std::uniform_int_distribution<std::size_t>(1, iters)(gen);
    std::vector<std::size_t> windows;
    const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 4)(gen);
    for (std::size_t c = 0; c < count; ++c)
      windows.push_back(std::uniform_int_distribution<std::size_t>(1, t)(gen));
    std::sort(windows.begin(), windows.end());
    const double pipeline = interaction_diversity(log, t, windows).id_value;
    const double brute = oracle::interaction_diversity(log, t, windows);
    if (pipeline != brute) equal = false;
    worst = std::max(worst, std::abs(pipeline - brute));
    for (auto w : windows) {
      const auto curve = destruction_curve(build_network(log, t, w));
      for (std::size_t k = 1; k < curve.components.size(); ++k)
        if (curve.components[k] < curve.components[k - 1]) monotone = false;
    }
    if (!(pipeline >= 0.0 && pipeline <= 1.0 - 1.0 / static_cast<double>(n))) bounded = false;
    ++checked_instances;
  }
  report(6, "ID pipeline == brute-force oracle on 100 instances", equal,
         "max |difference| = " + fmt(worst));
  report(7, "destruction monotonicity and ID bounds", monotone && bounded,
         std::to_string(checked_instances) + " instances; monotone=" +
             (monotone ? "yes" : "no") + ", 0 <= ID <= 1 - 1/|S|: " +
             (bounded ? "yes" : "no"));
}

void benchmark_optima() {
  bool ok = true;
  double worst_value = 0.0;
  double worst_orth = 0.0;
  for (std::size_t m : {10, 50}) {
    for (auto id : {FunctionId::F2, FunctionId::F6, FunctionId::F14, FunctionId::F19}) {
      const Objective f(make_objective_spec(id, 50, m, 7));
      const double v = std::abs(f(f.data().shift));
      worst_value = std::max(worst_value, v);
      for (const auto& r : f.data().rotations)
        worst_orth = std::max(worst_orth, r.orthogonality_error());
    }
  }
  ok = worst_value <= 1e-9 && worst_orth <= 1e-10;
  report(8, "benchmark optima at d=50 and orthogonal rotations", ok,
         "max |f(shift)|=" + fmt(worst_value) + ", max |R^T R - I|=" + fmt(worst_orth));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void sweep_determinism(const std::string& cli, const fs::path& scratch) {
  const auto cfg = scratch / "determinism.cfg";
  std::ofstream(cfg) << "function = F2, F14\ndimension = 10\ngroup_size = 5\n"
                        "swarm_size = 12\nt_max = 300\ndelta_window = 100\n"
                        "repetitions = 3\ntopologies = ring, von_neumann, global\n"
                        "window_set = 5, 20\nid_sample_stride = 2\n";
  int status = 0;
  for (const char* name : {"a", "b"}) {
    const std::string cmd = "\"" + cli + "\" sweep --config \"" + cfg.string() + "\" --out \"" +
                            (scratch / name).string() + "\" --seed 31 --jobs 3 > /dev/null";
    status |= std::system(cmd.c_str());
  }
  const auto a = slurp(scratch / "a" / "summary.csv");
  const auto b = slurp(scratch / "b" / "summary.csv");
  report(9, "sweep summary CSV is byte-identical across executions",
         status == 0 && !a.empty() && a == b,
         "exit status " + std::to_string(status) + ", " + std::to_string(a.size()) + " bytes");
}

void micro_examples() {
  InteractionLog star(4);
  star.append(std::vector<std::uint32_t>{1, 0, 0, 0});
  const std::vector<std::size_t> windows{1};
  const double id = interaction_diversity(star, 1, windows).id_value;

  InteractionLog three(3);
  three.append(std::vector<std::uint32_t>{1, 0, 0});
  const auto net = build_network(three, 1, 1);
  const bool ok = std::abs(id - 0.5833) <= 1e-4 && net.weight(0, 1) == 2 && net.weight(0, 2) == 1;
  report(10, "worked micro-examples", ok,
         "star ID=" + fmt(id) + ", I_01=" + std::to_string(net.weight(0, 1)) +
             ", I_02=" + std::to_string(net.weight(0, 2)));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <swarmnet-cli> <scratch-dir>\n";
    return 2;
  }
  const fs::path scratch = argv[2];
  fs::remove_all(scratch);
  fs::create_directories(scratch);
  try {
    topology_trend_and_destruction_pace();
    id_improvement_association();
    constriction_value();
    network_properties();
    benchmark_optima();
    sweep_determinism(argv[1], scratch);
    micro_examples();
  } catch (const std::exception& e) {
    std::cout << "FAIL  aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed"
                              : std::to_string(failures) + " criterion/criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
