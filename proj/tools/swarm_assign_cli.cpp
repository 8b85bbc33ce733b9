// Command-line surface: instance generation, single-instance solving, the
// benchmark harness, and the multi-step tracking simulation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swarm_assign/swarm_assign.hpp"

namespace {

using namespace swarm_assign;

std::string fmt_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string selection_string(const TripartiteGraph& g, const std::map<int, double>& x) {
  std::string s;
  for (const int r : g.robot_ids()) {
    int chosen = -1;
    for (const int pid : g.primitives_of(r))
      if (x_value(x, pid) > 0.5) chosen = pid;
    if (chosen < 0) continue;
    if (!s.empty()) s += ';';
    s += std::to_string(r) + ":" + std::to_string(chosen);
  }
  return s;
}

std::string values_string(const std::map<int, double>& x) {
  std::string s;
  for (const auto& [pid, v] : x) {
    if (!s.empty()) s += ';';
    s += std::to_string(pid) + "=" + fmt_g9(v);
  }
  return s;
}

std::string responsibility_string(const std::map<std::pair<int, int>, int>& y) {
  std::string s;
  for (const auto& [key, v] : y) {
    if (v == 0) continue;
    if (!s.empty()) s += ';';
    s += std::to_string(key.second) + ":" + std::to_string(key.first);
  }
  return s;
}

struct SolveReport {
  std::string algo;
  std::string objective;
  std::string objective_frac;
  std::string coverage;
  std::string rounds;
  std::string selection;
  std::string values;
  std::string responsibility;
};

void print_report(const SolveReport& rep, const std::string& format) {
  if (format == "csv") {
    std::cout << "# swarm-assign solve v1\n";
    std::cout << "algo,objective,objective_frac,coverage,rounds,selection,values,responsibility\n";
    std::cout << rep.algo << ',' << rep.objective << ',' << rep.objective_frac << ','
              << rep.coverage << ',' << rep.rounds << ',' << rep.selection << ','
              << rep.values << ',' << rep.responsibility << "\n";
    return;
  }
  std::cout << "algo: " << rep.algo << "\n";
  std::cout << "objective: " << rep.objective << "\n";
  if (!rep.objective_frac.empty())
    std::cout << "objective_frac: " << rep.objective_frac << "\n";
  if (!rep.coverage.empty()) std::cout << "coverage: " << rep.coverage << "\n";
  std::cout << "rounds: " << rep.rounds << "\n";
  if (!rep.selection.empty()) std::cout << "selection: " << rep.selection << "\n";
  if (!rep.values.empty()) std::cout << "x: " << rep.values << "\n";
  if (!rep.responsibility.empty())
    std::cout << "responsibility: " << rep.responsibility << "\n";
}

std::vector<int> parse_order(const TripartiteGraph& g, const std::string& order,
                             std::uint64_t seed) {
  if (order.empty() || order == "ascending") return g.robot_ids();
  if (order == "random") {
    std::vector<int> ids = g.robot_ids();
    Rng rng = derive_stream(seed, "ordering");
    for (int i = static_cast<int>(ids.size()) - 1; i > 0; --i)
      std::swap(ids[static_cast<std::size_t>(i)],
                ids[static_cast<std::size_t>(rng.uniform_int(0, i))]);
    return ids;
  }
  std::vector<int> ids;
  std::stringstream ss(order);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      ids.push_back(std::stoi(item));
    } catch (...) {
      throw ConfigError("--order must be 'ascending', 'random' or a comma-separated permutation");
    }
  }
  return ids;
}

int cmd_solve(const std::string& file, const std::string& algo, int h, double epsilon,
              const std::string& order, std::uint64_t seed, const std::string& format) {
  const TripartiteGraph g = load_instance(file);
  SolveReport rep;
  rep.algo = algo;
  if (algo == "local") {
    const FractionalSolution frac = local_solve(g, LocalConfig{h, epsilon});
    const Assignment a = round_solution(g, frac);
    rep.objective = fmt_g9(g.num_targets() > 0 ? objective_bottleneck(g, a.x) : 0.0);
    rep.objective_frac = fmt_g9(frac.w);
    rep.coverage = std::to_string(coverage_count(g, a.x));
    rep.rounds = std::to_string(frac.rounds_used);
    rep.selection = selection_string(g, a.x);
    rep.values = values_string(frac.x);
  } else if (algo == "greedy") {
    const GreedyResult res = greedy_assign(g, parse_order(g, order, seed));
    rep.objective = fmt_g9(objective_wta(g, res.assignment.x, res.assignment.y));
    rep.coverage = std::to_string(coverage_count(g, res.assignment.x));
    rep.rounds = std::to_string(res.rounds);
    rep.selection = selection_string(g, res.assignment.x);
    rep.responsibility = responsibility_string(res.assignment.y);
  } else if (algo == "bf-bottleneck") {
    const BottleneckOptimum opt = brute_force_bottleneck(g);
    rep.objective = fmt_g9(opt.w);
    rep.coverage = std::to_string(coverage_count(g, opt.assignment.x));
    rep.rounds = "0";
    rep.selection = selection_string(g, opt.assignment.x);
  } else if (algo == "bf-wta") {
    const WtaOptimum opt = brute_force_wta(g);
    rep.objective = fmt_g9(opt.v);
    rep.coverage = std::to_string(coverage_count(g, opt.assignment.x));
    rep.rounds = "0";
    rep.selection = selection_string(g, opt.assignment.x);
    rep.responsibility = responsibility_string(opt.assignment.y);
  } else if (algo == "lp") {
    const LpOptimum opt = lp_opt(g);
    rep.objective = fmt_g9(opt.w);
    rep.objective_frac = fmt_g9(opt.w);
    rep.rounds = "0";
    rep.values = values_string(opt.x);
  } else if (algo == "random") {
    const Assignment a = random_baseline(g, seed);
    rep.objective = fmt_g9(tracking_quality(g, a.x));
    rep.coverage = std::to_string(coverage_count(g, a.x));
    rep.rounds = "0";
    rep.selection = selection_string(g, a.x);
  } else {
    throw ConfigError("unknown --algo '" + algo + "'");
  }
  print_report(rep, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swarm-assign: motion-primitive / target assignment toolkit"};
  app.require_subcommand(1);
  // --h is a domain flag (locality horizon), so help is --help only.
  app.set_help_flag("--help", "print help");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance file");
  gen->set_help_flag("--help", "print help");
  int gen_robots = 3, gen_targets = 3;
  double gen_degree = 2.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--robots", gen_robots, "number of robots")->required();
  gen->add_option("--targets", gen_targets, "number of targets")->required();
  gen->add_option("--target-degree", gen_degree, "average target degree")->required();
  gen->add_option("--seed", gen_seed, "rng seed")->default_val(0);
  gen->add_option("--out", gen_out, "output instance file")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "run one algorithm on an instance file");
  solve->set_help_flag("--help", "print help");
  std::string solve_file, solve_algo = "local", solve_order, solve_format = "text";
  int solve_h = 2;
  double solve_eps = 0.1;
  std::uint64_t solve_seed = 0;
  solve->add_option("file", solve_file, "instance file")->required();
  solve->add_option("--algo", solve_algo,
                    "local|greedy|bf-bottleneck|bf-wta|lp|random");
  solve->add_option("--h", solve_h, "locality horizon (local)");
  solve->add_option("--epsilon", solve_eps, "LP tolerance knob (local)");
  solve->add_option("--order", solve_order, "greedy order: ascending|random|i,j,k,...");
  solve->add_option("--seed", solve_seed, "seed for random order / random baseline");
  solve->add_option("--format", solve_format, "text|csv");

  // bench
  auto* bench = app.add_subcommand("bench", "benchmark algorithms over random instances");
  bench->set_help_flag("--help", "print help");
  BenchSpec spec;
  std::string bench_csv;
  bench->add_option("--robots", spec.robots, "robot counts")->delimiter(',');
  bench->add_option("--targets", spec.targets, "target counts")->delimiter(',');
  bench->add_option("--degrees", spec.degrees, "average target degrees")->delimiter(',');
  bench->add_option("--trials", spec.trials, "trials per setting");
  bench->add_option("--algos", spec.algos,
                    "algorithms: local,greedy,random,bf-bottleneck,bf-wta,lp")
      ->delimiter(',');
  bench->add_option("--h", spec.h, "locality horizon for local");
  bench->add_option("--epsilon", spec.epsilon, "LP tolerance knob for local");
  bench->add_option("--seed", spec.seed, "rng seed");
  bench->add_option("--csv", bench_csv, "output CSV file")->required();

  // simulate
  auto* sim = app.add_subcommand("simulate", "run the multi-step tracking simulation");
  sim->set_help_flag("--help", "print help");
  std::string sim_config, sim_csv, sim_trace;
  sim->add_option("--config", sim_config, "simulation config file (JSON)")->required();
  sim->add_option("--csv", sim_csv, "per-step metrics CSV output")->required();
  sim->add_option("--trace", sim_trace, "trajectory trace CSV output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      const TripartiteGraph g = random_instance(gen_robots, gen_targets, gen_degree, gen_seed);
      save_instance(g, gen_out);
      return 0;
    }
    if (solve->parsed())
      return cmd_solve(solve_file, solve_algo, solve_h, solve_eps, solve_order, solve_seed,
                       solve_format);
    if (bench->parsed()) {
      const BenchResult result = run_bench(spec);
      std::ostringstream out;
      write_bench_csv(result, out);
      write_file(bench_csv, out.str());
      return result.any_skipped ? 3 : 0;
    }
    if (sim->parsed()) {
      std::ifstream in(sim_config, std::ios::binary);
      if (!in) throw ParseError("cannot open config file: " + sim_config);
      std::ostringstream buf;
      buf << in.rdbuf();
      SimConfig cfg;
      try {
        cfg = parse_sim_config(buf.str());
      } catch (const ParseError& e) {
        throw ParseError(sim_config + ": " + e.what());
      }
      const SimResult result = run(cfg);
      std::ostringstream metrics, trace;
      write_metrics_csv(result, metrics);
      write_trace_csv(result, trace);
      write_file(sim_csv, metrics.str());
      write_file(sim_trace, trace.str());
      return 0;
    }
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
