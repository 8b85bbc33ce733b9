// Acceptance suite: runs every top-level acceptance criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "swarm_assign/swarm_assign.hpp"

using namespace swarm_assign;

namespace {

std::string g_cli_path;
std::string g_data_path;

struct Outcome {
  bool pass{false};
  std::string detail;
};

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

// --- shared corpus helpers ---------------------------------------------------

TripartiteGraph seeded_instance(std::uint64_t seed, int max_robots, int max_targets,
                                double max_degree) {
  Rng rng = derive_stream(seed, "acceptance-corpus");
  const int n = 1 + rng.uniform_int(0, max_robots - 1);
  const int m = 1 + rng.uniform_int(0, max_targets - 1);
  const double deg = 1.0 + rng.uniform(0.0, max_degree - 1.0);
  return random_instance(n, m, std::min(deg, 2.0 * n), rng.next_u64());
}

/// Brute-forceable instance with both degree bounds at least 2.
TripartiteGraph small_instance_d2(std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng = derive_stream(seed, "acceptance-small", attempt);
    const int n = 2 + rng.uniform_int(0, 6);
    const int m = 2 + rng.uniform_int(0, 8);
    const double deg = 2.0 + rng.uniform(0.0, 1.5);
    const TripartiteGraph g = random_instance(n, m, std::min(deg, 2.0 * n), rng.next_u64());
    const DegreeStats d = degrees(g);
    if (d.delta_R >= 2 && d.delta_T >= 2) return g;
  }
}

std::vector<int> permutation(const std::vector<int>& ids, Rng& rng) {
  std::vector<int> order = ids;
  for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(rng.uniform_int(0, i))]);
  return order;
}

TripartiteGraph chain_instance(int n) {
  std::vector<int> robots;
  std::vector<PrimitiveNode> prims;
  std::vector<int> targets;
  std::vector<SensingEdge> edges;
  for (int i = 0; i < n; ++i) {
    robots.push_back(i);
    prims.push_back({2 * i, i});
    prims.push_back({2 * i + 1, i});
  }
  for (int i = 0; i + 1 < n; ++i) {
    targets.push_back(i);
    edges.push_back({2 * i + 1, i, 1.0});
    edges.push_back({2 * (i + 1), i, 1.0});
  }
  return TripartiteGraph(robots, prims, targets, edges);
}

bool packing_ok(const TripartiteGraph& g, const std::map<int, double>& x, bool binary) {
  try {
    if (binary)
      validate_binary(g, x);
    else
      validate_packing(g, x);
  } catch (const Error&) {
    return false;
  }
  return true;
}

bool responsibility_ok(const TripartiteGraph& g, const std::map<std::pair<int, int>, int>& y) {
  try {
    validate_responsibility(g, y);
  } catch (const Error&) {
    return false;
  }
  return true;
}

// --- criteria ----------------------------------------------------------------

Outcome criterion_feasibility() {
  const double t0 = now_seconds();
  int violations = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = derive_stream(i, "feasibility");
    const int n = 1 + rng.uniform_int(0, 19);
    const int m = 1 + rng.uniform_int(0, 29);
    const double deg = std::min(1.0 + rng.uniform(0.0, 3.0), 2.0 * n);
    const TripartiteGraph g = random_instance(n, m, deg, rng.next_u64());

    const FractionalSolution frac = local_solve(g, LocalConfig{2, 0.1});
    if (!packing_ok(g, frac.x, false)) ++violations;
    const Assignment rounded = round_solution(g, frac);
    if (!packing_ok(g, rounded.x, true)) ++violations;

    const GreedyResult greedy = greedy_assign(g, g.robot_ids());
    if (!packing_ok(g, greedy.assignment.x, true)) ++violations;
    if (!responsibility_ok(g, greedy.assignment.y)) ++violations;

    const Assignment rnd = random_baseline(g, i);
    if (!packing_ok(g, rnd.x, true)) ++violations;

    const LpOptimum lp = lp_opt(g);
    if (!packing_ok(g, lp.x, false)) ++violations;

    if (n <= 10) {
      const BottleneckOptimum bf = brute_force_bottleneck(g);
      if (!packing_ok(g, bf.assignment.x, true)) ++violations;
      const WtaOptimum wta = brute_force_wta(g);
      if (!packing_ok(g, wta.assignment.x, true)) ++violations;
      if (!responsibility_ok(g, wta.assignment.y)) ++violations;
    }
  }
  const double dt = now_seconds() - t0;
  Outcome out;
  out.pass = violations == 0 && dt < 30.0;
  out.detail = "1000 instances, " + std::to_string(violations) + " violations, " +
               std::to_string(dt).substr(0, 5) + " s (limit 30)";
  return out;
}

Outcome criterion_greedy_2approx(std::vector<TripartiteGraph>& corpus) {
  const double t0 = now_seconds();
  int violations = 0;
  corpus.clear();
  for (std::uint64_t i = 0; i < 200; ++i) corpus.push_back(small_instance_d2(i));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const TripartiteGraph& g = corpus[i];
    const WtaOptimum opt = brute_force_wta(g);
    Rng rng = derive_stream(static_cast<std::uint64_t>(i), "orders");
    for (int p = 0; p < 10; ++p) {
      const GreedyResult res = greedy_assign(g, permutation(g.robot_ids(), rng));
      const double v = objective_wta(g, res.assignment.x, res.assignment.y);
      if (v < opt.v / 2.0 - 1e-9) ++violations;
    }
  }
  const double dt = now_seconds() - t0;
  Outcome out;
  out.pass = violations == 0 && dt < 120.0;
  out.detail = "200 instances x 10 orderings, " + std::to_string(violations) +
               " violations, " + std::to_string(dt).substr(0, 5) + " s (limit 120)";
  return out;
}

Outcome criterion_quality_identity(const std::vector<TripartiteGraph>& corpus) {
  int violations = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const TripartiteGraph& g = corpus[i];
    Rng rng = derive_stream(static_cast<std::uint64_t>(i), "orders");
    for (int p = 0; p < 10; ++p) {
      const GreedyResult res = greedy_assign(g, permutation(g.robot_ids(), rng));
      const double lhs = tracking_quality(g, res.assignment.x);
      const double rhs = objective_wta(g, res.assignment.x, res.assignment.y);
      if (std::abs(lhs - rhs) > 1e-9) ++violations;
    }
  }
  Outcome out;
  out.pass = violations == 0;
  out.detail = "tracking quality == credited objective on all greedy runs, " +
               std::to_string(violations) + " violations";
  return out;
}

Outcome criterion_ratio_bound(const std::vector<TripartiteGraph>& corpus) {
  const double t0 = now_seconds();
  int violations = 0;
  int checked = 0;
  for (const TripartiteGraph& g : corpus) {
    const DegreeStats deg = degrees(g);
    if (deg.delta_R < 2 || deg.delta_T < 2) continue;
    ++checked;
    const LpOptimum lp = lp_opt(g);
    for (const int h : {1, 2, 3}) {
      const FractionalSolution sol = local_solve(g, LocalConfig{h, 0.1});
      const double bound = approximation_bound(deg.delta_R, deg.delta_T, h, 0.1);
      if (sol.w < lp.w / bound - 1e-9) ++violations;
    }
  }
  const double dt = now_seconds() - t0;
  Outcome out;
  out.pass = violations == 0 && checked == 200 && dt < 120.0;
  out.detail = std::to_string(checked) + " instances x h in {1,2,3}, " +
               std::to_string(violations) + " violations, " +
               std::to_string(dt).substr(0, 5) + " s (limit 120)";
  return out;
}

Outcome criterion_locality() {
  int violations = 0;
  int trials = 0;
  for (std::uint64_t seed = 0; trials < 100; ++seed) {
    Rng rng = derive_stream(seed, "locality");
    const int n = 6 + rng.uniform_int(0, 4);
    const int h = rng.uniform_int(0, 1) == 0 ? 1 : 2;
    if (n < h + 4) continue;
    const TripartiteGraph g = chain_instance(n);
    const FractionalSolution base = local_solve(g, LocalConfig{h, 0.1});

    // Far zone: all robots at chain distance > h+1 from robot 0, i.e. index
    // >= h+2; targets there have observers only in the far zone.
    std::vector<int> robots = g.robot_ids();
    std::vector<PrimitiveNode> prims = g.primitives();
    std::vector<int> targets = g.target_ids();
    std::vector<SensingEdge> edges = g.edges();
    const int kind = rng.uniform_int(0, 2);
    if (kind == 0) {
      // Reweight the last chain target (observers n-2, n-1 > h+1).
      for (auto& e : edges)
        if (e.target == n - 2) e.weight = 0.25 + 0.5 * rng.next_unit();
    } else if (kind == 1) {
      // New target shared by the two last robots.
      const int tid = n + 10;
      targets.push_back(tid);
      edges.push_back({2 * (n - 2) + 1, tid, 1.0});
      edges.push_back({2 * (n - 1), tid, 1.0});
    } else {
      // Append a new far robot + connecting target.
      const int rid = n;
      robots.push_back(rid);
      prims.push_back({2 * n, rid});
      prims.push_back({2 * n + 1, rid});
      const int tid = n + 20;
      targets.push_back(tid);
      edges.push_back({2 * (n - 1) + 1, tid, 1.0});
      edges.push_back({2 * n, tid, 1.0});
    }
    const TripartiteGraph mutated(robots, prims, targets, edges);
    const FractionalSolution after = local_solve(mutated, LocalConfig{h, 0.1});
    for (const int pid : g.primitives_of(0))
      if (base.x.at(pid) != after.x.at(pid)) ++violations;  // bit-identical
    ++trials;
  }
  Outcome out;
  out.pass = violations == 0;
  out.detail = "100 surgery trials, " + std::to_string(violations) + " violations";
  return out;
}

Outcome criterion_component_independence() {
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng = derive_stream(seed, "components");
    const TripartiteGraph a =
        random_instance(1 + rng.uniform_int(0, 4), 1 + rng.uniform_int(0, 6),
                        1.5, rng.next_u64());
    const TripartiteGraph b =
        random_instance(1 + rng.uniform_int(0, 4), 1 + rng.uniform_int(0, 6),
                        1.5, rng.next_u64());
    std::vector<int> robots = a.robot_ids();
    std::vector<PrimitiveNode> prims = a.primitives();
    std::vector<int> targets = a.target_ids();
    std::vector<SensingEdge> edges = a.edges();
    const int r_off = 100, p_off = 1000, t_off = 500;
    for (const int r : b.robot_ids()) robots.push_back(r + r_off);
    for (const auto& p : b.primitives()) prims.push_back({p.id + p_off, p.robot + r_off});
    for (const int t : b.target_ids()) targets.push_back(t + t_off);
    for (const auto& e : b.edges())
      edges.push_back({e.primitive + p_off, e.target + t_off, e.weight});
    const TripartiteGraph whole(robots, prims, targets, edges);
    std::vector<int> b_ids;
    for (const int r : b.robot_ids()) b_ids.push_back(r + r_off);

    const FractionalSolution joint = local_solve(whole, LocalConfig{2, 0.1});
    const FractionalSolution pa =
        local_solve(induced_subgraph(whole, a.robot_ids()), LocalConfig{2, 0.1});
    const FractionalSolution pb =
        local_solve(induced_subgraph(whole, b_ids), LocalConfig{2, 0.1});
    for (const auto& [pid, v] : pa.x)
      if (joint.x.at(pid) != v) ++violations;
    for (const auto& [pid, v] : pb.x)
      if (joint.x.at(pid) != v) ++violations;

    const GreedyResult gw = greedy_assign(whole, whole.robot_ids());
    const GreedyResult ga =
        greedy_assign(induced_subgraph(whole, a.robot_ids()), a.robot_ids());
    const GreedyResult gb = greedy_assign(induced_subgraph(whole, b_ids), b_ids);
    for (const auto& [pid, v] : ga.assignment.x)
      if (x_value(gw.assignment.x, pid) != v) ++violations;
    for (const auto& [pid, v] : gb.assignment.x)
      if (x_value(gw.assignment.x, pid) != v) ++violations;
    for (const auto& [key, v] : gw.assignment.y) {
      const auto& in_a = ga.assignment.y;
      const auto& in_b = gb.assignment.y;
      const bool found = (in_a.count(key) && in_a.at(key) == v) ||
                         (in_b.count(key) && in_b.at(key) == v);
      if (!found) ++violations;
    }
  }
  Outcome out;
  out.pass = violations == 0;
  out.detail = "50 disconnected instances, " + std::to_string(violations) + " mismatches";
  return out;
}

Outcome criterion_round_accounting() {
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng = derive_stream(seed, "rounds");
    const int n = 1 + rng.uniform_int(0, 11);
    const TripartiteGraph g =
        random_instance(n, 1 + rng.uniform_int(0, 9),
                        std::min(2.0, 2.0 * n), rng.next_u64());
    RoundLog glog;
    GreedyOptions gopts;
    gopts.log = &glog;
    greedy_via_protocol(g, g.robot_ids(), gopts);
    if (glog.rounds != n) ++violations;

    const int h = rng.uniform_int(0, 3);
    RoundLog llog;
    LocalOptions lopts;
    lopts.log = &llog;
    const FractionalSolution sol = local_solve(g, LocalConfig{h, 0.1}, lopts);
    if (llog.rounds != h + 2 || sol.rounds_used != h + 2) ++violations;
    // Envelope: h+2 communication rounds within C*max(1,h)*log(1/eps), C=3.
    if (sol.rounds_used > 3.0 * std::max(1, h) * std::log(1.0 / 0.1)) ++violations;
  }
  Outcome out;
  out.pass = violations == 0;
  out.detail = "greedy = |R| rounds, local = h+2 rounds (within envelope) on 40 instances, " +
               std::to_string(violations) + " violations";
  return out;
}

Outcome criterion_table1_properties() {
  Outcome out;
  const TripartiteGraph triad = three_robot_instance();

  // The shipped instance file must match the in-code preset.
  if (!g_data_path.empty()) {
    try {
      const TripartiteGraph shipped = load_instance(g_data_path + "/three_robot.json");
      if (!(shipped == triad)) {
        out.detail = "shipped three_robot.json differs from the preset";
        return out;
      }
    } catch (const Error& e) {
      out.detail = std::string("cannot load shipped three_robot.json: ") + e.what();
      return out;
    }
  }

  int dominant1 = -1, dominant2 = -1;
  double prev1 = -1.0, prev2 = -1.0;
  std::string info;
  for (const int h : {2, 10, 30}) {
    const FractionalSolution sol = local_solve(triad, LocalConfig{h, 0.1});
    for (const int r : triad.robot_ids()) {
      double sum = 0.0;
      for (const int pid : triad.primitives_of(r)) sum += sol.x.at(pid);
      if (std::abs(sum - 1.0) > 1e-9) {
        out.detail = "per-robot sum != 1 at h=" + std::to_string(h);
        return out;
      }
    }
    if (std::abs(sol.x.at(0) - 0.5) > 1e-9 || std::abs(sol.x.at(1) - 0.5) > 1e-9) {
      out.detail = "symmetric robot not (0.5, 0.5) at h=" + std::to_string(h);
      return out;
    }
    const int dom1 = sol.x.at(2) >= sol.x.at(3) ? 2 : 3;
    const int dom2 = sol.x.at(5) >= sol.x.at(4) ? 5 : 4;
    if (dominant1 < 0) {
      dominant1 = dom1;
      dominant2 = dom2;
    }
    if (dom1 != dominant1 || dom2 != dominant2) {
      out.detail = "dominant primitive changed identity at h=" + std::to_string(h);
      return out;
    }
    if (sol.x.at(dominant1) < prev1 - 1e-9 || sol.x.at(dominant2) < prev2 - 1e-9) {
      out.detail = "dominant primitive value decreased at h=" + std::to_string(h);
      return out;
    }
    prev1 = sol.x.at(dominant1);
    prev2 = sol.x.at(dominant2);
    info += " h" + std::to_string(h) + "=" + std::to_string(sol.x.at(dominant1)).substr(0, 6);
  }
  out.pass = true;
  out.detail = "sums=1, symmetric robot 0.5/0.5, stable dominant;" + info;
  return out;
}

Outcome criterion_bench_direction() {
  const double t0 = now_seconds();
  BenchSpec spec;
  spec.robots = {5, 10, 20};
  spec.targets = {20, 50};
  spec.degrees = {2.0, 4.0};
  spec.trials = 100;
  spec.algos = {"local", "greedy", "random"};
  spec.h = 2;
  spec.epsilon = 0.1;
  spec.seed = 20240817;
  const BenchResult result = run_bench(spec);
  int bad_local = 0, bad_greedy = 0;
  std::map<int, std::map<std::string, double>> mean;
  for (const BenchSummary& s : result.summaries)
    if (s.has_values) mean[s.setting_id][s.algo] = s.mean;
  for (const auto& [sid, by_algo] : mean) {
    if (!(by_algo.at("local") > by_algo.at("random"))) ++bad_local;
    if (!(by_algo.at("greedy") >= by_algo.at("random"))) ++bad_greedy;
  }
  const double dt = now_seconds() - t0;
  Outcome out;
  out.pass = bad_local == 0 && bad_greedy == 0 && mean.size() == 12 && dt < 300.0;
  out.detail = "12 settings x 100 trials: local>random in " +
               std::to_string(12 - bad_local) + "/12, greedy>=random in " +
               std::to_string(12 - bad_greedy) + "/12, " +
               std::to_string(dt).substr(0, 6) + " s (limit 300)";
  return out;
}

Outcome criterion_oracle_dominance(const std::vector<TripartiteGraph>& corpus) {
  int violations = 0;
  for (const TripartiteGraph& g : corpus) {
    const LpOptimum lp = lp_opt(g);
    const BottleneckOptimum bf = brute_force_bottleneck(g);
    const FractionalSolution frac = local_solve(g, LocalConfig{2, 0.1});
    const Assignment rounded = round_solution(g, frac);
    const double w_rounded = objective_bottleneck(g, rounded.x);
    if (!(lp.w >= bf.w - 1e-9)) ++violations;
    if (!(bf.w >= w_rounded - 1e-9)) ++violations;
    const WtaOptimum wta = brute_force_wta(g);
    const GreedyResult greedy = greedy_assign(g, g.robot_ids());
    const double v_greedy = objective_wta(g, greedy.assignment.x, greedy.assignment.y);
    if (!(wta.v >= v_greedy - 1e-9)) ++violations;
  }
  Outcome out;
  out.pass = violations == 0;
  out.detail = "lp >= bf-bottleneck >= local-rounded and bf-wta >= greedy on " +
               std::to_string(corpus.size()) + " instances, " +
               std::to_string(violations) + " violations";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome criterion_reproducibility() {
  Outcome out;
  if (g_cli_path.empty()) {
    out.detail = "no --cli path given";
    return out;
  }
  const std::string dir = "acceptance_tmp";
  if (std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) != 0) {
    out.detail = "cannot prepare temp dir";
    return out;
  }
  auto run_cli = [&](const std::string& args) {
    const std::string cmd = g_cli_path + " " + args;
    return std::system(cmd.c_str());
  };

  std::vector<std::string> mismatches;
  auto compare = [&](const std::string& what, const std::string& f1, const std::string& f2) {
    const std::string a = read_file(f1);
    const std::string b = read_file(f2);
    if (a.empty() || a != b) mismatches.push_back(what);
  };

  run_cli("gen --robots 6 --targets 9 --target-degree 2 --seed 5 --out " + dir + "/g1.json");
  run_cli("gen --robots 6 --targets 9 --target-degree 2 --seed 5 --out " + dir + "/g2.json");
  compare("gen", dir + "/g1.json", dir + "/g2.json");

  run_cli("solve " + dir + "/g1.json --algo local --h 2 --format csv > " + dir + "/s1.csv");
  run_cli("solve " + dir + "/g2.json --algo local --h 2 --format csv > " + dir + "/s2.csv");
  compare("solve", dir + "/s1.csv", dir + "/s2.csv");

  run_cli("bench --robots 3,5 --targets 8 --degrees 2 --trials 4 --algos local,greedy,random "
          "--h 1 --seed 3 --csv " + dir + "/b1.csv");
  run_cli("bench --robots 3,5 --targets 8 --degrees 2 --trials 4 --algos local,greedy,random "
          "--h 1 --seed 3 --csv " + dir + "/b2.csv");
  compare("bench", dir + "/b1.csv", dir + "/b2.csv");

  {
    std::ofstream cfg(dir + "/sim.json");
    cfg << R"({"robots":3,"targets":8,"arena":[20,20],"steps":5,"dt":1.0,"rs":3.0,)"
        << R"("rc":10.0,"primitives":{"count":2,"max_step":1.0,"cone_deg":30.0},)"
        << R"("target_motion":"random-walk","target_speed_max":0.5,)"
        << R"("algorithm":"local","h":1,"epsilon":0.1,"seed":4})";
  }
  run_cli("simulate --config " + dir + "/sim.json --csv " + dir + "/m1.csv --trace " +
          dir + "/t1.csv");
  run_cli("simulate --config " + dir + "/sim.json --csv " + dir + "/m2.csv --trace " +
          dir + "/t2.csv");
  compare("simulate-metrics", dir + "/m1.csv", dir + "/m2.csv");
  compare("simulate-trace", dir + "/t1.csv", dir + "/t2.csv");

  out.pass = mismatches.empty();
  out.detail = mismatches.empty()
                   ? "gen/solve/bench/simulate byte-identical across repeat runs"
                   : "mismatched outputs:";
  for (const std::string& m : mismatches) out.detail += " " + m;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    const std::string flag = argv[i];
    if (flag == "--cli") g_cli_path = argv[i + 1];
    if (flag == "--data") g_data_path = argv[i + 1];
  }

  std::vector<TripartiteGraph> small_corpus;
  struct Item {
    int id;
    std::string name;
    std::function<Outcome()> fn;
  };
  const std::vector<Item> items = {
      {1, "feasibility suite", [] { return criterion_feasibility(); }},
      {2, "greedy 2-approximation",
       [&] { return criterion_greedy_2approx(small_corpus); }},
      {3, "quality identity", [&] { return criterion_quality_identity(small_corpus); }},
      {4, "approximation ratio bound",
       [&] { return criterion_ratio_bound(small_corpus); }},
      {5, "locality under far surgery", [] { return criterion_locality(); }},
      {6, "component independence", [] { return criterion_component_independence(); }},
      {7, "round accounting", [] { return criterion_round_accounting(); }},
      {8, "canonical instance properties", [] { return criterion_table1_properties(); }},
      {9, "benchmark direction", [] { return criterion_bench_direction(); }},
      {10, "oracle dominance", [&] { return criterion_oracle_dominance(small_corpus); }},
      {11, "CLI reproducibility", [] { return criterion_reproducibility(); }},
  };

  int failures = 0;
  for (const Item& item : items) {
    const double t0 = now_seconds();
    Outcome out;
    try {
      out = item.fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double dt = now_seconds() - t0;
    std::printf("%s  criterion %2d: %s: %s [%.1f s]\n", out.pass ? "PASS" : "FAIL",
                item.id, item.name.c_str(), out.detail.c_str(), dt);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", items.size());
  return 0;
}
