#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "swarm_assign/errors.hpp"
#include "swarm_assign/graph.hpp"
#include "swarm_assign/greedy.hpp"
#include "swarm_assign/local.hpp"
#include "swarm_assign/oracle.hpp"
#include "swarm_assign/random_instance.hpp"

namespace swarm_assign {

struct BenchSpec {
  std::vector<int> robots{5, 10, 20};
  std::vector<int> targets{20, 50};
  std::vector<double> degrees{2.0, 4.0};
  int trials{100};
  std::vector<std::string> algos{"local", "greedy", "random"};
  int h{2};
  double epsilon{0.1};
  std::uint64_t seed{0};
};

struct BenchRow {
  int setting_id{0};
  int n_robots{0};
  int n_targets{0};
  double degree{0.0};
  int trial{0};
  std::string algo;
  bool skipped{false};
  bool has_coverage{false};
  int coverage{0};
  double objective{0.0};
  int rounds{0};
  std::uint64_t seed{0};
};

struct BenchSummary {
  int setting_id{0};
  int n_robots{0};
  int n_targets{0};
  double degree{0.0};
  std::string algo;
  bool has_values{false};
  double mean{0.0};
  int min{0};
  int max{0};
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<BenchSummary> summaries;
  bool any_skipped{false};
};

namespace detail {

inline int worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("SWARM_ASSIGN_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned long>(cap) < n) n = static_cast<unsigned>(cap);
  }
  return static_cast<int>(n);
}

inline BenchRow bench_cell_algo(const TripartiteGraph& g, const std::string& algo,
                                const BenchSpec& spec, std::uint64_t cell_seed) {
  BenchRow row;
  row.algo = algo;
  row.seed = cell_seed;
  const std::vector<int> ascending = g.robot_ids();
  if (algo == "local") {
    const FractionalSolution frac = local_solve(g, LocalConfig{spec.h, spec.epsilon});
    const Assignment a = round_solution(g, frac);
    row.coverage = coverage_count(g, a.x);
    row.has_coverage = true;
    row.objective = objective_bottleneck(g, a.x);
    row.rounds = frac.rounds_used;
  } else if (algo == "greedy") {
    const GreedyResult res = greedy_assign(g, ascending);
    row.coverage = coverage_count(g, res.assignment.x);
    row.has_coverage = true;
    row.objective = objective_wta(g, res.assignment.x, res.assignment.y);
    row.rounds = res.rounds;
  } else if (algo == "random") {
    const Assignment a = random_baseline(g, cell_seed);
    row.coverage = coverage_count(g, a.x);
    row.has_coverage = true;
    row.objective = tracking_quality(g, a.x);
    row.rounds = 0;
  } else if (algo == "bf-bottleneck") {
    if (!brute_force_feasible(g)) {
      row.skipped = true;
      return row;
    }
    const BottleneckOptimum opt = brute_force_bottleneck(g);
    row.coverage = coverage_count(g, opt.assignment.x);
    row.has_coverage = true;
    row.objective = opt.w;
    row.rounds = 0;
  } else if (algo == "bf-wta") {
    if (!brute_force_feasible(g)) {
      row.skipped = true;
      return row;
    }
    const WtaOptimum opt = brute_force_wta(g);
    row.coverage = coverage_count(g, opt.assignment.x);
    row.has_coverage = true;
    row.objective = opt.v;
    row.rounds = 0;
  } else if (algo == "lp") {
    const LpOptimum opt = lp_opt(g);
    row.objective = opt.w;
    row.rounds = 0;
  } else {
    throw ConfigError("unknown algorithm '" + algo + "'");
  }
  return row;
}

}  // namespace detail

/// Runs the full (robots x targets x degrees) x trials grid. Cells may be
/// evaluated by several workers (capped by SWARM_ASSIGN_THREADS); rows are
/// assembled in deterministic sorted order afterwards, so output bytes do
/// not depend on the worker count.
inline BenchResult run_bench(const BenchSpec& spec) {
  if (spec.trials < 1) throw ConfigError("bench: trials must be >= 1");
  if (spec.robots.empty() || spec.targets.empty() || spec.degrees.empty())
    throw ConfigError("bench: robots/targets/degrees must be non-empty");
  if (spec.algos.empty()) throw ConfigError("bench: algos must be non-empty");

  struct Setting {
    int id;
    int robots;
    int targets;
    double degree;
  };
  std::vector<Setting> settings;
  int sid = 0;
  for (const int r : spec.robots)
    for (const int t : spec.targets)
      for (const double d : spec.degrees) settings.push_back({sid++, r, t, d});

  struct Cell {
    int setting;
    int trial;
  };
  std::vector<Cell> cells;
  for (const Setting& s : settings)
    for (int trial = 0; trial < spec.trials; ++trial) cells.push_back({s.id, trial});

  std::vector<std::vector<BenchRow>> cell_rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;

  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        const Setting& s = settings[static_cast<std::size_t>(cells[i].setting)];
        const std::uint64_t cell_seed =
            stream_key(spec.seed, "bench-instance", static_cast<std::uint64_t>(s.id),
                       static_cast<std::uint64_t>(cells[i].trial));
        const TripartiteGraph g = random_instance(s.robots, s.targets, s.degree, cell_seed);
        for (const std::string& algo : spec.algos) {
          BenchRow row = detail::bench_cell_algo(g, algo, spec, cell_seed);
          row.setting_id = s.id;
          row.n_robots = s.robots;
          row.n_targets = s.targets;
          row.degree = s.degree;
          row.trial = cells[i].trial;
          cell_rows[i].push_back(std::move(row));
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const int workers = std::min<int>(detail::worker_count(), static_cast<int>(cells.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  BenchResult result;
  for (const std::vector<BenchRow>& rows : cell_rows)
    for (const BenchRow& row : rows) {
      result.rows.push_back(row);
      if (row.skipped) result.any_skipped = true;
    }

  for (const Setting& s : settings) {
    for (const std::string& algo : spec.algos) {
      BenchSummary sum;
      sum.setting_id = s.id;
      sum.n_robots = s.robots;
      sum.n_targets = s.targets;
      sum.degree = s.degree;
      sum.algo = algo;
      long long total = 0;
      int count = 0;
      for (const BenchRow& row : result.rows) {
        if (row.setting_id != s.id || row.algo != algo || row.skipped || !row.has_coverage)
          continue;
        if (count == 0) {
          sum.min = row.coverage;
          sum.max = row.coverage;
        }
        sum.min = std::min(sum.min, row.coverage);
        sum.max = std::max(sum.max, row.coverage);
        total += row.coverage;
        ++count;
      }
      if (count > 0) {
        sum.has_values = true;
        sum.mean = static_cast<double>(total) / static_cast<double>(count);
      }
      result.summaries.push_back(std::move(sum));
    }
  }
  return result;
}

namespace detail {
inline std::string bench_fmt_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}
}  // namespace detail

inline void write_bench_csv(const BenchResult& result, std::ostream& out) {
  out << "# swarm-assign bench v1\n";
  out << "setting_id,n_robots,n_targets,degree,trial,algo,coverage,objective,rounds,seed\n";
  for (const BenchRow& row : result.rows) {
    out << row.setting_id << ',' << row.n_robots << ',' << row.n_targets << ','
        << detail::bench_fmt_g9(row.degree) << ',' << row.trial << ',' << row.algo << ',';
    if (row.skipped) {
      out << "skipped,,," << row.seed << '\n';
      continue;
    }
    if (row.has_coverage) out << row.coverage;
    out << ',' << detail::bench_fmt_g9(row.objective) << ',' << row.rounds << ',' << row.seed
        << '\n';
  }
  for (const BenchSummary& sum : result.summaries) {
    for (const char* stat : {"mean", "min", "max"}) {
      out << sum.setting_id << ',' << sum.n_robots << ',' << sum.n_targets << ','
          << detail::bench_fmt_g9(sum.degree) << ',' << stat << ',' << sum.algo << ',';
      if (sum.has_values) {
        if (std::string(stat) == "mean")
          out << detail::bench_fmt_g9(sum.mean);
        else if (std::string(stat) == "min")
          out << sum.min;
        else
          out << sum.max;
      }
      out << ",,,\n";
    }
  }
}

}  // namespace swarm_assign
