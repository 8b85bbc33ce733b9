#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "swarm_assign/errors.hpp"
#include "swarm_assign/graph.hpp"
#include "swarm_assign/rng.hpp"
#include "swarm_assign/simplex.hpp"

namespace swarm_assign {

namespace detail {

constexpr long long kEnumerationGuard = 1000000;

/// Number of one-primitive-per-robot selections, or -1 past the guard.
inline long long selection_space(const TripartiteGraph& g) {
  long long total = 1;
  for (const int r : g.robot_ids()) {
    const long long d = static_cast<long long>(g.primitives_of(r).size());
    if (d == 0) continue;
    if (total > kEnumerationGuard / d + 1) return -1;
    total *= d;
    if (total > kEnumerationGuard) return -1;
  }
  return total;
}

/// Calls fn(selection) for every one-primitive-per-robot choice, in
/// lexicographic order over robots sorted by id. selection[i] is a primitive
/// id of the i-th robot.
template <typename Fn>
void enumerate_selections(const TripartiteGraph& g, Fn&& fn) {
  std::vector<const std::vector<int>*> choices;
  for (const int r : g.robot_ids()) {
    const std::vector<int>& own = g.primitives_of(r);
    if (!own.empty()) choices.push_back(&own);
  }
  std::vector<std::size_t> odo(choices.size(), 0);
  std::vector<int> selection(choices.size());
  for (;;) {
    for (std::size_t i = 0; i < choices.size(); ++i) selection[i] = (*choices[i])[odo[i]];
    fn(selection);
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++odo[i] < choices[i]->size()) break;
      odo[i] = 0;
      if (i == 0) return;
    }
    if (choices.empty()) return;
  }
}

inline void require_enumerable(const TripartiteGraph& g) {
  if (selection_space(g) < 0)
    throw SizeError("instance too large for brute force: selection space exceeds " +
                    std::to_string(kEnumerationGuard));
}

inline std::map<int, double> selection_to_x(const TripartiteGraph& g,
                                            const std::vector<int>& selection) {
  std::map<int, double> x;
  for (const PrimitiveNode& p : g.primitives()) x[p.id] = 0.0;
  for (const int pid : selection) x[pid] = 1.0;
  return x;
}

}  // namespace detail

/// True iff the instance is small enough for the enumeration oracles.
inline bool brute_force_feasible(const TripartiteGraph& g) {
  return detail::selection_space(g) >= 0;
}

struct BottleneckOptimum {
  Assignment assignment;
  double w{0.0};
};

/// Exact max-min optimum by enumerating every one-primitive-per-robot
/// selection; returns the lexicographically smallest maximizer.
inline BottleneckOptimum brute_force_bottleneck(const TripartiteGraph& g) {
  detail::require_enumerable(g);
  if (g.num_targets() == 0)
    throw DomainError("bottleneck optimum undefined: graph has no targets");
  // Per-primitive coverage contributions, indexed for the inner loop.
  const std::size_t nt = g.num_targets();
  std::vector<std::vector<std::pair<int, double>>> contrib(g.num_primitives());
  for (const SensingEdge& e : g.edges())
    contrib[static_cast<std::size_t>(g.primitive_index(e.primitive))]
        .emplace_back(g.target_index(e.target), e.weight);

  std::vector<double> cover(nt, 0.0);
  std::vector<int> best_selection;
  double best_w = -1.0;
  detail::enumerate_selections(g, [&](const std::vector<int>& sel) {
    std::fill(cover.begin(), cover.end(), 0.0);
    for (const int pid : sel)
      for (const auto& [t, c] : contrib[static_cast<std::size_t>(g.primitive_index(pid))])
        cover[static_cast<std::size_t>(t)] += c;
    double w = cover.empty() ? 0.0 : *std::min_element(cover.begin(), cover.end());
    if (w > best_w) {
      best_w = w;
      best_selection = sel;
    }
  });
  BottleneckOptimum out;
  out.w = std::max(best_w, 0.0);
  out.assignment.x = detail::selection_to_x(g, best_selection);
  return out;
}

struct WtaOptimum {
  Assignment assignment;
  double v{0.0};
};

/// Exact winner-takes-all optimum: for each enumerated selection the best
/// responsibility assignment gives each target to its best-tracking robot,
/// so the value is the sum of per-target maxima.
inline WtaOptimum brute_force_wta(const TripartiteGraph& g) {
  detail::require_enumerable(g);
  const std::size_t nt = g.num_targets();
  std::vector<std::vector<std::pair<int, double>>> contrib(g.num_primitives());
  for (const SensingEdge& e : g.edges())
    contrib[static_cast<std::size_t>(g.primitive_index(e.primitive))]
        .emplace_back(g.target_index(e.target), e.weight);
  // With one primitive per robot, a robot's quality at a target is just the
  // selected primitive's weight there, so the optimal responsibility value
  // for a selection is the per-target maximum.
  std::vector<double> best_q(nt, 0.0);
  std::vector<int> best_selection;
  double best_v = -1.0;
  detail::enumerate_selections(g, [&](const std::vector<int>& sel) {
    std::fill(best_q.begin(), best_q.end(), 0.0);
    for (const int pid : sel) {
      const std::size_t pi = static_cast<std::size_t>(g.primitive_index(pid));
      for (const auto& [t, c] : contrib[pi]) {
        double& q = best_q[static_cast<std::size_t>(t)];
        if (c > q) q = c;
      }
    }
    double v = 0.0;
    for (const double q : best_q) v += q;
    if (v > best_v) {
      best_v = v;
      best_selection = sel;
    }
  });

  WtaOptimum out;
  out.v = std::max(best_v, 0.0);
  out.assignment.x = detail::selection_to_x(g, best_selection);
  // Rebuild the responsibility map for the winning selection: per target the
  // best-tracking robot, ties to the lowest robot id, no owner at quality 0.
  for (const int t : g.target_ids()) {
    std::map<int, double> quality_by_robot;
    for (const int e : g.edge_ids_of_target(t)) {
      const SensingEdge& edge = g.edges()[static_cast<std::size_t>(e)];
      if (x_value(out.assignment.x, edge.primitive) > 0.5)
        quality_by_robot[g.robot_of(edge.primitive)] += edge.weight;
    }
    int owner = -1;
    double best = 0.0;
    for (const auto& [rid, q] : quality_by_robot) {
      if (q > best) {
        best = q;
        owner = rid;
      }
    }
    if (owner >= 0) out.assignment.y[{owner, t}] = 1;
  }
  return out;
}

struct LpOptimum {
  std::map<int, double> x;
  double w{0.0};
};

/// Exact optimum of the max-min LP relaxation, with a primal/dual certificate
/// checked to 1e-9. Always at least the integral bottleneck optimum.
inline LpOptimum lp_opt(const TripartiteGraph& g) {
  if (g.num_robots() == 0 || g.num_targets() == 0)
    throw DomainError("LP relaxation undefined on an empty instance");
  MpcpProblem prob;
  prob.num_vars = static_cast<int>(g.num_primitives());
  std::map<int, int> var_of;
  {
    int i = 0;
    for (const PrimitiveNode& p : g.primitives()) var_of[p.id] = i++;
  }
  for (const int r : g.robot_ids()) {
    std::vector<int> row;
    for (const int pid : g.primitives_of(r)) row.push_back(var_of.at(pid));
    std::sort(row.begin(), row.end());
    prob.packing_vars.push_back(std::move(row));
    prob.packing_bound.push_back(1.0);
  }
  for (const int t : g.target_ids()) {
    std::vector<std::pair<int, double>> row;
    for (const int e : g.edge_ids_of_target(t)) {
      const SensingEdge& edge = g.edges()[static_cast<std::size_t>(e)];
      row.emplace_back(var_of.at(edge.primitive), edge.weight);
    }
    std::sort(row.begin(), row.end());
    prob.covering.push_back(std::move(row));
  }
  MpcpLpResult lp = solve_max_min_lp(prob);

  // Certificate: dual feasibility and complementary value agreement. The
  // dual of max w s.t. Ax<=b is min u'b with u'A >= c, u >= 0.
  const std::size_t n_pack = prob.packing_vars.size();
  double dual_value = 0.0;
  for (std::size_t i = 0; i < n_pack; ++i)
    dual_value += lp.dual[i] * prob.packing_bound[i];
  for (const double u : lp.dual)
    if (u < -1e-9) throw Error("lp_opt: negative dual multiplier");
  // Column of w: sum of covering duals must reach 1.
  double w_col = 0.0;
  for (std::size_t i = n_pack; i < lp.dual.size(); ++i) w_col += lp.dual[i];
  if (w_col < 1.0 - 1e-7) throw Error("lp_opt: dual infeasible on the objective column");
  // Columns of x: packing dual minus weighted covering duals must be >= 0.
  std::vector<double> slack(static_cast<std::size_t>(prob.num_vars), 0.0);
  for (std::size_t i = 0; i < n_pack; ++i)
    for (const int v : prob.packing_vars[i]) slack[static_cast<std::size_t>(v)] += lp.dual[i];
  for (std::size_t i = 0; i < prob.covering.size(); ++i)
    for (const auto& [v, c] : prob.covering[i])
      slack[static_cast<std::size_t>(v)] -= c * lp.dual[n_pack + i];
  for (const double s : slack)
    if (s < -1e-7) throw Error("lp_opt: dual infeasible on a primitive column");
  if (std::abs(dual_value - lp.w) > 1e-9 * std::max(1.0, std::abs(lp.w)))
    throw Error("lp_opt: duality gap exceeds tolerance");

  LpOptimum out;
  out.w = lp.w;
  for (const auto& [pid, v] : var_of) out.x[pid] = lp.x[static_cast<std::size_t>(v)];
  return out;
}

/// Uniform independent choice of one primitive per robot.
inline Assignment random_baseline(const TripartiteGraph& g, std::uint64_t seed) {
  Rng rng = derive_stream(seed, "baseline");
  Assignment a;
  for (const int r : g.robot_ids()) {
    const std::vector<int>& own = g.primitives_of(r);
    if (own.empty()) continue;
    const int pick = own[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<int>(own.size()) - 1))];
    for (const int pid : own) a.x[pid] = (pid == pick) ? 1.0 : 0.0;
  }
  return a;
}

}  // namespace swarm_assign
