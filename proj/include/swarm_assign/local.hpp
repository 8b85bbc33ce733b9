#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "swarm_assign/comm_graph.hpp"
#include "swarm_assign/errors.hpp"
#include "swarm_assign/graph.hpp"
#include "swarm_assign/model.hpp"
#include "swarm_assign/netsim.hpp"
#include "swarm_assign/nnls.hpp"
#include "swarm_assign/simplex.hpp"

namespace swarm_assign {

struct LocalConfig {
  int h{2};             // locality horizon (number of layers)
  double epsilon{0.1};  // LP tolerance knob; must be > 0
};

struct FractionalSolution {
  std::map<int, double> x;  // primitive id -> value, per-robot sums equal 1
  double w{0.0};            // achieved bottleneck value of x on the full graph
  int rounds_used{0};       // always h + 2
};

// --- Delta_R splitting -------------------------------------------------------

/// Result of rewriting robots with more than two primitives into virtual
/// robots holding consecutive primitive pairs. Primitive ids are unchanged,
/// so a solution on the split graph maps back by identity; virtual robots
/// carry a reduced packing bound so the original per-robot budget holds.
struct SplitResult {
  TripartiteGraph graph;
  std::map<int, double> packing_bound;  // per robot id of `graph`
  std::map<int, int> origin_robot;      // robot id of `graph` -> original robot id
};

inline SplitResult split_graph(const TripartiteGraph& g) {
  SplitResult out;
  int next_id = g.robot_ids().empty() ? 0 : g.robot_ids().back() + 1;
  std::vector<int> robots;
  std::vector<PrimitiveNode> prims;
  for (const int r : g.robot_ids()) {
    const std::vector<int>& own = g.primitives_of(r);
    if (own.size() <= 2) {
      robots.push_back(r);
      out.packing_bound[r] = 1.0;
      out.origin_robot[r] = r;
      for (const int pid : own) prims.push_back({pid, r});
      continue;
    }
    const int groups = static_cast<int>((own.size() + 1) / 2);
    const double bound = 1.0 / static_cast<double>(groups);
    for (int gi = 0; gi < groups; ++gi) {
      const int vid = next_id++;
      robots.push_back(vid);
      out.packing_bound[vid] = bound;
      out.origin_robot[vid] = r;
      for (std::size_t k = static_cast<std::size_t>(gi) * 2;
           k < std::min(own.size(), static_cast<std::size_t>(gi) * 2 + 2); ++k)
        prims.push_back({own[k], vid});
    }
  }
  out.graph = TripartiteGraph(std::move(robots), std::move(prims),
                              g.target_ids(), g.edges());
  return out;
}

// --- the local protocol ------------------------------------------------------

namespace detail {

struct RobotRecord {
  int robot_id{0};
  std::vector<int> primitive_ids;
  std::vector<SensingEdge> edges;  // edges of those primitives

  std::string encode() const {
    std::string s;
    wire::put_i32(s, robot_id);
    wire::put_i32(s, static_cast<std::int32_t>(primitive_ids.size()));
    for (const int pid : primitive_ids) wire::put_i32(s, pid);
    wire::put_i32(s, static_cast<std::int32_t>(edges.size()));
    for (const SensingEdge& e : edges) {
      wire::put_i32(s, e.primitive);
      wire::put_i32(s, e.target);
      wire::put_f64(s, e.weight);
    }
    return s;
  }

  static RobotRecord decode(wire::Reader& r) {
    RobotRecord rec;
    rec.robot_id = r.i32();
    const int np = r.i32();
    rec.primitive_ids.resize(static_cast<std::size_t>(np));
    for (int i = 0; i < np; ++i) rec.primitive_ids[static_cast<std::size_t>(i)] = r.i32();
    const int ne = r.i32();
    rec.edges.resize(static_cast<std::size_t>(ne));
    for (int i = 0; i < ne; ++i) {
      SensingEdge& e = rec.edges[static_cast<std::size_t>(i)];
      e.primitive = r.i32();
      e.target = r.i32();
      e.weight = r.f64();
    }
    return rec;
  }
};

/// Solves the max-min LP restricted to one robot's communication ball and
/// returns the canonical (minimum-norm) optimal point. Pure function of the
/// ball content; memoized by the caller on the serialized subproblem.
struct BallSolver {
  std::unordered_map<std::string, std::vector<double>> memo;

  // Input: records of the ball robots with their hop distance from the
  // solving robot, plus the horizon h. Output: x per primitive id.
  std::map<int, double> solve(const std::vector<std::pair<RobotRecord, int>>& ball, int h) {
    // Canonical variable order: primitives sorted by id.
    std::vector<int> var_pids;
    std::map<int, int> observer_max_dist;   // target -> max observer distance
    for (const auto& [rec, dist] : ball) {
      for (const int pid : rec.primitive_ids) var_pids.push_back(pid);
      for (const SensingEdge& e : rec.edges) {
        auto it = observer_max_dist.find(e.target);
        if (it == observer_max_dist.end())
          observer_max_dist.emplace(e.target, dist);
        else
          it->second = std::max(it->second, dist);
      }
    }
    std::sort(var_pids.begin(), var_pids.end());
    std::map<int, int> var_of;
    for (std::size_t i = 0; i < var_pids.size(); ++i)
      var_of[var_pids[static_cast<std::size_t>(i)]] = static_cast<int>(i);

    MpcpProblem prob;
    prob.num_vars = static_cast<int>(var_pids.size());
    std::vector<std::pair<int, RobotRecord const*>> sorted_ball;
    for (const auto& [rec, dist] : ball) sorted_ball.emplace_back(rec.robot_id, &rec);
    std::sort(sorted_ball.begin(), sorted_ball.end());
    std::map<int, std::vector<std::pair<int, double>>> covering;  // target -> rows
    for (const auto& [rid, rec] : sorted_ball) {
      std::vector<int> row;
      for (const int pid : rec->primitive_ids) row.push_back(var_of.at(pid));
      std::sort(row.begin(), row.end());
      prob.packing_vars.push_back(std::move(row));
      prob.packing_bound.push_back(1.0);
      for (const SensingEdge& e : rec->edges) {
        if (observer_max_dist.at(e.target) > h) continue;  // boundary target: dropped
        covering[e.target].emplace_back(var_of.at(e.primitive), e.weight);
      }
    }
    for (auto& [tid, row] : covering) {
      (void)tid;
      std::sort(row.begin(), row.end());
      prob.covering.push_back(row);
    }

    // Memo key: the canonical subproblem bytes.
    std::string key;
    wire::put_i32(key, prob.num_vars);
    for (const int pid : var_pids) wire::put_i32(key, pid);
    for (const auto& row : prob.packing_vars) {
      wire::put_i32(key, -1);
      for (const int v : row) wire::put_i32(key, v);
    }
    for (const auto& row : prob.covering) {
      wire::put_i32(key, -2);
      for (const auto& [v, c] : row) {
        wire::put_i32(key, v);
        wire::put_f64(key, c);
      }
    }
    auto hit = memo.find(key);
    std::vector<double> x;
    if (hit != memo.end()) {
      x = hit->second;
    } else {
      if (prob.covering.empty()) {
        x.assign(static_cast<std::size_t>(prob.num_vars), 0.0);
      } else {
        MpcpLpResult lp = solve_max_min_lp(prob);
        x = canonical_max_min_point(prob, lp.w, lp.x);
      }
      memo.emplace(std::move(key), x);
    }

    std::map<int, double> out;
    for (std::size_t i = 0; i < var_pids.size(); ++i) out[var_pids[i]] = x[i];
    return out;
  }
};

class LocalProtocol : public Protocol {
 public:
  LocalProtocol(const TripartiteGraph& g, const Adjacency& adj, int h)
      : graph_(g), adj_(adj), h_(h), known_(adj.size()), result_(adj.size()),
        owned_(adj.size()) {}

  int round_bound(int) const override { return h_ + 2; }

  bool activate(int node, int round, const std::vector<Message>& inbox,
                std::vector<Send>& out) override {
    auto& known = known_[static_cast<std::size_t>(node)];
    std::vector<int> fresh;
    if (round == 0) {
      known.emplace(robot_id_of(node), std::make_pair(own_record(node), 0));
      fresh.push_back(robot_id_of(node));
    } else {
      for (const Message& msg : inbox) {
        if (msg.round > h_ + 1) continue;  // ownership claims, no records
        wire::Reader r(msg.payload);
        const int count = r.i32();
        for (int i = 0; i < count; ++i) {
          RobotRecord rec = RobotRecord::decode(r);
          const int rid = rec.robot_id;
          if (known.emplace(rid, std::make_pair(std::move(rec), round)).second)
            fresh.push_back(rid);
        }
      }
    }
    if (round <= h_ && !fresh.empty()) {
      std::sort(fresh.begin(), fresh.end());
      std::string payload;
      wire::put_i32(payload, static_cast<std::int32_t>(fresh.size()));
      for (const int rid : fresh) payload += known.at(rid).first.encode();
      broadcast(node, payload, out);
    }
    if (round == h_ + 1) {
      solve_and_claim(node, out);
      return true;
    }
    return round < h_ + 1;
  }

  /// Normalized x values of each robot's own primitives (by node index).
  const std::vector<std::map<int, double>>& results() const { return result_; }
  /// Targets realized (owned) by each robot.
  const std::vector<std::vector<int>>& owned_targets() const { return owned_; }

 private:
  int robot_id_of(int node) const {
    return graph_.robot_ids()[static_cast<std::size_t>(node)];
  }

  RobotRecord own_record(int node) const {
    RobotRecord rec;
    rec.robot_id = robot_id_of(node);
    rec.primitive_ids = graph_.primitives_of(rec.robot_id);
    for (const int pid : rec.primitive_ids)
      for (const int e : graph_.edge_ids_of_primitive(pid))
        rec.edges.push_back(graph_.edges()[static_cast<std::size_t>(e)]);
    return rec;
  }

  void broadcast(int node, const std::string& payload, std::vector<Send>& out) {
    for (const int nb : adj_[static_cast<std::size_t>(node)]) out.push_back(Send{nb, payload});
  }

  void solve_and_claim(int node, std::vector<Send>& out) {
    auto& known = known_[static_cast<std::size_t>(node)];
    std::vector<std::pair<RobotRecord, int>> ball;
    ball.reserve(known.size());
    for (const auto& [rid, entry] : known) ball.emplace_back(entry.first, entry.second);
    const std::map<int, double> x = solver_.solve(ball, h_);

    // Keep own values, then normalize the per-robot sum to exactly 1.
    const int rid = robot_id_of(node);
    const std::vector<int>& own = graph_.primitives_of(rid);
    std::map<int, double>& mine = result_[static_cast<std::size_t>(node)];
    double sum = 0.0;
    for (const int pid : own) sum += std::max(0.0, x.at(pid));
    if (sum > 1e-12) {
      for (const int pid : own) mine[pid] = std::max(0.0, x.at(pid)) / sum;
    } else if (!own.empty()) {
      const double uniform = 1.0 / static_cast<double>(own.size());
      for (const int pid : own) mine[pid] = uniform;
    }

    // Ownership: lowest robot id among a target's observers realizes it.
    // Co-observers are mutual neighbors, so the ball always contains them.
    std::map<int, int> owner;
    for (const auto& [orid, entry] : known)
      for (const SensingEdge& e : entry.first.edges) {
        auto it = owner.find(e.target);
        if (it == owner.end())
          owner.emplace(e.target, orid);
        else
          it->second = std::min(it->second, orid);
      }
    std::string claim;
    std::vector<std::pair<int, int>> claims;
    for (const int pid : own)
      for (const int e : graph_.edge_ids_of_primitive(pid)) {
        const int tid = graph_.edges()[static_cast<std::size_t>(e)].target;
        claims.emplace_back(tid, owner.at(tid));
      }
    std::sort(claims.begin(), claims.end());
    claims.erase(std::unique(claims.begin(), claims.end()), claims.end());
    for (const auto& [tid, own_rid] : claims)
      if (own_rid == rid) owned_[static_cast<std::size_t>(node)].push_back(tid);
    wire::put_i32(claim, static_cast<std::int32_t>(claims.size()));
    for (const auto& [tid, own_rid] : claims) {
      wire::put_i32(claim, tid);
      wire::put_i32(claim, own_rid);
    }
    broadcast(node, claim, out);
  }

  const TripartiteGraph& graph_;
  const Adjacency& adj_;
  int h_;
  std::vector<std::map<int, std::pair<RobotRecord, int>>> known_;  // robot id -> (record, dist)
  std::vector<std::map<int, double>> result_;
  std::vector<std::vector<int>> owned_;
  BallSolver solver_;
};

}  // namespace detail

struct LocalOptions {
  const Adjacency* extra_comm{nullptr};  // geometric links, by robot index
  RoundLog* log{nullptr};
};

/// Distributed fractional solver for the max-min assignment LP: every robot
/// floods its local records for h+1 rounds, solves the LP restricted to its
/// ball (covering rows only for targets whose observers all lie within h
/// hops), keeps its own variables, and normalizes them to sum 1. One more
/// round exchanges target-ownership claims; rounds_used is always h + 2.
inline FractionalSolution local_solve(const TripartiteGraph& g, const LocalConfig& cfg,
                                      const LocalOptions& opts = {}) {
  if (cfg.h < 0) throw ConfigError("local_solve: h must be >= 0");
  if (!(cfg.epsilon > 0.0)) throw ConfigError("local_solve: epsilon must be > 0");
  const Adjacency adj = robot_comm_graph(g, opts.extra_comm);
  detail::LocalProtocol proto(g, adj, cfg.h);
  RoundLog log = run_protocol(adj, proto);
  if (opts.log) *opts.log = log;

  FractionalSolution sol;
  sol.rounds_used = log.rounds;
  for (const auto& per_robot : proto.results())
    for (const auto& [pid, v] : per_robot) sol.x[pid] = v;
  sol.w = g.num_targets() > 0 ? objective_bottleneck(g, sol.x) : 0.0;
  return sol;
}

/// Per-robot rounding: the highest-valued primitive gets 1, all others 0.
/// Ties (and all-zero robots) resolve to the lowest primitive id.
inline Assignment round_solution(const TripartiteGraph& g, const FractionalSolution& frac) {
  Assignment a;
  for (const int r : g.robot_ids()) {
    const std::vector<int>& own = g.primitives_of(r);
    if (own.empty()) continue;
    int best = own.front();
    double best_v = x_value(frac.x, best);
    for (const int pid : own) {
      const double v = x_value(frac.x, pid);
      if (v > best_v) {
        best = pid;
        best_v = v;
      }
    }
    for (const int pid : own) a.x[pid] = (pid == best) ? 1.0 : 0.0;
  }
  return a;
}

/// Approximation ratio of the local solver at the given degrees and knobs.
inline double approximation_bound(int delta_R, int delta_T, int h, double epsilon) {
  if (delta_R < 2 || delta_T < 2)
    throw DomainError(
        "approximation bound undefined for delta_R < 2 or delta_T < 2: such "
        "instances admit an exact local solution");
  if (h < 1) throw DomainError("approximation bound requires h >= 1");
  if (!(epsilon > 0.0)) throw DomainError("approximation bound requires epsilon > 0");
  return static_cast<double>(delta_R) * (1.0 + epsilon) * (1.0 + 1.0 / static_cast<double>(h)) *
         (1.0 - 1.0 / static_cast<double>(delta_T));
}

/// Geometric target realization: each observable target is owned by the
/// lowest-id robot with an observing primitive; unobserved targets have no
/// owner. Targets are predicted dt seconds ahead first.
inline std::map<int, int> realize_targets(const WorldState& world,
                                          const std::vector<MotionPrimitive>& primitives,
                                          double dt = 0.0) {
  const std::vector<TargetState> predicted = predict_targets(world.targets, dt);
  std::map<int, int> owner;
  for (const MotionPrimitive& p : primitives) {
    for (const TargetState& t : predicted) {
      if (!observable(p, t, world.sensing)) continue;
      auto it = owner.find(t.id);
      if (it == owner.end())
        owner.emplace(t.id, p.robot_id);
      else
        it->second = std::min(it->second, p.robot_id);
    }
  }
  return owner;
}

}  // namespace swarm_assign
