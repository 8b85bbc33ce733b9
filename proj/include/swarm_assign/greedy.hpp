#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "swarm_assign/comm_graph.hpp"
#include "swarm_assign/errors.hpp"
#include "swarm_assign/graph.hpp"
#include "swarm_assign/netsim.hpp"

namespace swarm_assign {

/// Per-target tracking quality accumulated by the sequential greedy pass,
/// plus the robot order that produced it.
struct QualityState {
  std::map<int, double> w_t;
  std::vector<int> order;
};

struct GreedyResult {
  Assignment assignment;
  QualityState quality;
  int rounds{0};  // = number of robots
};

namespace detail {

inline void check_order(const TripartiteGraph& g, const std::vector<int>& order) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.robot_ids())
    throw ConfigError("greedy order must be a permutation of all robot ids");
}

inline double edge_weight_between(const TripartiteGraph& g, int pid, int tid) {
  for (const int e : g.edge_ids_of_primitive(pid)) {
    const SensingEdge& edge = g.edges()[static_cast<std::size_t>(e)];
    if (edge.target == tid) return edge.weight;
  }
  return 0.0;
}

}  // namespace detail

/// Sequential greedy pass for the winner-takes-all assignment. Robots act in
/// the given order; each scores every own primitive by the summed post-update
/// quality over all targets and selects the argmax (ties: lowest primitive
/// id). Afterwards each target is assigned to the robot whose selected
/// primitive tracks it best (ties: lowest robot id; no owner at quality 0).
inline GreedyResult greedy_assign(const TripartiteGraph& g, const std::vector<int>& order) {
  detail::check_order(g, order);
  GreedyResult res;
  res.quality.order = order;
  res.rounds = static_cast<int>(g.num_robots());
  std::map<int, double>& w = res.quality.w_t;
  for (const int t : g.target_ids()) w[t] = 0.0;

  for (const int r : order) {
    const std::vector<int>& own = g.primitives_of(r);
    if (own.empty()) continue;
    int best_pid = own.front();
    double best_score = -1.0;
    for (const int pid : own) {
      double score = 0.0;
      for (const auto& [tid, wt] : w) score += wt;  // max(w, 0) for unobserved targets
      for (const int e : g.edge_ids_of_primitive(pid)) {
        const SensingEdge& edge = g.edges()[static_cast<std::size_t>(e)];
        const double wt = w.at(edge.target);
        score += std::max(wt, edge.weight) - wt;
      }
      if (score > best_score) {
        best_score = score;
        best_pid = pid;
      }
    }
    for (const int pid : own) res.assignment.x[pid] = (pid == best_pid) ? 1.0 : 0.0;
    for (const int e : g.edge_ids_of_primitive(best_pid)) {
      const SensingEdge& edge = g.edges()[static_cast<std::size_t>(e)];
      double& wt = w.at(edge.target);
      wt = std::max(wt, edge.weight);
    }
  }

  // Responsibility: each target goes to the best-observing robot, if any.
  for (const int t : g.target_ids()) {
    std::map<int, double> quality_by_robot;
    for (const int e : g.edge_ids_of_target(t)) {
      const SensingEdge& edge = g.edges()[static_cast<std::size_t>(e)];
      if (x_value(res.assignment.x, edge.primitive) > 0.5)
        quality_by_robot[g.robot_of(edge.primitive)] += edge.weight;
    }
    int best_robot = -1;
    double best_q = 0.0;
    for (const auto& [rid, q] : quality_by_robot) {
      if (q > best_q) {
        best_q = q;
        best_robot = rid;
      }
    }
    if (best_robot >= 0) res.assignment.y[{best_robot, t}] = 1;
  }
  return res;
}

/// Sum over targets of the best selected-primitive weight tracking them.
inline double tracking_quality(const TripartiteGraph& g, const std::map<int, double>& x) {
  validate_binary(g, x);
  double total = 0.0;
  for (const int t : g.target_ids()) {
    double best = 0.0;
    for (const int e : g.edge_ids_of_target(t)) {
      const SensingEdge& edge = g.edges()[static_cast<std::size_t>(e)];
      if (x_value(x, edge.primitive) > 0.5) best = std::max(best, edge.weight);
    }
    total += best;
  }
  return total;
}

// --- greedy as a synchronous protocol ---------------------------------------

namespace detail {

/// Token-ordered realization of the greedy pass: the robot at order position
/// p acts in round p and broadcasts (target, weight) pairs of its selected
/// primitive plus the list of targets it observes; everyone finalizes the
/// responsibility variables for the targets it realizes in round |R| and
/// halts, so the protocol always logs exactly |R| rounds.
class GreedyProtocol : public Protocol {
 public:
  GreedyProtocol(const TripartiteGraph& g, const Adjacency& adj,
                 const std::vector<int>& order)
      : graph_(g), adj_(adj), position_(adj.size()), w_(adj.size()),
        observer_sets_(adj.size()), quality_(adj.size()), selected_(adj.size(), -1),
        y_(adj.size()) {
    for (std::size_t p = 0; p < order.size(); ++p)
      position_[static_cast<std::size_t>(g.robot_index(order[p]))] = static_cast<int>(p);
    for (int node = 0; node < static_cast<int>(adj.size()); ++node) {
      const int rid = g.robot_ids()[static_cast<std::size_t>(node)];
      for (const int pid : g.primitives_of(rid))
        for (const int e : g.edge_ids_of_primitive(pid)) {
          const int tid = g.edges()[static_cast<std::size_t>(e)].target;
          w_[static_cast<std::size_t>(node)].emplace(tid, 0.0);
          observer_sets_[static_cast<std::size_t>(node)][tid].push_back(rid);
        }
    }
  }

  int round_bound(int n_nodes) const override { return n_nodes + 1; }

  bool activate(int node, int round, const std::vector<Message>& inbox,
                std::vector<Send>& out) override {
    auto& w = w_[static_cast<std::size_t>(node)];
    for (const Message& msg : inbox) {
      wire::Reader r(msg.payload);
      const int sender = r.i32();
      const int n_upd = r.i32();
      for (int i = 0; i < n_upd; ++i) {
        const int tid = r.i32();
        const double c = r.f64();
        auto it = w.find(tid);
        if (it != w.end()) {
          it->second = std::max(it->second, c);
          quality_[static_cast<std::size_t>(node)][tid][sender] = c;
        }
      }
      const int n_obs = r.i32();
      for (int i = 0; i < n_obs; ++i) {
        const int tid = r.i32();
        auto it = observer_sets_[static_cast<std::size_t>(node)].find(tid);
        if (it != observer_sets_[static_cast<std::size_t>(node)].end())
          it->second.push_back(sender);
      }
    }

    const int n = static_cast<int>(adj_.size());
    if (round == position_[static_cast<std::size_t>(node)]) act(node, out);
    if (round == n) {
      finalize(node);
      return false;
    }
    return true;
  }

  std::map<int, double> selections() const {
    std::map<int, double> x;
    for (int node = 0; node < static_cast<int>(adj_.size()); ++node) {
      const int rid = graph_.robot_ids()[static_cast<std::size_t>(node)];
      for (const int pid : graph_.primitives_of(rid))
        x[pid] = (pid == selected_[static_cast<std::size_t>(node)]) ? 1.0 : 0.0;
    }
    return x;
  }

  std::map<std::pair<int, int>, int> responsibilities() const {
    std::map<std::pair<int, int>, int> y;
    for (const auto& per_node : y_)
      for (const auto& [key, v] : per_node) y[key] = v;
    return y;
  }

 private:
  void act(int node, std::vector<Send>& out) {
    const int rid = graph_.robot_ids()[static_cast<std::size_t>(node)];
    const std::vector<int>& own = graph_.primitives_of(rid);
    auto& w = w_[static_cast<std::size_t>(node)];
    int best_pid = own.empty() ? -1 : own.front();
    double best_score = -1.0;
    for (const int pid : own) {
      double score = 0.0;
      for (const auto& [tid, wt] : w) score += wt;
      for (const int e : graph_.edge_ids_of_primitive(pid)) {
        const SensingEdge& edge = graph_.edges()[static_cast<std::size_t>(e)];
        const double wt = w.at(edge.target);
        score += std::max(wt, edge.weight) - wt;
      }
      if (score > best_score) {
        best_score = score;
        best_pid = pid;
      }
    }
    selected_[static_cast<std::size_t>(node)] = best_pid;

    std::string payload;
    wire::put_i32(payload, rid);
    std::vector<std::pair<int, double>> updates;
    if (best_pid >= 0) {
      for (const int e : graph_.edge_ids_of_primitive(best_pid)) {
        const SensingEdge& edge = graph_.edges()[static_cast<std::size_t>(e)];
        updates.emplace_back(edge.target, edge.weight);
        double& wt = w.at(edge.target);
        wt = std::max(wt, edge.weight);
        quality_[static_cast<std::size_t>(node)][edge.target][rid] = edge.weight;
      }
    }
    std::sort(updates.begin(), updates.end());
    wire::put_i32(payload, static_cast<std::int32_t>(updates.size()));
    for (const auto& [tid, c] : updates) {
      wire::put_i32(payload, tid);
      wire::put_f64(payload, c);
    }
    std::vector<int> observed;
    for (const auto& [tid, wt] : w) observed.push_back(tid);
    wire::put_i32(payload, static_cast<std::int32_t>(observed.size()));
    for (const int tid : observed) wire::put_i32(payload, tid);
    for (const int nb : adj_[static_cast<std::size_t>(node)]) out.push_back(Send{nb, payload});
  }

  void finalize(int node) {
    const int rid = graph_.robot_ids()[static_cast<std::size_t>(node)];
    for (auto& [tid, observers] : observer_sets_[static_cast<std::size_t>(node)]) {
      std::sort(observers.begin(), observers.end());
      if (observers.front() != rid) continue;  // realized by a lower-id robot
      int best_robot = -1;
      double best_q = 0.0;
      const auto qit = quality_[static_cast<std::size_t>(node)].find(tid);
      if (qit != quality_[static_cast<std::size_t>(node)].end()) {
        for (const auto& [robot, q] : qit->second) {
          if (q > best_q) {
            best_q = q;
            best_robot = robot;
          }
        }
      }
      if (best_robot >= 0) y_[static_cast<std::size_t>(node)][{best_robot, tid}] = 1;
    }
  }

  const TripartiteGraph& graph_;
  const Adjacency& adj_;
  std::vector<int> position_;
  std::vector<std::map<int, double>> w_;  // per node: own-target qualities
  std::vector<std::map<int, std::vector<int>>> observer_sets_;
  std::vector<std::map<int, std::map<int, double>>> quality_;  // target -> robot -> c
  std::vector<int> selected_;
  std::vector<std::map<std::pair<int, int>, int>> y_;
};

}  // namespace detail

struct GreedyOptions {
  const Adjacency* extra_comm{nullptr};
  RoundLog* log{nullptr};
};

/// Greedy pass executed as a message-passing protocol over the robot
/// communication graph; result matches greedy_assign on exact-weight inputs.
inline GreedyResult greedy_via_protocol(const TripartiteGraph& g,
                                        const std::vector<int>& order,
                                        const GreedyOptions& opts = {}) {
  detail::check_order(g, order);
  const Adjacency adj = robot_comm_graph(g, opts.extra_comm);
  detail::GreedyProtocol proto(g, adj, order);
  RoundLog log = run_protocol(adj, proto);
  if (opts.log) *opts.log = log;
  GreedyResult res;
  res.quality.order = order;
  res.rounds = log.rounds;
  res.assignment.x = proto.selections();
  res.assignment.y = proto.responsibilities();
  for (const int t : g.target_ids()) {
    double best = 0.0;
    for (const int e : g.edge_ids_of_target(t)) {
      const SensingEdge& edge = g.edges()[static_cast<std::size_t>(e)];
      if (x_value(res.assignment.x, edge.primitive) > 0.5)
        best = std::max(best, edge.weight);
    }
    res.quality.w_t[t] = best;
  }
  return res;
}

}  // namespace swarm_assign
