#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "swarm_assign/errors.hpp"
#include "swarm_assign/model.hpp"

namespace swarm_assign {

struct PrimitiveNode {
  int id{0};
  int robot{0};
  bool operator==(const PrimitiveNode& o) const { return id == o.id && robot == o.robot; }
};

struct SensingEdge {
  int primitive{0};
  int target{0};
  double weight{0.0};
  bool operator==(const SensingEdge& o) const {
    return primitive == o.primitive && target == o.target && weight == o.weight;
  }
};

/// The tripartite assignment graph: robots, their motion primitives, and
/// targets, with weighted primitive-target sensing edges. Robot-primitive
/// edges are implicit (weight 1). Immutable after construction; node ids are
/// arbitrary unique non-negative integers, stored sorted.
class TripartiteGraph {
 public:
  TripartiteGraph() = default;

  TripartiteGraph(std::vector<int> robot_ids, std::vector<PrimitiveNode> primitives,
                  std::vector<int> target_ids, std::vector<SensingEdge> edges) {
    robots_ = std::move(robot_ids);
    primitives_ = std::move(primitives);
    targets_ = std::move(target_ids);
    edges_ = std::move(edges);
    std::sort(robots_.begin(), robots_.end());
    std::sort(primitives_.begin(), primitives_.end(),
              [](const PrimitiveNode& a, const PrimitiveNode& b) { return a.id < b.id; });
    std::sort(targets_.begin(), targets_.end());
    std::sort(edges_.begin(), edges_.end(), [](const SensingEdge& a, const SensingEdge& b) {
      return std::tie(a.primitive, a.target) < std::tie(b.primitive, b.target);
    });
    validate_and_index();
  }

  const std::vector<int>& robot_ids() const { return robots_; }
  const std::vector<PrimitiveNode>& primitives() const { return primitives_; }
  const std::vector<int>& target_ids() const { return targets_; }
  const std::vector<SensingEdge>& edges() const { return edges_; }

  std::size_t num_robots() const { return robots_.size(); }
  std::size_t num_primitives() const { return primitives_.size(); }
  std::size_t num_targets() const { return targets_.size(); }

  bool has_robot(int id) const { return robot_index_.count(id) != 0; }
  bool has_primitive(int id) const { return primitive_index_.count(id) != 0; }
  bool has_target(int id) const { return target_index_.count(id) != 0; }

  int robot_index(int robot_id) const { return at(robot_index_, robot_id, "robot"); }
  int primitive_index(int primitive_id) const {
    return at(primitive_index_, primitive_id, "primitive");
  }
  int target_index(int target_id) const { return at(target_index_, target_id, "target"); }

  int robot_of(int primitive_id) const {
    return primitives_[static_cast<std::size_t>(primitive_index(primitive_id))].robot;
  }

  /// Primitive ids of one robot, ascending.
  const std::vector<int>& primitives_of(int robot_id) const {
    return robot_primitives_[static_cast<std::size_t>(robot_index(robot_id))];
  }

  /// Indices into edges() incident to a primitive / target, ascending.
  const std::vector<int>& edge_ids_of_primitive(int primitive_id) const {
    return primitive_edges_[static_cast<std::size_t>(primitive_index(primitive_id))];
  }
  const std::vector<int>& edge_ids_of_target(int target_id) const {
    return target_edges_[static_cast<std::size_t>(target_index(target_id))];
  }

  bool operator==(const TripartiteGraph& o) const {
    return robots_ == o.robots_ && primitives_ == o.primitives_ && targets_ == o.targets_ &&
           edges_ == o.edges_;
  }

 private:
  static int at(const std::unordered_map<int, int>& m, int id, const char* kind) {
    auto it = m.find(id);
    if (it == m.end())
      throw Error(std::string("unknown ") + kind + " id " + std::to_string(id));
    return it->second;
  }

  void validate_and_index() {
    for (std::size_t i = 0; i < robots_.size(); ++i) {
      if (robots_[i] < 0) throw Error("negative robot id " + std::to_string(robots_[i]));
      if (!robot_index_.emplace(robots_[i], static_cast<int>(i)).second)
        throw Error("duplicate robot id " + std::to_string(robots_[i]));
    }
    robot_primitives_.assign(robots_.size(), {});
    for (std::size_t i = 0; i < primitives_.size(); ++i) {
      const PrimitiveNode& p = primitives_[i];
      if (p.id < 0) throw Error("negative primitive id " + std::to_string(p.id));
      if (!primitive_index_.emplace(p.id, static_cast<int>(i)).second)
        throw Error("duplicate primitive id " + std::to_string(p.id));
      auto it = robot_index_.find(p.robot);
      if (it == robot_index_.end())
        throw Error("primitive " + std::to_string(p.id) + " references unknown robot id " +
                    std::to_string(p.robot));
      robot_primitives_[static_cast<std::size_t>(it->second)].push_back(p.id);
    }
    for (std::size_t j = 0; j < targets_.size(); ++j) {
      if (targets_[j] < 0) throw Error("negative target id " + std::to_string(targets_[j]));
      if (!target_index_.emplace(targets_[j], static_cast<int>(j)).second)
        throw Error("duplicate target id " + std::to_string(targets_[j]));
    }
    primitive_edges_.assign(primitives_.size(), {});
    target_edges_.assign(targets_.size(), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const SensingEdge& edge = edges_[e];
      auto pit = primitive_index_.find(edge.primitive);
      if (pit == primitive_index_.end())
        throw Error("edge references unknown primitive id " + std::to_string(edge.primitive));
      auto tit = target_index_.find(edge.target);
      if (tit == target_index_.end())
        throw Error("edge references unknown target id " + std::to_string(edge.target));
      if (!(edge.weight >= 0.0) || !std::isfinite(edge.weight))
        throw Error("edge (" + std::to_string(edge.primitive) + "," +
                    std::to_string(edge.target) + ") has invalid weight");
      if (e > 0 && edges_[e - 1].primitive == edge.primitive &&
          edges_[e - 1].target == edge.target)
        throw Error("duplicate sensing edge (" + std::to_string(edge.primitive) + "," +
                    std::to_string(edge.target) + ")");
      primitive_edges_[static_cast<std::size_t>(pit->second)].push_back(static_cast<int>(e));
      target_edges_[static_cast<std::size_t>(tit->second)].push_back(static_cast<int>(e));
    }
  }

  std::vector<int> robots_;
  std::vector<PrimitiveNode> primitives_;
  std::vector<int> targets_;
  std::vector<SensingEdge> edges_;
  std::unordered_map<int, int> robot_index_;
  std::unordered_map<int, int> primitive_index_;
  std::unordered_map<int, int> target_index_;
  std::vector<std::vector<int>> robot_primitives_;
  std::vector<std::vector<int>> primitive_edges_;
  std::vector<std::vector<int>> target_edges_;
};

/// Selection variables x (per primitive) and responsibility variables y
/// (per robot-target pair). x may be fractional in [0,1]; y is binary.
struct Assignment {
  std::map<int, double> x;
  std::map<std::pair<int, int>, int> y;
};

struct DegreeStats {
  int delta_R{0};  // max primitives per robot
  int delta_T{0};  // max primitives observing one target
};

inline DegreeStats degrees(const TripartiteGraph& g) {
  DegreeStats d;
  for (const int r : g.robot_ids())
    d.delta_R = std::max(d.delta_R, static_cast<int>(g.primitives_of(r).size()));
  for (const int t : g.target_ids())
    d.delta_T = std::max(d.delta_T, static_cast<int>(g.edge_ids_of_target(t).size()));
  return d;
}

constexpr double kPackingTolerance = 1e-9;

inline double x_value(const std::map<int, double>& x, int primitive_id) {
  auto it = x.find(primitive_id);
  return it == x.end() ? 0.0 : it->second;
}

/// Enforces the per-robot packing constraint: sum of x over each robot's
/// primitives must not exceed 1 (+1e-9), all values in [0, 1+1e-9].
inline void validate_packing(const TripartiteGraph& g, const std::map<int, double>& x) {
  for (const auto& [pid, v] : x) {
    if (!g.has_primitive(pid))
      throw Error("x references unknown primitive id " + std::to_string(pid));
    if (!(v >= 0.0) || v > 1.0 + kPackingTolerance)
      throw Error("x[" + std::to_string(pid) + "] out of [0,1]");
  }
  for (const int r : g.robot_ids()) {
    double sum = 0.0;
    for (const int pid : g.primitives_of(r)) sum += x_value(x, pid);
    if (sum > 1.0 + kPackingTolerance)
      throw Error("packing violated for robot " + std::to_string(r) + ": sum " +
                  std::to_string(sum));
  }
}

inline void validate_binary(const TripartiteGraph& g, const std::map<int, double>& x) {
  validate_packing(g, x);
  for (const auto& [pid, v] : x) {
    (void)pid;
    if (std::abs(v) > kPackingTolerance && std::abs(v - 1.0) > kPackingTolerance)
      throw Error("x must be binary");
  }
}

/// Enforces the per-target responsibility constraint: at most one robot per
/// target, y values in {0,1}, keys valid.
inline void validate_responsibility(const TripartiteGraph& g,
                                    const std::map<std::pair<int, int>, int>& y) {
  std::map<int, int> per_target;
  for (const auto& [key, v] : y) {
    if (!g.has_robot(key.first))
      throw Error("y references unknown robot id " + std::to_string(key.first));
    if (!g.has_target(key.second))
      throw Error("y references unknown target id " + std::to_string(key.second));
    if (v != 0 && v != 1) throw Error("y values must be 0 or 1");
    per_target[key.second] += v;
  }
  for (const auto& [tid, sum] : per_target)
    if (sum > 1)
      throw Error("responsibility violated for target " + std::to_string(tid));
}

/// Coverage of one target under x: sum of c * x over its sensing edges.
inline double target_coverage(const TripartiteGraph& g, const std::map<int, double>& x,
                              int target_id) {
  double sum = 0.0;
  for (const int e : g.edge_ids_of_target(target_id)) {
    const SensingEdge& edge = g.edges()[static_cast<std::size_t>(e)];
    sum += edge.weight * x_value(x, edge.primitive);
  }
  return sum;
}

/// Max-min objective: the worst per-target coverage. Undefined (error) on a
/// graph with no targets; benchmark code filters such instances.
inline double objective_bottleneck(const TripartiteGraph& g, const std::map<int, double>& x) {
  validate_packing(g, x);
  if (g.num_targets() == 0)
    throw DomainError("bottleneck objective undefined: graph has no targets");
  double worst = std::numeric_limits<double>::infinity();
  for (const int t : g.target_ids()) worst = std::min(worst, target_coverage(g, x, t));
  return worst;
}

/// Winner-takes-all objective: each target's coverage is credited to the
/// single robot assigned to it by y.
inline double objective_wta(const TripartiteGraph& g, const std::map<int, double>& x,
                            const std::map<std::pair<int, int>, int>& y) {
  validate_binary(g, x);
  validate_responsibility(g, y);
  double total = 0.0;
  for (const auto& [key, v] : y) {
    if (v == 0) continue;
    const auto& [robot, target] = key;
    double quality = 0.0;
    for (const int e : g.edge_ids_of_target(target)) {
      const SensingEdge& edge = g.edges()[static_cast<std::size_t>(e)];
      if (g.robot_of(edge.primitive) == robot)
        quality += edge.weight * x_value(x, edge.primitive);
    }
    total += quality;
  }
  return total;
}

/// Number of targets with at least one selected observing primitive (c > 0).
inline int coverage_count(const TripartiteGraph& g, const std::map<int, double>& x) {
  validate_binary(g, x);
  int covered = 0;
  for (const int t : g.target_ids()) {
    for (const int e : g.edge_ids_of_target(t)) {
      const SensingEdge& edge = g.edges()[static_cast<std::size_t>(e)];
      if (edge.weight > 0.0 && x_value(x, edge.primitive) > 0.5) {
        ++covered;
        break;
      }
    }
  }
  return covered;
}

/// Builds the assignment graph from a geometric world: one sensing edge per
/// (primitive, predicted target) pair that is observable with positive weight.
inline TripartiteGraph build_graph(const WorldState& world,
                                   const std::vector<MotionPrimitive>& primitives,
                                   WeightScheme scheme, double dt) {
  const std::vector<TargetState> predicted = predict_targets(world.targets, dt);
  std::vector<int> robot_ids;
  robot_ids.reserve(world.robots.size());
  for (const RobotState& r : world.robots) robot_ids.push_back(r.id);
  std::vector<PrimitiveNode> prims;
  prims.reserve(primitives.size());
  for (const MotionPrimitive& p : primitives) prims.push_back({p.id, p.robot_id});
  std::vector<int> target_ids;
  target_ids.reserve(world.targets.size());
  for (const TargetState& t : world.targets) target_ids.push_back(t.id);
  std::vector<SensingEdge> edges;
  for (const MotionPrimitive& p : primitives) {
    for (const TargetState& t : predicted) {
      const double c = weight(p, t, world.sensing, scheme);
      if (c > 0.0) edges.push_back({p.id, t.id, c});
    }
  }
  return TripartiteGraph(std::move(robot_ids), std::move(prims), std::move(target_ids),
                         std::move(edges));
}

/// Induced subgraph on a subset of robots (keeps ids). Targets are kept iff
/// they have an edge to a kept primitive.
inline TripartiteGraph induced_subgraph(const TripartiteGraph& g,
                                        const std::vector<int>& robot_subset) {
  std::vector<int> robots = robot_subset;
  std::sort(robots.begin(), robots.end());
  std::vector<PrimitiveNode> prims;
  std::vector<SensingEdge> edges;
  std::vector<int> targets;
  std::vector<char> keep_target;
  for (const int r : robots) {
    for (const int pid : g.primitives_of(r)) {
      prims.push_back({pid, r});
      for (const int e : g.edge_ids_of_primitive(pid))
        edges.push_back(g.edges()[static_cast<std::size_t>(e)]);
    }
  }
  std::vector<int> seen;
  for (const SensingEdge& e : edges) seen.push_back(e.target);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return TripartiteGraph(std::move(robots), std::move(prims), std::move(seen),
                         std::move(edges));
}

}  // namespace swarm_assign
