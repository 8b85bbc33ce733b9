#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "swarm_assign/errors.hpp"
#include "swarm_assign/graph.hpp"
#include "swarm_assign/rng.hpp"

namespace swarm_assign {

namespace detail {

// Union-find over the flat node space robots | primitives | targets.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// Random unit-weight instance: n_robots robots with two primitives each,
/// n_targets targets. One pass over primitives adds a random target edge
/// each, one pass over targets adds a random primitive edge each, one
/// representative edge per leftover component joins everything into a single
/// component, then random primitive-target pairs are added (without
/// replacement) until the average target degree reaches target_degree.
inline TripartiteGraph random_instance(int n_robots, int n_targets, double target_degree,
                                       std::uint64_t seed) {
  if (n_robots < 1) throw ConfigError("random_instance: n_robots must be >= 1");
  if (n_targets < 1) throw ConfigError("random_instance: n_targets must be >= 1");
  if (target_degree < 1.0) throw ConfigError("random_instance: target_degree must be >= 1");
  const int n_prims = 2 * n_robots;
  if (target_degree > static_cast<double>(n_prims))
    throw ConfigError("random_instance: target_degree " + std::to_string(target_degree) +
                      " exceeds the number of primitives " + std::to_string(n_prims));

  Rng rng = derive_stream(seed, "instance");
  std::vector<std::pair<int, int>> pairs;  // (primitive, target)
  std::unordered_set<std::uint64_t> seen;
  auto key = [n_targets](int p, int t) {
    return static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(n_targets) +
           static_cast<std::uint64_t>(t);
  };
  auto add_edge = [&](int p, int t) {
    pairs.emplace_back(p, t);
    seen.insert(key(p, t));
  };

  std::vector<int> target_degree_now(static_cast<std::size_t>(n_targets), 0);

  // Pass 1: every primitive gets one random target.
  for (int p = 0; p < n_prims; ++p) {
    const int t = rng.uniform_int(0, n_targets - 1);
    add_edge(p, t);
    ++target_degree_now[static_cast<std::size_t>(t)];
  }

  // Pass 2: every target gets one random primitive (redraw duplicates).
  for (int t = 0; t < n_targets; ++t) {
    if (target_degree_now[static_cast<std::size_t>(t)] >= n_prims) continue;
    for (;;) {
      const int p = rng.uniform_int(0, n_prims - 1);
      if (!seen.count(key(p, t))) {
        add_edge(p, t);
        ++target_degree_now[static_cast<std::size_t>(t)];
        break;
      }
    }
  }

  // Pass 3: join leftover components to the one containing robot 0. Node
  // space: robots [0,R), primitives [R,R+P), targets [R+P,R+P+T).
  const int robot_base = 0, prim_base = n_robots, target_base = n_robots + n_prims;
  detail::DisjointSets ds(n_robots + n_prims + n_targets);
  for (int p = 0; p < n_prims; ++p) ds.unite(prim_base + p, robot_base + p / 2);
  for (const auto& [p, t] : pairs) ds.unite(prim_base + p, target_base + t);
  const int main_root = ds.find(robot_base);
  std::vector<int> main_targets;
  for (int t = 0; t < n_targets; ++t)
    if (ds.find(target_base + t) == main_root) main_targets.push_back(t);
  for (int p = 0; p < n_prims; ++p) {
    if (ds.find(prim_base + p) == main_root) continue;
    const int comp = ds.find(prim_base + p);
    // p is the lowest primitive in its component; connect and merge.
    const int t = main_targets[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<int>(main_targets.size()) - 1))];
    add_edge(p, t);
    ds.unite(comp, main_root);
  }

  // Pass 4: top up to the requested average target degree.
  const long long wanted =
      static_cast<long long>(std::ceil(target_degree * static_cast<double>(n_targets)));
  const long long capacity = static_cast<long long>(n_prims) * n_targets;
  while (static_cast<long long>(pairs.size()) < std::min(wanted, capacity)) {
    const int p = rng.uniform_int(0, n_prims - 1);
    const int t = rng.uniform_int(0, n_targets - 1);
    if (seen.count(key(p, t))) continue;
    add_edge(p, t);
  }

  std::vector<int> robots(static_cast<std::size_t>(n_robots));
  std::iota(robots.begin(), robots.end(), 0);
  std::vector<PrimitiveNode> prims;
  prims.reserve(static_cast<std::size_t>(n_prims));
  for (int p = 0; p < n_prims; ++p) prims.push_back({p, p / 2});
  std::vector<int> targets(static_cast<std::size_t>(n_targets));
  std::iota(targets.begin(), targets.end(), 0);
  std::vector<SensingEdge> edges;
  edges.reserve(pairs.size());
  for (const auto& [p, t] : pairs) edges.push_back({p, t, 1.0});
  return TripartiteGraph(std::move(robots), std::move(prims), std::move(targets),
                         std::move(edges));
}

}  // namespace swarm_assign
