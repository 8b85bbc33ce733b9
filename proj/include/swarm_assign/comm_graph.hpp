#pragma once

#include <algorithm>
#include <vector>

#include "swarm_assign/errors.hpp"
#include "swarm_assign/graph.hpp"
#include "swarm_assign/netsim.hpp"

namespace swarm_assign {

/// Communication graph over robots (as indices into g.robot_ids()): two
/// robots are adjacent iff their primitives share a target. For geometric
/// worlds pass the comm_neighbors() adjacency as extra_comm; it is OR-ed in.
inline Adjacency robot_comm_graph(const TripartiteGraph& g,
                                  const Adjacency* extra_comm = nullptr) {
  const int n = static_cast<int>(g.num_robots());
  if (extra_comm && static_cast<int>(extra_comm->size()) != n)
    throw ConfigError("extra communication adjacency has wrong size");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const int t : g.target_ids()) {
    std::vector<int> observers;
    for (const int e : g.edge_ids_of_target(t))
      observers.push_back(
          g.robot_index(g.robot_of(g.edges()[static_cast<std::size_t>(e)].primitive)));
    std::sort(observers.begin(), observers.end());
    observers.erase(std::unique(observers.begin(), observers.end()), observers.end());
    for (std::size_t a = 0; a < observers.size(); ++a)
      for (std::size_t b = a + 1; b < observers.size(); ++b) {
        adj[static_cast<std::size_t>(observers[a])].push_back(observers[b]);
        adj[static_cast<std::size_t>(observers[b])].push_back(observers[a]);
      }
  }
  if (extra_comm) {
    for (int v = 0; v < n; ++v)
      for (const int u : (*extra_comm)[static_cast<std::size_t>(v)]) {
        if (u < 0 || u >= n || u == v)
          throw ConfigError("extra communication adjacency is malformed");
        adj[static_cast<std::size_t>(v)].push_back(u);
      }
  }
  for (auto& lst : adj) {
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
  }
  return adj;
}

}  // namespace swarm_assign
