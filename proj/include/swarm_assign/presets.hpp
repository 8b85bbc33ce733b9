#pragma once

#include "swarm_assign/graph.hpp"

namespace swarm_assign {

/// Three robots with two primitives each, three targets, unit weights. The
/// instance is symmetric under swapping robots 1 and 2 (with primitives
/// 2<->5, 3<->4 and targets 0<->2), has a unique LP optimum
/// x = (0.5, 0.5, 1, 0, 0, 1) of value 1.5, and robot 0 is the symmetric
/// robot whose primitives always come out equal.
inline TripartiteGraph three_robot_instance() {
  return TripartiteGraph(
      {0, 1, 2},
      {{0, 0}, {1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 2}},
      {0, 1, 2},
      {{0, 0, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}, {2, 1, 1.0}, {3, 1, 1.0}, {4, 1, 1.0},
       {5, 1, 1.0}, {5, 2, 1.0}});
}

}  // namespace swarm_assign
