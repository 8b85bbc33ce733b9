#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "swarm_assign/errors.hpp"
#include "swarm_assign/rng.hpp"

namespace swarm_assign {

struct Vec2 {
  double x{0.0};
  double y{0.0};

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline double squared_distance(const Vec2& a, const Vec2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(const Vec2& a, const Vec2& b) {
  return std::sqrt(squared_distance(a, b));
}

struct RobotState {
  int id{0};
  Vec2 position;
  double heading{0.0};  // rad
};

struct TargetState {
  int id{0};
  Vec2 position;
  Vec2 velocity;  // m/s
};

/// Candidate short-horizon action of one robot: the pose reached after
/// executing it. Exactly one primitive per robot is selected per step.
struct MotionPrimitive {
  int id{0};
  int robot_id{0};
  Vec2 endpoint;
  double heading{0.0};
};

struct SensingModel {
  double rs{0.0};  // sensing radius, m
};

struct CommModel {
  double rc{0.0};  // communication radius, m
};

struct WorldState {
  int time_index{0};
  std::vector<RobotState> robots;
  std::vector<TargetState> targets;
  SensingModel sensing;
  CommModel comm;
};

/// Validating constructor for WorldState. Requires rs > 0, rc > 2*rs,
/// time_index >= 0, and ids unique and contiguous from 0.
inline WorldState make_world(int time_index, std::vector<RobotState> robots,
                             std::vector<TargetState> targets,
                             SensingModel sensing, CommModel comm) {
  if (!(sensing.rs > 0.0)) throw ConfigError("sensing radius rs must be > 0");
  if (!(comm.rc > 2.0 * sensing.rs))
    throw ConfigError("communication radius rc must exceed 2*rs (rc=" +
                      std::to_string(comm.rc) + ", rs=" + std::to_string(sensing.rs) + ")");
  if (time_index < 0) throw ConfigError("time_index must be >= 0");
  for (std::size_t i = 0; i < robots.size(); ++i)
    if (robots[i].id != static_cast<int>(i))
      throw ConfigError("robot ids must be contiguous from 0 (robot at index " +
                        std::to_string(i) + " has id " + std::to_string(robots[i].id) + ")");
  for (std::size_t j = 0; j < targets.size(); ++j)
    if (targets[j].id != static_cast<int>(j))
      throw ConfigError("target ids must be contiguous from 0 (target at index " +
                        std::to_string(j) + " has id " + std::to_string(targets[j].id) + ")");
  return WorldState{time_index, std::move(robots), std::move(targets), sensing, comm};
}

struct PrimitiveConfig {
  int count{2};                  // primitives per robot, >= 1
  double max_step{1.0};          // m
  double cone_half_angle{0.5235987755982988};  // rad, default 30 degrees
};

/// Motion primitives for one robot: the stay-in-place primitive first, then
/// count-1 endpoints sampled in the configured distance/heading cone.
/// Ids are assigned sequentially starting at first_id.
inline std::vector<MotionPrimitive> generate_primitives(const RobotState& robot,
                                                        const PrimitiveConfig& cfg,
                                                        std::uint64_t seed,
                                                        int first_id = 0) {
  if (cfg.count < 1) throw ConfigError("primitive count must be >= 1");
  std::vector<MotionPrimitive> out;
  out.reserve(static_cast<std::size_t>(cfg.count));
  out.push_back(MotionPrimitive{first_id, robot.id, robot.position, robot.heading});
  Rng rng = derive_stream(seed, "primitives", static_cast<std::uint64_t>(robot.id));
  for (int m = 1; m < cfg.count; ++m) {
    const double step = rng.uniform(0.0, cfg.max_step);
    const double rel = rng.uniform(-cfg.cone_half_angle, cfg.cone_half_angle);
    const double heading = robot.heading + rel;
    const Vec2 endpoint = robot.position + Vec2{std::cos(heading), std::sin(heading)} * step;
    out.push_back(MotionPrimitive{first_id + m, robot.id, endpoint, heading});
  }
  return out;
}

/// Primitives for every robot in the world, with globally contiguous ids.
inline std::vector<MotionPrimitive> generate_all_primitives(const WorldState& world,
                                                            const PrimitiveConfig& cfg,
                                                            std::uint64_t seed) {
  std::vector<MotionPrimitive> all;
  all.reserve(world.robots.size() * static_cast<std::size_t>(cfg.count));
  int next_id = 0;
  for (const RobotState& r : world.robots) {
    std::vector<MotionPrimitive> prims = generate_primitives(r, cfg, seed, next_id);
    next_id += static_cast<int>(prims.size());
    all.insert(all.end(), prims.begin(), prims.end());
  }
  return all;
}

/// True iff the target lies in the closed sensing disc around the primitive's
/// endpoint. Boundary equality counts as in range.
inline bool observable(const MotionPrimitive& p, const TargetState& t,
                       const SensingModel& s) {
  return squared_distance(p.endpoint, t.position) <= s.rs * s.rs;
}

/// Constant-velocity extrapolation over dt seconds.
inline std::vector<TargetState> predict_targets(const std::vector<TargetState>& targets,
                                                double dt) {
  if (dt < 0.0) throw ConfigError("prediction dt must be >= 0");
  std::vector<TargetState> out = targets;
  for (TargetState& t : out) t.position = t.position + t.velocity * dt;
  return out;
}

/// Symmetric, irreflexive adjacency over robot ids: edge iff the robots are
/// within the closed communication disc of each other.
inline std::vector<std::vector<int>> comm_neighbors(const WorldState& world) {
  const std::size_t n = world.robots.size();
  std::vector<std::vector<int>> adj(n);
  const double rc2 = world.comm.rc * world.comm.rc;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (squared_distance(world.robots[a].position, world.robots[b].position) <= rc2) {
        adj[a].push_back(static_cast<int>(b));
        adj[b].push_back(static_cast<int>(a));
      }
    }
  }
  return adj;
}

enum class WeightScheme { unit, inverse_distance };

/// Edge weight between a primitive and a target; higher is better tracking.
/// unit: 1 if observable else 0. inverse_distance: 1 - d/rs, clamped at 0.
inline double weight(const MotionPrimitive& p, const TargetState& t,
                     const SensingModel& s, WeightScheme scheme) {
  if (!observable(p, t, s)) return 0.0;
  switch (scheme) {
    case WeightScheme::unit:
      return 1.0;
    case WeightScheme::inverse_distance: {
      const double d = distance(p.endpoint, t.position);
      const double w = 1.0 - d / s.rs;
      return w > 0.0 ? w : 0.0;
    }
  }
  return 0.0;
}

}  // namespace swarm_assign
