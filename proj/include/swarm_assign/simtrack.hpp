#pragma once

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "swarm_assign/errors.hpp"
#include "swarm_assign/graph.hpp"
#include "swarm_assign/greedy.hpp"
#include "swarm_assign/local.hpp"
#include "swarm_assign/model.hpp"
#include "swarm_assign/rng.hpp"

namespace swarm_assign {

enum class TargetMotion { fixed, random_walk, waypoint };
enum class AlgoKind { local, greedy };

struct SimConfig {
  int n_robots{5};
  int n_targets{30};
  double arena_w{40.0};
  double arena_h{40.0};
  int steps{40};
  double dt{1.0};
  double rs{3.0};
  double rc{10.0};
  PrimitiveConfig primitives{};
  TargetMotion motion{TargetMotion::random_walk};
  double target_speed_max{0.5};
  AlgoKind algorithm{AlgoKind::local};
  int h{2};
  double epsilon{0.1};
  std::string order{"ascending"};  // "ascending" | "random"
  WeightScheme scheme{WeightScheme::unit};
  std::uint64_t seed{1};
};

inline std::vector<std::string> validate_sim_config(const SimConfig& cfg) {
  std::vector<std::string> bad;
  if (cfg.n_robots < 1) bad.push_back("robots: must be >= 1");
  if (cfg.n_targets < 0) bad.push_back("targets: must be >= 0");
  if (!(cfg.arena_w > 0.0)) bad.push_back("arena[0]: must be > 0");
  if (!(cfg.arena_h > 0.0)) bad.push_back("arena[1]: must be > 0");
  if (cfg.steps < 1) bad.push_back("steps: must be >= 1");
  if (!(cfg.dt > 0.0)) bad.push_back("dt: must be > 0");
  if (!(cfg.rs > 0.0)) bad.push_back("rs: must be > 0");
  if (!(cfg.rc > 2.0 * cfg.rs)) bad.push_back("rc: must exceed 2*rs");
  if (cfg.primitives.count < 1) bad.push_back("primitives.count: must be >= 1");
  if (cfg.primitives.max_step < 0.0) bad.push_back("primitives.max_step: must be >= 0");
  if (cfg.primitives.cone_half_angle < 0.0) bad.push_back("primitives.cone_deg: must be >= 0");
  if (cfg.target_speed_max < 0.0) bad.push_back("target_speed_max: must be >= 0");
  if (cfg.h < 0) bad.push_back("h: must be >= 0");
  if (!(cfg.epsilon > 0.0)) bad.push_back("epsilon: must be > 0");
  if (cfg.order != "ascending" && cfg.order != "random")
    bad.push_back("order: must be 'ascending' or 'random'");
  return bad;
}

inline SimConfig parse_sim_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config: invalid JSON: ") + e.what());
  }
  SimConfig cfg;
  std::vector<std::string> bad;
  auto get_int = [&](const char* name, int fallback) {
    if (!j.contains(name)) return fallback;
    if (!j.at(name).is_number_integer()) {
      bad.push_back(std::string(name) + ": must be an integer");
      return fallback;
    }
    return j.at(name).get<int>();
  };
  auto get_num = [&](const char* name, double fallback) {
    if (!j.contains(name)) return fallback;
    if (!j.at(name).is_number()) {
      bad.push_back(std::string(name) + ": must be a number");
      return fallback;
    }
    return j.at(name).get<double>();
  };
  cfg.n_robots = get_int("robots", cfg.n_robots);
  cfg.n_targets = get_int("targets", cfg.n_targets);
  if (j.contains("arena")) {
    const auto& a = j.at("arena");
    if (a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number()) {
      cfg.arena_w = a[0].get<double>();
      cfg.arena_h = a[1].get<double>();
    } else {
      bad.push_back("arena: must be [width, height]");
    }
  }
  cfg.steps = get_int("steps", cfg.steps);
  cfg.dt = get_num("dt", cfg.dt);
  cfg.rs = get_num("rs", cfg.rs);
  cfg.rc = get_num("rc", cfg.rc);
  if (j.contains("primitives")) {
    const auto& p = j.at("primitives");
    if (!p.is_object()) {
      bad.push_back("primitives: must be an object");
    } else {
      if (p.contains("count") && p.at("count").is_number_integer())
        cfg.primitives.count = p.at("count").get<int>();
      else if (p.contains("count"))
        bad.push_back("primitives.count: must be an integer");
      if (p.contains("max_step") && p.at("max_step").is_number())
        cfg.primitives.max_step = p.at("max_step").get<double>();
      else if (p.contains("max_step"))
        bad.push_back("primitives.max_step: must be a number");
      if (p.contains("cone_deg") && p.at("cone_deg").is_number())
        cfg.primitives.cone_half_angle = p.at("cone_deg").get<double>() * M_PI / 180.0;
      else if (p.contains("cone_deg"))
        bad.push_back("primitives.cone_deg: must be a number");
    }
  }
  if (j.contains("target_motion")) {
    const std::string m = j.at("target_motion").is_string()
                              ? j.at("target_motion").get<std::string>()
                              : std::string();
    if (m == "static")
      cfg.motion = TargetMotion::fixed;
    else if (m == "random-walk")
      cfg.motion = TargetMotion::random_walk;
    else if (m == "waypoint")
      cfg.motion = TargetMotion::waypoint;
    else
      bad.push_back("target_motion: must be 'static', 'random-walk' or 'waypoint'");
  }
  cfg.target_speed_max = get_num("target_speed_max", cfg.target_speed_max);
  if (j.contains("algorithm")) {
    const std::string a =
        j.at("algorithm").is_string() ? j.at("algorithm").get<std::string>() : std::string();
    if (a == "local")
      cfg.algorithm = AlgoKind::local;
    else if (a == "greedy")
      cfg.algorithm = AlgoKind::greedy;
    else
      bad.push_back("algorithm: must be 'local' or 'greedy'");
  }
  cfg.h = get_int("h", cfg.h);
  cfg.epsilon = get_num("epsilon", cfg.epsilon);
  if (j.contains("order")) {
    if (j.at("order").is_string())
      cfg.order = j.at("order").get<std::string>();
    else
      bad.push_back("order: must be a string");
  }
  if (j.contains("weight_scheme")) {
    const std::string s = j.at("weight_scheme").is_string()
                              ? j.at("weight_scheme").get<std::string>()
                              : std::string();
    if (s == "unit")
      cfg.scheme = WeightScheme::unit;
    else if (s == "inverse-distance")
      cfg.scheme = WeightScheme::inverse_distance;
    else
      bad.push_back("weight_scheme: must be 'unit' or 'inverse-distance'");
  }
  if (j.contains("seed")) {
    if (j.at("seed").is_number_unsigned() || j.at("seed").is_number_integer())
      cfg.seed = j.at("seed").get<std::uint64_t>();
    else
      bad.push_back("seed: must be an integer");
  }
  for (const std::string& b : validate_sim_config(cfg)) bad.push_back(b);
  if (!bad.empty()) {
    std::string msg = "config: invalid fields:";
    for (const std::string& b : bad) msg += " [" + b + "]";
    throw ParseError(msg);
  }
  return cfg;
}

struct StepRecord {
  int k{0};  // time index at which the decision was taken
  std::vector<RobotState> robots;    // poses after applying the actions
  std::vector<TargetState> targets;  // states after the motion update
  std::map<int, int> selected;       // robot id -> selected primitive id
  int tracked{0};                    // coverage_count of this step's graph
  int rounds{0};
};

struct SimResult {
  std::vector<StepRecord> steps;
};

namespace detail {

/// Per-target waypoint bookkeeping for the waypoint motion model; owned by
/// run() and threaded through the steps.
struct TargetMotionState {
  std::map<int, Vec2> waypoint;
};

inline void draw_target_motion(WorldState& world, const SimConfig& cfg,
                               TargetMotionState& ms) {
  for (TargetState& t : world.targets) {
    Rng rng = derive_stream(cfg.seed, "target-motion",
                            static_cast<std::uint64_t>(world.time_index),
                            static_cast<std::uint64_t>(t.id));
    switch (cfg.motion) {
      case TargetMotion::fixed:
        t.velocity = Vec2{0.0, 0.0};
        break;
      case TargetMotion::random_walk: {
        const double heading = rng.uniform(0.0, 2.0 * M_PI);
        const double speed = rng.uniform(0.0, cfg.target_speed_max);
        t.velocity = Vec2{std::cos(heading), std::sin(heading)} * speed;
        break;
      }
      case TargetMotion::waypoint: {
        auto it = ms.waypoint.find(t.id);
        const double reach = cfg.target_speed_max * cfg.dt;
        if (it == ms.waypoint.end() || distance(it->second, t.position) <= reach) {
          const Vec2 wp{rng.uniform(0.0, cfg.arena_w), rng.uniform(0.0, cfg.arena_h)};
          ms.waypoint[t.id] = wp;
          it = ms.waypoint.find(t.id);
        }
        const Vec2 to = it->second - t.position;
        const double d = std::sqrt(to.x * to.x + to.y * to.y);
        if (d > 1e-12) {
          const double speed = std::min(cfg.target_speed_max, d / cfg.dt);
          t.velocity = to * (speed / d);
        } else {
          t.velocity = Vec2{0.0, 0.0};
        }
        break;
      }
    }
  }
}

inline double reflect_axis(double v, double limit, double& vel) {
  for (int guard = 0; guard < 64; ++guard) {
    if (v < 0.0) {
      v = -v;
      vel = -vel;
    } else if (v > limit) {
      v = 2.0 * limit - v;
      vel = -vel;
    } else {
      break;
    }
  }
  return std::min(std::max(v, 0.0), limit);
}

inline void advance_targets(WorldState& world, const SimConfig& cfg) {
  for (TargetState& t : world.targets) {
    t.position = t.position + t.velocity * cfg.dt;
    t.position.x = reflect_axis(t.position.x, cfg.arena_w, t.velocity.x);
    t.position.y = reflect_axis(t.position.y, cfg.arena_h, t.velocity.y);
  }
}

inline std::vector<int> greedy_order(const TripartiteGraph& g, const SimConfig& cfg, int k) {
  std::vector<int> order = g.robot_ids();
  if (cfg.order == "random") {
    Rng rng = derive_stream(cfg.seed, "ordering", static_cast<std::uint64_t>(k));
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
      std::swap(order[static_cast<std::size_t>(i)],
                order[static_cast<std::size_t>(rng.uniform_int(0, i))]);
  }
  return order;
}

}  // namespace detail

/// One closed-loop step: draw this interval's target motion, generate
/// primitives, build the assignment graph on the predicted targets, run the
/// configured algorithm over the communication graph (which also realizes
/// target ownership), move every robot to its selected endpoint, advance the
/// targets, and bump the time index.
inline std::pair<WorldState, StepRecord> step(const WorldState& world_in, const SimConfig& cfg,
                                              detail::TargetMotionState& motion_state) {
  WorldState world = world_in;
  const int k = world.time_index;
  detail::draw_target_motion(world, cfg, motion_state);

  const std::vector<MotionPrimitive> prims = generate_all_primitives(
      world, cfg.primitives, stream_key(cfg.seed, "step-primitives", static_cast<std::uint64_t>(k)));
  const TripartiteGraph g = build_graph(world, prims, cfg.scheme, cfg.dt);
  const Adjacency geo = comm_neighbors(world);

  StepRecord rec;
  rec.k = k;
  std::map<int, double> x;
  if (cfg.algorithm == AlgoKind::local) {
    RoundLog log;
    LocalOptions opts;
    opts.extra_comm = &geo;
    opts.log = &log;
    const FractionalSolution frac = local_solve(g, LocalConfig{cfg.h, cfg.epsilon}, opts);
    x = round_solution(g, frac).x;
    rec.rounds = log.rounds;
  } else {
    RoundLog log;
    GreedyOptions opts;
    opts.extra_comm = &geo;
    opts.log = &log;
    const GreedyResult res = greedy_via_protocol(g, detail::greedy_order(g, cfg, k), opts);
    x = res.assignment.x;
    rec.rounds = log.rounds;
  }
  rec.tracked = g.num_targets() > 0 ? coverage_count(g, x) : 0;

  std::map<int, const MotionPrimitive*> by_id;
  for (const MotionPrimitive& p : prims) by_id[p.id] = &p;
  for (RobotState& r : world.robots) {
    int chosen = -1;
    for (const int pid : g.primitives_of(r.id))
      if (x_value(x, pid) > 0.5) chosen = pid;
    if (chosen >= 0) {
      const MotionPrimitive* p = by_id.at(chosen);
      r.position = p->endpoint;
      r.heading = p->heading;
      rec.selected[r.id] = chosen;
    }
  }
  detail::advance_targets(world, cfg);
  world.time_index = k + 1;
  rec.robots = world.robots;
  rec.targets = world.targets;
  return {std::move(world), std::move(rec)};
}

/// Initial world: robots and targets placed uniformly in the arena from
/// dedicated sub-streams, zero initial velocities.
inline WorldState initial_world(const SimConfig& cfg) {
  Rng robot_rng = derive_stream(cfg.seed, "init-robots");
  Rng target_rng = derive_stream(cfg.seed, "init-targets");
  std::vector<RobotState> robots;
  for (int i = 0; i < cfg.n_robots; ++i) {
    RobotState r;
    r.id = i;
    r.position = Vec2{robot_rng.uniform(0.0, cfg.arena_w), robot_rng.uniform(0.0, cfg.arena_h)};
    r.heading = robot_rng.uniform(0.0, 2.0 * M_PI);
    robots.push_back(r);
  }
  std::vector<TargetState> targets;
  for (int j = 0; j < cfg.n_targets; ++j) {
    TargetState t;
    t.id = j;
    t.position =
        Vec2{target_rng.uniform(0.0, cfg.arena_w), target_rng.uniform(0.0, cfg.arena_h)};
    targets.push_back(t);
  }
  return make_world(0, std::move(robots), std::move(targets), SensingModel{cfg.rs},
                    CommModel{cfg.rc});
}

inline SimResult run(const SimConfig& cfg) {
  {
    const std::vector<std::string> bad = validate_sim_config(cfg);
    if (!bad.empty()) {
      std::string msg = "invalid simulation config:";
      for (const std::string& b : bad) msg += " [" + b + "]";
      throw ConfigError(msg);
    }
  }
  WorldState world = initial_world(cfg);
  detail::TargetMotionState motion_state;
  SimResult result;
  result.steps.reserve(static_cast<std::size_t>(cfg.steps));
  for (int s = 0; s < cfg.steps; ++s) {
    auto [next, rec] = step(world, cfg, motion_state);
    world = std::move(next);
    result.steps.push_back(std::move(rec));
  }
  return result;
}

// --- CSV output --------------------------------------------------------------

namespace detail {
inline std::string fmt_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}
}  // namespace detail

/// Trace rows: one per entity per step. Target rows leave the
/// selection/metric columns empty so traces of different algorithms on the
/// same seed agree bit-for-bit on all target rows.
inline void write_trace_csv(const SimResult& result, std::ostream& out) {
  out << "# swarm-assign trace v1\n";
  out << "k,entity_id,kind,x,y,selected_primitive,tracked_count,rounds\n";
  for (const StepRecord& rec : result.steps) {
    for (const RobotState& r : rec.robots) {
      auto it = rec.selected.find(r.id);
      out << rec.k << ',' << r.id << ",robot," << detail::fmt_g9(r.position.x) << ','
          << detail::fmt_g9(r.position.y) << ','
          << (it == rec.selected.end() ? std::string() : std::to_string(it->second)) << ','
          << rec.tracked << ',' << rec.rounds << '\n';
    }
    for (const TargetState& t : rec.targets) {
      out << rec.k << ',' << t.id << ",target," << detail::fmt_g9(t.position.x) << ','
          << detail::fmt_g9(t.position.y) << ",,,\n";
    }
  }
}

inline void write_metrics_csv(const SimResult& result, std::ostream& out) {
  out << "# swarm-assign metrics v1\n";
  out << "k,tracked_count,rounds\n";
  for (const StepRecord& rec : result.steps)
    out << rec.k << ',' << rec.tracked << ',' << rec.rounds << '\n';
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace swarm_assign
