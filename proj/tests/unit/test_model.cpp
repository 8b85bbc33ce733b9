#include <catch2/catch_amalgamated.hpp>

#include "swarm_assign/model.hpp"
#include "swarm_assign/netsim.hpp"
#include "swarm_assign/rng.hpp"

#include <algorithm>

using namespace swarm_assign;

namespace {

WorldState two_robot_world(double gap, double rs = 3.0, double rc = 10.0) {
  return make_world(0,
                    {{0, {0.0, 0.0}, 0.0}, {1, {gap, 0.0}, 0.0}},
                    {{0, {1.0, 0.0}, {0.0, 0.0}}},
                    SensingModel{rs}, CommModel{rc});
}

}  // namespace

TEST_CASE("world construction enforces rc > 2*rs and contiguous ids") {
  CHECK_THROWS_AS(make_world(0, {}, {}, SensingModel{3.0}, CommModel{6.0}), ConfigError);
  CHECK_THROWS_AS(make_world(0, {}, {}, SensingModel{0.0}, CommModel{10.0}), ConfigError);
  CHECK_THROWS_AS(make_world(-1, {}, {}, SensingModel{3.0}, CommModel{7.0}), ConfigError);
  CHECK_THROWS_AS(make_world(0, {{1, {0, 0}, 0}}, {}, SensingModel{3.0}, CommModel{7.0}),
                  ConfigError);
  CHECK_NOTHROW(two_robot_world(5.0));
}

TEST_CASE("generate_primitives: stay-only case") {
  const RobotState r{0, {2.0, 3.0}, 0.7};
  const auto prims = generate_primitives(r, PrimitiveConfig{1, 1.0, 0.5}, 42);
  REQUIRE(prims.size() == 1);
  CHECK(prims[0].endpoint == r.position);
  CHECK(prims[0].heading == r.heading);
  CHECK(prims[0].robot_id == 0);
}

TEST_CASE("generate_primitives: step and cone bounds") {
  const double cone = 30.0 * M_PI / 180.0;
  const RobotState r{3, {1.0, -2.0}, 1.1};
  const auto prims = generate_primitives(r, PrimitiveConfig{2, 1.0, cone}, 7, 10);
  REQUIRE(prims.size() == 2);
  CHECK(prims[0].id == 10);
  CHECK(prims[1].id == 11);
  CHECK(prims[0].endpoint == r.position);
  const double d = distance(prims[1].endpoint, r.position);
  CHECK(d <= 1.0 + 1e-12);
  const double rel = prims[1].heading - r.heading;
  CHECK(rel >= -cone - 1e-12);
  CHECK(rel <= cone + 1e-12);
}

TEST_CASE("generate_primitives: deterministic given seed") {
  const RobotState r{1, {0.0, 0.0}, 0.0};
  const PrimitiveConfig cfg{4, 1.0, 0.6};
  const auto a = generate_primitives(r, cfg, 99);
  const auto b = generate_primitives(r, cfg, 99);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].endpoint == b[i].endpoint);
    CHECK(a[i].heading == b[i].heading);
  }
  const auto c = generate_primitives(r, cfg, 100);
  bool all_same = true;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (!(a[i].endpoint == c[i].endpoint)) all_same = false;
  CHECK_FALSE(all_same);
}

TEST_CASE("generate_primitives: invalid count") {
  CHECK_THROWS_AS(generate_primitives({0, {0, 0}, 0}, PrimitiveConfig{0, 1.0, 0.5}, 1),
                  ConfigError);
}

TEST_CASE("observable: closed-ball boundary") {
  const SensingModel s{3.0};
  const MotionPrimitive p{0, 0, {0.0, 0.0}, 0.0};
  CHECK(observable(p, {0, {0.0, 0.0}, {0, 0}}, s));
  CHECK(observable(p, {0, {3.0, 0.0}, {0, 0}}, s));
  CHECK_FALSE(observable(p, {0, {3.0 + 1e-6, 0.0}, {0, 0}}, s));
}

TEST_CASE("predict_targets") {
  const std::vector<TargetState> ts{{0, {0.0, 0.0}, {1.0, 2.0}}, {1, {5.0, 5.0}, {0.0, 0.0}}};
  const auto moved = predict_targets(ts, 0.5);
  CHECK(moved[0].position == Vec2{0.5, 1.0});
  CHECK(moved[0].velocity == Vec2{1.0, 2.0});
  CHECK(moved[1].position == Vec2{5.0, 5.0});
  const auto frozen = predict_targets(ts, 0.0);
  CHECK(frozen[0].position == ts[0].position);
}

TEST_CASE("comm_neighbors: boundary and emptiness") {
  const auto single = make_world(0, {{0, {0, 0}, 0}}, {}, SensingModel{3.0}, CommModel{10.0});
  CHECK(comm_neighbors(single) == Adjacency{{}});

  const auto touching = two_robot_world(10.0);
  const auto adj = comm_neighbors(touching);
  REQUIRE(adj.size() == 2);
  CHECK(adj[0] == std::vector<int>{1});
  CHECK(adj[1] == std::vector<int>{0});

  auto spread = make_world(
      0, {{0, {0, 0}, 0}, {1, {10.5, 0}, 0}, {2, {21.0, 0}, 0}}, {},
      SensingModel{3.0}, CommModel{10.0});
  const auto none = comm_neighbors(spread);
  for (const auto& lst : none) CHECK(lst.empty());
}

TEST_CASE("weight schemes") {
  const SensingModel s{3.0};
  const MotionPrimitive p{0, 0, {0.0, 0.0}, 0.0};
  const TargetState near{0, {1.5, 0.0}, {0, 0}};
  const TargetState far{1, {4.0, 0.0}, {0, 0}};
  CHECK(weight(p, near, s, WeightScheme::unit) == 1.0);
  CHECK(weight(p, far, s, WeightScheme::unit) == 0.0);
  CHECK(weight(p, near, s, WeightScheme::inverse_distance) == Catch::Approx(0.5));
  CHECK(weight(p, far, s, WeightScheme::inverse_distance) == 0.0);
}

TEST_CASE("weight is zero whenever not observable (random property)") {
  Rng rng(2024);
  const SensingModel s{2.5};
  for (int i = 0; i < 500; ++i) {
    const MotionPrimitive p{0, 0, {rng.uniform(-5, 5), rng.uniform(-5, 5)}, 0.0};
    const TargetState t{0, {rng.uniform(-5, 5), rng.uniform(-5, 5)}, {0, 0}};
    for (const auto scheme : {WeightScheme::unit, WeightScheme::inverse_distance}) {
      if (!observable(p, t, s)) CHECK(weight(p, t, s, scheme) == 0.0);
      if (weight(p, t, s, scheme) > 0.0) CHECK(observable(p, t, s));
    }
  }
}

TEST_CASE("co-observers of one target are always comm neighbors") {
  // rc > 2*(rs + max step) makes the implication hold for any primitives.
  const double rs = 3.0, rc = 10.0, max_step = 1.0;
  Rng rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<RobotState> robots;
    const int n = 2 + rng.uniform_int(0, 4);
    for (int i = 0; i < n; ++i)
      robots.push_back({i, {rng.uniform(0, 30), rng.uniform(0, 30)}, rng.uniform(0, 6.28)});
    std::vector<TargetState> targets;
    const int m = 1 + rng.uniform_int(0, 7);
    for (int j = 0; j < m; ++j)
      targets.push_back({j, {rng.uniform(0, 30), rng.uniform(0, 30)}, {0, 0}});
    const auto world = make_world(0, robots, targets, SensingModel{rs}, CommModel{rc});
    const auto prims =
        generate_all_primitives(world, PrimitiveConfig{3, max_step, 0.6}, 1000 + trial);
    const auto adj = comm_neighbors(world);
    const auto predicted = predict_targets(world.targets, 0.0);
    for (const auto& t : predicted) {
      std::vector<int> observers;
      for (const auto& p : prims)
        if (observable(p, t, world.sensing)) observers.push_back(p.robot_id);
      for (std::size_t a = 0; a < observers.size(); ++a)
        for (std::size_t b = a + 1; b < observers.size(); ++b) {
          if (observers[a] == observers[b]) continue;
          const auto& nbrs = adj[static_cast<std::size_t>(observers[a])];
          CHECK(std::find(nbrs.begin(), nbrs.end(), observers[b]) != nbrs.end());
        }
    }
  }
}

TEST_CASE("predict_targets rejects negative horizons") {
  CHECK_THROWS_AS(predict_targets({}, -0.5), ConfigError);
}
