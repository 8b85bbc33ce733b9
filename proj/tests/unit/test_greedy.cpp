#include <catch2/catch_amalgamated.hpp>

#include "swarm_assign/greedy.hpp"
#include "swarm_assign/oracle.hpp"
#include "swarm_assign/random_instance.hpp"

using namespace swarm_assign;

namespace {

TripartiteGraph two_robot_instance() {
  return TripartiteGraph({0, 1}, {{0, 0}, {1, 0}, {2, 1}, {3, 1}}, {0, 1, 2},
                         {{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 1.0}, {2, 1, 1.0}, {3, 2, 1.0}});
}

std::vector<int> random_permutation(const std::vector<int>& ids, Rng& rng) {
  std::vector<int> order = ids;
  for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(rng.uniform_int(0, i))]);
  return order;
}

}  // namespace

TEST_CASE("greedy hand trace: selections, coverage, responsibilities") {
  const auto g = two_robot_instance();
  const auto res = greedy_assign(g, {0, 1});
  // Robot 0 picks p0 (covers two targets), robot 1 then picks p3 (fresh target).
  CHECK(x_value(res.assignment.x, 0) == 1.0);
  CHECK(x_value(res.assignment.x, 1) == 0.0);
  CHECK(x_value(res.assignment.x, 2) == 0.0);
  CHECK(x_value(res.assignment.x, 3) == 1.0);
  CHECK(coverage_count(g, res.assignment.x) == 3);
  CHECK(res.rounds == 2);
  CHECK(res.assignment.y.at({0, 0}) == 1);
  CHECK(res.assignment.y.at({0, 1}) == 1);
  CHECK(res.assignment.y.at({1, 2}) == 1);
  CHECK(objective_wta(g, res.assignment.x, res.assignment.y) == Catch::Approx(3.0));
  // Cross-check against the enumeration oracle: greedy hits the optimum here.
  CHECK(brute_force_wta(g).v == Catch::Approx(3.0));
}

TEST_CASE("greedy: single robot equals the brute-force optimum") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_instance(1, 4, 1.5, seed);
    const auto res = greedy_assign(g, g.robot_ids());
    const auto opt = brute_force_wta(g);
    CHECK(objective_wta(g, res.assignment.x, res.assignment.y) == Catch::Approx(opt.v));
  }
}

TEST_CASE("greedy: graph with no sensing edges") {
  const TripartiteGraph g({0, 1}, {{0, 0}, {1, 0}, {2, 1}, {3, 1}}, {0}, {});
  const auto res = greedy_assign(g, {0, 1});
  CHECK_NOTHROW(validate_binary(g, res.assignment.x));
  CHECK(res.assignment.y.empty());
  CHECK(objective_wta(g, res.assignment.x, res.assignment.y) == 0.0);
  CHECK(tracking_quality(g, res.assignment.x) == 0.0);
}

TEST_CASE("greedy: order must be a permutation") {
  const auto g = two_robot_instance();
  CHECK_THROWS_AS(greedy_assign(g, {0}), ConfigError);
  CHECK_THROWS_AS(greedy_assign(g, {0, 0}), ConfigError);
  CHECK_THROWS_AS(greedy_assign(g, {0, 2}), ConfigError);
}

TEST_CASE("greedy feasibility and the quality identity on random instances") {
  Rng rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + rng.uniform_int(0, 9);
    const auto g = random_instance(n, 1 + rng.uniform_int(0, 11),
                                   std::min(1.0 + rng.uniform(0.0, 3.0), 2.0 * n),
                                   rng.next_u64());
    const auto order = random_permutation(g.robot_ids(), rng);
    const auto res = greedy_assign(g, order);
    CHECK_NOTHROW(validate_binary(g, res.assignment.x));
    CHECK_NOTHROW(validate_responsibility(g, res.assignment.y));
    CHECK(res.rounds == static_cast<int>(g.num_robots()));
    // Quality identity: summed per-target best equals the credited objective.
    const double lhs = tracking_quality(g, res.assignment.x);
    const double rhs = objective_wta(g, res.assignment.x, res.assignment.y);
    CHECK(lhs == Catch::Approx(rhs).margin(1e-9));
  }
}

TEST_CASE("greedy 2-approximation on brute-forceable instances") {
  Rng rng(31415);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + rng.uniform_int(0, 6);
    const auto g = random_instance(n, 1 + rng.uniform_int(0, 9),
                                   std::min(1.0 + rng.uniform(0.0, 2.5), 2.0 * n),
                                   rng.next_u64());
    const auto opt = brute_force_wta(g);
    for (int perm = 0; perm < 5; ++perm) {
      const auto order = random_permutation(g.robot_ids(), rng);
      const auto res = greedy_assign(g, order);
      const double v = objective_wta(g, res.assignment.x, res.assignment.y);
      CHECK(v >= opt.v / 2.0 - 1e-9);
    }
  }
}

TEST_CASE("greedy order dependence is deterministic per order") {
  const auto g = two_robot_instance();
  const auto a1 = greedy_assign(g, {0, 1});
  const auto a2 = greedy_assign(g, {0, 1});
  CHECK(a1.assignment.x == a2.assignment.x);
  CHECK(a1.assignment.y == a2.assignment.y);
  const auto b = greedy_assign(g, {1, 0});
  CHECK_NOTHROW(validate_binary(g, b.assignment.x));
}

TEST_CASE("greedy protocol matches the sequential pass on unit-weight instances") {
  Rng rng(6180);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + rng.uniform_int(0, 7);
    const auto g = random_instance(n, 1 + rng.uniform_int(0, 9),
                                   std::min(1.0 + rng.uniform(0.0, 2.0), 2.0 * n),
                                   rng.next_u64());
    const auto order = random_permutation(g.robot_ids(), rng);
    const auto pure = greedy_assign(g, order);
    RoundLog log;
    GreedyOptions opts;
    opts.log = &log;
    const auto proto = greedy_via_protocol(g, order, opts);
    CHECK(proto.assignment.x == pure.assignment.x);
    CHECK(proto.assignment.y == pure.assignment.y);
    CHECK(log.rounds == static_cast<int>(g.num_robots()));
    CHECK(proto.rounds == pure.rounds);
  }
}

TEST_CASE("tracking_quality: unit weights collapse to coverage") {
  Rng rng(141);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + rng.uniform_int(0, 5);
    const auto g = random_instance(n, 1 + rng.uniform_int(0, 7),
                                   std::min(1.0 + rng.uniform(0.0, 2.0), 2.0 * n),
                                   rng.next_u64());
    const auto a = random_baseline(g, rng.next_u64());
    CHECK(tracking_quality(g, a.x) ==
          Catch::Approx(static_cast<double>(coverage_count(g, a.x))));
  }
}

TEST_CASE("greedy protocol on three robots uses exactly three rounds") {
  const auto g = random_instance(3, 5, 2.0, 42);
  RoundLog log;
  GreedyOptions opts;
  opts.log = &log;
  greedy_via_protocol(g, g.robot_ids(), opts);
  CHECK(log.rounds == 3);
}

namespace {

// Random instance with non-unit weights in (0, 1].
TripartiteGraph weighted_instance(std::uint64_t seed) {
  Rng rng = derive_stream(seed, "weighted");
  const int n = 2 + rng.uniform_int(0, 4);
  const auto base = random_instance(n, 2 + rng.uniform_int(0, 6),
                                    std::min(2.5, 2.0 * n), rng.next_u64());
  std::vector<SensingEdge> edges = base.edges();
  for (auto& e : edges) e.weight = 0.05 + 0.95 * rng.next_unit();
  return TripartiteGraph(base.robot_ids(), base.primitives(), base.target_ids(), edges);
}

}  // namespace

TEST_CASE("weighted instances: identity, feasibility and 2-approximation") {
  Rng rng(5050);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto g = weighted_instance(seed);
    const auto opt = brute_force_wta(g);
    for (int p = 0; p < 4; ++p) {
      const auto order = random_permutation(g.robot_ids(), rng);
      const auto res = greedy_assign(g, order);
      CHECK_NOTHROW(validate_binary(g, res.assignment.x));
      CHECK_NOTHROW(validate_responsibility(g, res.assignment.y));
      const double v = objective_wta(g, res.assignment.x, res.assignment.y);
      CHECK(tracking_quality(g, res.assignment.x) == Catch::Approx(v).margin(1e-9));
      CHECK(v >= opt.v / 2.0 - 1e-9);
      CHECK(v <= opt.v + 1e-9);
    }
  }
}
