#include <catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace fixtures;

TEST_CASE("splitmix64 reference values") {
  // first outputs for seed 1234567, as published with the algorithm
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("uniform stays in range") {
  SplitMix64 rng(7);
  std::set<long> seen;
  for (int i = 0; i < 2000; ++i) {
    const long x = rng.uniform(-2, 3);
    REQUIRE(x >= -2);
    REQUIRE(x <= 3);
    seen.insert(x);
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("edgeless generation") {
  GenParams p;
  p.n = 4;
  p.m = 0;
  const Instance inst = gen_random(p);
  CHECK(inst.num_vertices() == 4);
  CHECK(inst.num_edges() == 0);
}

TEST_CASE("generation is deterministic") {
  GenParams p;
  p.seed = 4242;
  CHECK(serialize_instance(gen_random(p)) == serialize_instance(gen_random(p)));
  p.seed = 4243;
  GenParams q = p;
  q.seed = 4244;
  CHECK(serialize_instance(gen_random(p)) != serialize_instance(gen_random(q)));
  CHECK(serialize_instance(gen_family("heavy_light", 5, 3)) == serialize_instance(gen_family("heavy_light", 5, 3)));
}

TEST_CASE("generated numbers respect the ranges") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GenParams p;
    p.seed = seed;
    p.ensure_feasible = false;
    const Instance inst = gen_random(p);
    for (const Vertex& v : inst.vertices()) {
      REQUIRE(v.capacity >= R(1));
      REQUIRE(v.capacity <= R(4));
      REQUIRE(v.weight.is_integer());
      REQUIRE(v.multiplicity >= 1);
      REQUIRE(v.multiplicity <= 2);
    }
    for (const Edge& e : inst.edges()) {
      REQUIRE(e.members.size() >= 1);
      REQUIRE(static_cast<int>(e.members.size()) <= p.f);
      REQUIRE(e.demand >= R(1));
      REQUIRE(e.demand <= R(4));
      REQUIRE((e.demand * R(12)).is_integer());
    }
  }
}

TEST_CASE("feasibility repair over 1000 seeds") {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    GenParams p;
    p.seed = seed;
    p.capacity = {R(0), R(2), 2};
    REQUIRE(is_feasible(gen_random(p)));
  }
}

TEST_CASE("bad parameters") {
  GenParams p;
  p.f = 9;
  CHECK_THROWS_AS(gen_random(p), std::invalid_argument);
  p = GenParams{};
  p.demand = {R(3), R(1), 1};
  CHECK_THROWS_AS(gen_random(p), std::invalid_argument);
  CHECK_THROWS_AS(gen_family("ring", 3, 1), std::invalid_argument);
}

TEST_CASE("star hub ends up pending") {
  int pending = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = gen_family("star", 3, seed);
    REQUIRE(is_feasible(inst));
    if (solve_augmented(inst, 2).pending_history.count(0)) ++pending;
  }
  CHECK(pending >= 1);
}

TEST_CASE("tight family has no spare capacity") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = gen_family("tight", 4, seed);
    REQUIRE(is_feasible(inst));
    Rational supply;
    for (const Vertex& v : inst.vertices()) supply += v.capacity * Rational(static_cast<long>(v.multiplicity));
    REQUIRE(supply == inst.total_demand());
    for (const Vertex& v : inst.vertices()) {
      std::vector<Vertex> vs = inst.vertices();
      vs[static_cast<std::size_t>(v.id)].multiplicity -= 1;
      REQUIRE_FALSE(is_feasible(Instance(vs, inst.edges())));
    }
  }
}

TEST_CASE("heavy_light family saturates in both modes") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const CoverResult r = solve_augmented(gen_family("heavy_light", 4, seed), 2);
    bool z = false, g = false;
    for (const auto& ev : r.trace.events)
      if (const auto* s = std::get_if<trace::Saturation>(&ev)) (s->mode == SaturationMode::kZ ? z : g) = true;
    REQUIRE(z);
    REQUIRE(g);
  }
}
