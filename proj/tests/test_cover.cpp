#include <catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace fixtures;

TEST_CASE("light profile of an initially light vertex") {
  const Instance inst({V(0, R(3), R(5), 1)}, {E(0, {0}, R(1)), E(1, {0}, R(2))});
  const LightProfile p = build_light_profile(inst, 0, std::nullopt, true, {}, {R(1), R(1)});
  CHECK(p.at(0) == R(1));
  CHECK(p.at(1) == R(2));
}

TEST_CASE("light profile fills removed edges after kept ones") {
  const Instance inst({V(0, R(3), R(3), 1)}, {E(0, {0}, R(3)), E(1, {0}, R(1))});
  const LightSnapshot snap{{0}, {1}};
  const LightProfile p = build_light_profile(inst, 0, snap, false, {}, {R(1), R(1)});
  CHECK(p.at(1) == R(1));
  CHECK(p.at(0) == R(2));
  CHECK(p.total() == R(3));
}

TEST_CASE("light profile violations are reported") {
  const Instance inst({V(0, R(3), R(3), 1)}, {E(0, {0}, R(3)), E(1, {0}, R(1))});
  // wrong dual: pays 2 instead of 3
  CHECK_THROWS_AS(build_light_profile(inst, 0, LightSnapshot{{0}, {1}}, false, {}, {R(1, 2), R(1)}), InvariantViolation);
  DemandAssignment h;
  h.set(1, 0, R(1));
  LightProfile short_of{0, {{0, R(2)}}};
  CHECK_THAT(light_profile_violation(inst, short_of, h, {R(1), R(1)}), Catch::Matchers::ContainsSubstring("(a)"));
  LightProfile too_big{0, {{0, R(3)}, {1, R(1)}}};
  CHECK_THAT(light_profile_violation(inst, too_big, {}, {R(1), R(1)}), Catch::Matchers::ContainsSubstring("(b)"));
}

TEST_CASE("reassign moves demand to a light receiver") {
  const Instance inst({V(0, R(1), R(2), 2), V(1, R(1), R(2), 1)}, {E(0, {0, 1}, R(3))});
  DemandAssignment h;
  h.set(0, 0, R(3));
  const std::map<VertexId, LightProfile> profiles{{1, LightProfile{1, {{0, R(2)}}}}};
  const ReassignResult r = reassign(inst, h, profiles, {});
  REQUIRE(r.moves.size() == 1);
  CHECK(r.moves[0] == ReassignmentMove{0, 0, 1, R(2)});
  CHECK(r.assignment.get(0, 0) == R(1));
  CHECK(r.assignment.get(0, 1) == R(2));

  // a pending donor keeps its load
  CHECK(reassign(inst, h, profiles, {0}).moves.empty());
}

TEST_CASE("reassign leaves light loads alone") {
  const Instance inst({V(0, R(1), R(3), 1), V(1, R(1), R(2), 1)}, {E(0, {0, 1}, R(3))});
  DemandAssignment h;
  h.set(0, 0, R(2));
  h.set(0, 1, R(1));
  const std::map<VertexId, LightProfile> profiles{{1, LightProfile{1, {{0, R(2)}}}}};
  const ReassignResult r = reassign(inst, h, profiles, {});
  CHECK(r.moves.empty());
  CHECK(r.assignment == h);
}

TEST_CASE("reassign on random runs") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GenParams p;
    p.n = 6;
    p.m = 7;
    p.f = 3;
    p.seed = seed;
    p.weight = {R(1), R(1), 1};
    const Instance inst = gen_random(p);
    const CoverResult r = solve_augmented(inst, 2);
    const Instance aug = augment_multiplicities(inst, 2);
    REQUIRE(r.moves.size() <= inst.num_edges() * 9);
    // with equal weights moving load never makes the cover dearer
    REQUIRE(cost(inst, r.assignment) <= cost(inst, r.primal_dual_assignment));
    for (const Edge& e : inst.edges()) REQUIRE(r.assignment.edge_total(e.id) == r.primal_dual_assignment.edge_total(e.id));
    for (const auto& prof : r.profiles) REQUIRE(light_profile_violation(aug, prof, r.primal_dual_assignment, r.dual.y).empty());
  }
}

TEST_CASE("solve I1") {
  const CoverResult r = solve_augmented(i1(), 2);
  CHECK(r.cost == R(1));
  CHECK(r.multiplicities == std::vector<std::int64_t>{1, 0});
  CHECK(r.dual_lower_bound == R(1));
  CHECK(r.cost <= r.guaranteed_ratio * exact_opt(i1()).opt_cost);
  CHECK(r.guaranteed_ratio == R(2));
}

TEST_CASE("solve I2") {
  const Instance inst = i2();
  const Rational opt = exact_opt(inst).opt_cost;
  REQUIRE(opt == R(4));
  const CoverResult r = solve_augmented(inst, 2);
  CHECK(r.cost <= R(2) * opt);
  for (const Vertex& v : inst.vertices()) CHECK(r.multiplicities[static_cast<std::size_t>(v.id)] <= 2 * v.multiplicity);
  CHECK(check_primal(inst, 2, r.assignment).overall());
}

TEST_CASE("solve with zero demands") {
  const Instance inst({V(0, R(3), R(1), 1), V(1, R(1), R(2), 1)}, {E(0, {0, 1}, R(0))});
  const CoverResult r = solve_augmented(inst, 3);
  CHECK(r.cost == R(0));
  CHECK(r.assignment.empty());
}

TEST_CASE("solve rejects bad input") {
  CHECK_THROWS_AS(solve_augmented(i1(), 1), std::invalid_argument);
  CHECK_THROWS_AS(solve_augmented(Instance({V(0, R(1), R(1), 1)}, {E(0, {0}, R(2))}), 2), InfeasibleError);
}

TEST_CASE("solve is deterministic") {
  GenParams p;
  p.seed = 99;
  const Instance inst = gen_random(p);
  CHECK(solve_augmented(inst, 3) == solve_augmented(inst, 3));
  CHECK(cover_to_json(solve_augmented(inst, 3), true).dump() == cover_to_json(solve_augmented(inst, 3), true).dump());
}

TEST_CASE("cover JSON round-trips") {
  for (const std::string& family : {"star", "tight", "heavy_light"}) {
    const Instance inst = gen_family(family, 4, 5);
    const CoverResult r = solve_augmented(inst, 2);
    const Json doc = cover_to_json(r, true);
    const CoverResult back = cover_from_json(Json::parse(doc.dump()));
    CHECK(back == r);
    CHECK(trace_from_jsonl(trace_to_jsonl(r.trace)) == r.trace);
  }
}
