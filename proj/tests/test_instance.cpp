#include <catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace fixtures;

TEST_CASE("parse minimal document") {
  const Instance inst = parse_instance(R"({"vertices": [{"id": 0, "weight": "1", "capacity": "0.5", "multiplicity": 1}]})");
  CHECK(inst.num_vertices() == 1);
  CHECK(inst.num_edges() == 0);
  CHECK(inst.vertex(0).capacity == R(1, 2));
}

TEST_CASE("parse accepts integer numerals and sorts members") {
  const Instance inst = parse_instance(R"({
    "vertices": [{"id": 1, "weight": 3, "capacity": "2", "multiplicity": 1},
                 {"id": 0, "weight": "1", "capacity": "7/3", "multiplicity": 2}],
    "edges": [{"id": 0, "vertices": [1, 0], "demand": "1.5"}]})");
  CHECK(inst.vertex(0).capacity == R(7, 3));
  CHECK(inst.vertex(1).weight == R(3));
  CHECK(inst.edge(0).members == std::vector<VertexId>{0, 1});
  CHECK(inst.edge(0).demand == R(3, 2));
}

TEST_CASE("parse errors carry a location") {
  auto error_of = [](const std::string& text) -> std::string {
    try {
      parse_instance(text);
    } catch (const ParseError& ex) {
      return ex.what();
    }
    return "no error";
  };
  const std::string v0 = R"({"id": 0, "weight": "1", "capacity": "1", "multiplicity": 1})";
  CHECK_THAT(error_of(R"({"vertices": [)" + v0 + R"(], "edges": [{"id": 0, "vertices": [4], "demand": "1"}]})"),
             Catch::Matchers::ContainsSubstring("unknown vertex") && Catch::Matchers::ContainsSubstring("/edges/0"));
  CHECK_THAT(error_of(R"({"vertices": [)" + v0 + "," + v0 + "]}"), Catch::Matchers::ContainsSubstring("duplicate vertex id"));
  CHECK_THAT(error_of(R"({"vertices": [{"id": 0, "weight": "-1", "capacity": "1", "multiplicity": 1}]})"),
             Catch::Matchers::ContainsSubstring("/vertices/0"));
  CHECK_THAT(error_of(R"({"vertices": [)" + v0 + R"(], "edges": [{"id": 0, "vertices": [], "demand": "1"}]})"),
             Catch::Matchers::ContainsSubstring("no vertices"));
  CHECK_THAT(error_of(R"({"vertices": [{"id": 1, "weight": "1", "capacity": "1", "multiplicity": 1}]})"),
             Catch::Matchers::ContainsSubstring("dense"));
  CHECK_THAT(error_of("{ not json"), Catch::Matchers::ContainsSubstring("malformed JSON"));
  CHECK_THAT(error_of(R"({"vertices": [{"id": 0, "weight": "x", "capacity": "1", "multiplicity": 1}]})"),
             Catch::Matchers::ContainsSubstring("/vertices/0/weight"));
}

TEST_CASE("serialization round-trips") {
  const Instance inst = i2();
  const std::string text = serialize_instance(inst);
  CHECK(parse_instance(text) == inst);
  CHECK(serialize_instance(parse_instance(text)) == text);
}

TEST_CASE("validate flags degenerate inputs") {
  const ValidationReport warn = validate({V(0, R(1), R(0), 0)}, {});
  CHECK(warn.ok());
  CHECK(warn.issues.size() >= 2);
  CHECK_FALSE(validate({V(0, R(1), R(1), 1)}, {E(0, {0, 0}, R(1))}).ok());
  CHECK_FALSE(validate({V(1, R(1), R(1), 1)}, {}).ok());
  CHECK_THROWS_AS(Instance({V(0, R(1), R(1), 1)}, {E(0, {3}, R(1))}), std::invalid_argument);
}

TEST_CASE("incident edges") {
  const Instance inst({V(0, R(1), R(1), 1), V(1, R(1), R(1), 1), V(2, R(1), R(1), 1)},
                      {E(0, {0, 1}, R(1)), E(1, {0}, R(1))});
  CHECK(incident_edges(inst, 2).empty());
  CHECK(incident_edges(inst, 0) == std::set<EdgeId>{0, 1});
  CHECK(incident_edges(i2(), 0) == std::set<EdgeId>{0, 1});
  CHECK(incident_edges(inst, std::set<VertexId>{1, 2}) == std::set<EdgeId>{0});
}

TEST_CASE("max edge size") {
  CHECK(max_edge_size(i1()) == 2);
  const Instance mixed({V(0, R(1), R(1), 1), V(1, R(1), R(1), 1), V(2, R(1), R(1), 1)},
                       {E(0, {0}, R(1)), E(1, {0, 1, 2}, R(1)), E(2, {1, 2}, R(1))});
  CHECK(max_edge_size(mixed) == 3);
  const Instance none({V(0, R(1), R(1), 1)}, {});
  CHECK(max_edge_size(none) == 0);
  CHECK(ratio_edge_size(none) == 2);
}

TEST_CASE("feasibility") {
  CHECK_FALSE(is_feasible(Instance({V(0, R(1), R(1), 1)}, {E(0, {0}, R(2))})));
  CHECK(is_feasible(Instance({V(0, R(1), R(1), 2)}, {E(0, {0}, R(2))})));
  CHECK(is_feasible(i2()));
  CHECK(is_feasible(Instance({V(0, R(1), R(0), 0)}, {E(0, {0}, R(0))})));
  // Pooled capacity is enough but the shared vertex is needed by both edges.
  const Instance crowded({V(0, R(1), R(1), 1), V(1, R(1), R(5), 1)}, {E(0, {0}, R(1)), E(1, {0}, R(1)), E(2, {1}, R(1))});
  CHECK_FALSE(is_feasible(crowded));
}

TEST_CASE("augment multiplicities") {
  CHECK(augment_multiplicities(i1(), 1) == i1());
  const Instance two({V(0, R(1), R(1), 1), V(1, R(1), R(1), 2)}, {});
  const Instance three = augment_multiplicities(two, 3);
  CHECK(three.vertex(0).multiplicity == 3);
  CHECK(three.vertex(1).multiplicity == 6);
  const Instance a = augment_multiplicities(i1(), 2);
  CHECK(a.vertex(0).multiplicity == 2);
  CHECK(a.vertex(1).multiplicity == 2);
  CHECK_THROWS_AS(augment_multiplicities(i1(), 0), std::invalid_argument);
}

TEST_CASE("guaranteed ratio") {
  CHECK(guaranteed_ratio(2, 2) == R(2));
  CHECK(guaranteed_ratio(2, 3) == R(4));
  CHECK(guaranteed_ratio(3, 3) == R(3));
  CHECK(guaranteed_ratio(4, 3) == R(8, 3));
  CHECK(guaranteed_ratio(2, 1) == R(2));
  CHECK_THROWS(guaranteed_ratio(1, 2));
}

TEST_CASE("cost and received") {
  const Instance inst = i1();
  DemandAssignment h;
  CHECK(cost(inst, h) == R(0));
  const Instance five({V(0, R(5), R(2), 3)}, {E(0, {0}, R(3))});
  h.set(0, 0, R(3));
  CHECK(received(h, 0) == R(3));
  CHECK(cost(five, h) == R(10));
  h.set(0, 0, R(2));
  CHECK(cost(five, h) == R(5));
  CHECK(multiplicity_for(R(1), R(0)) == 0);
}
