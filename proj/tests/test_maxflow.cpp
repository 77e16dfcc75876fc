#include <catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace fixtures;

namespace {

Instance single(Rational d, Rational c, std::int64_t m) { return Instance({V(0, R(1), std::move(c), m)}, {E(0, {0}, std::move(d))}); }

// Random flow network with at most 12 nodes, built from a random instance.
FlowNetwork random_network(std::uint64_t seed, VertexId* probe) {
  SplitMix64 rng(seed * 7919 + 1);
  GenParams p;
  p.n = static_cast<int>(rng.uniform(1, 5));
  p.m = static_cast<int>(rng.uniform(1, 5));
  p.f = static_cast<int>(rng.uniform(1, p.n));
  p.capacity = {R(0), R(3), 3};
  p.multiplicity = {0, 2};
  p.ensure_feasible = false;
  p.seed = seed;
  const Instance inst = gen_random(p);
  std::set<VertexId> group;
  for (const Vertex& v : inst.vertices())
    if (rng.uniform(0, 3) != 0) group.insert(v.id);
  if (group.empty()) group.insert(0);
  *probe = *std::next(group.begin(), rng.uniform(0, static_cast<long>(group.size()) - 1));
  return build_flow_graph(inst, group, positive_demand_edges(inst), multiplicity_vector(inst));
}

void check_conservation(const FlowNetwork& net, const Flow& flow) {
  std::vector<Rational> balance(static_cast<std::size_t>(net.num_nodes()));
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    REQUIRE_FALSE(flow.arc_flow[a].is_negative());
    REQUIRE(flow.arc_flow[a] <= net.arcs[a].capacity);
    balance[static_cast<std::size_t>(net.arcs[a].from)] -= flow.arc_flow[a];
    balance[static_cast<std::size_t>(net.arcs[a].to)] += flow.arc_flow[a];
  }
  for (int node = 2; node < net.num_nodes(); ++node) REQUIRE(balance[static_cast<std::size_t>(node)].is_zero());
  REQUIRE(balance[FlowNetwork::kSink] == flow.value);
}

}  // namespace

TEST_CASE("flow graph construction") {
  const Instance inst = single(R(2), R(4), 1);
  const FlowNetwork net = build_flow_graph(inst, {0}, {0}, {1});
  REQUIRE(net.arcs.size() == 3);
  CHECK(net.arcs[0].from == FlowNetwork::kSource);
  CHECK(net.arcs[0].capacity == R(2));
  CHECK(net.arcs[2].to == FlowNetwork::kSink);
  CHECK(net.arcs[2].capacity == R(4));

  const FlowNetwork empty = build_flow_graph(inst, {}, {0}, {1});
  CHECK(empty.arcs.empty());
  CHECK(empty.num_nodes() == 2);

  const Instance a = augment_multiplicities(i1(), 2);
  const FlowNetwork both = build_flow_graph(a, {0, 1}, {0}, multiplicity_vector(a));
  CHECK(both.arcs[static_cast<std::size_t>(both.sink_arc.at(0))].capacity == R(4));
  CHECK(both.arcs[static_cast<std::size_t>(both.sink_arc.at(1))].capacity == R(4));
}

TEST_CASE("max flow on small networks") {
  const Instance inst = single(R(2), R(4), 1);
  const FlowNetwork net = build_flow_graph(inst, {0}, {0}, {1});
  const Flow flow = max_flow(net);
  CHECK(flow.value == R(2));
  CHECK(flow.served(net, 0) == R(2));

  const Instance pair({V(0, R(1), R(4), 1)}, {E(0, {0}, R(2)), E(1, {0}, R(3))});
  const FlowNetwork pnet = build_flow_graph(pair, {0}, {0, 1}, {1});
  CHECK(max_flow(pnet).value == R(4));
}

TEST_CASE("max flow matches exhaustive min cut") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    VertexId u = 0;
    const FlowNetwork net = random_network(seed, &u);
    REQUIRE(net.num_nodes() <= 12);
    const Flow flow = max_flow(net);
    check_conservation(net, flow);
    REQUIRE(flow.value == brute_min_cut(net));
  }
}

TEST_CASE("min-through flow keeps the value and minimizes the probe's share") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    VertexId u = 0;
    const FlowNetwork net = random_network(seed, &u);
    const Flow flow = max_flow_min_through(net, u);
    check_conservation(net, flow);
    const Rational total = brute_min_cut(net);
    const Rational without_u = brute_min_cut(net, net.sink_arc.at(u));
    REQUIRE(flow.value == total);
    REQUIRE(flow.through(net, u) == total - without_u);
  }
}

TEST_CASE("min-through edge cases") {
  // u is redundant: the other vertex alone carries everything.
  const Instance spare({V(0, R(1), R(5), 1), V(1, R(1), R(5), 1)}, {E(0, {0, 1}, R(3))});
  const FlowNetwork net = build_flow_graph(spare, {0, 1}, {0}, {1, 1});
  CHECK(max_flow_min_through(net, 0).through(net, 0) == R(0));
  // u is the only way out.
  const FlowNetwork alone = build_flow_graph(spare, {0}, {0}, {1, 1});
  CHECK(max_flow_min_through(alone, 0).through(alone, 0) == R(3));
  CHECK_THROWS_AS(max_flow_min_through(alone, 1), std::invalid_argument);
}

TEST_CASE("flow to assignment") {
  const Instance inst = single(R(2), R(4), 1);
  const FlowNetwork net = build_flow_graph(inst, {0}, {0}, {1});
  Flow zero{std::vector<Rational>(net.arcs.size()), Rational()};
  CHECK(flow_to_assignment(net, zero).empty());
  const DemandAssignment h = flow_to_assignment(net, max_flow(net));
  CHECK(h.size() == 1);
  CHECK(h.get(0, 0) == R(2));

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    VertexId u = 0;
    const FlowNetwork rnet = random_network(seed, &u);
    const Flow flow = max_flow(rnet);
    const DemandAssignment ra = flow_to_assignment(rnet, flow);
    for (const auto& [e, node] : rnet.edge_node) REQUIRE(ra.edge_total(e) == flow.served(rnet, e));
  }
}

TEST_CASE("dot output names every node") {
  const FlowNetwork net = build_flow_graph(i1(), {0, 1}, {0}, {1, 1});
  const Flow flow = max_flow(net);
  const std::string dot = to_dot(net, &flow);
  CHECK_THAT(dot, Catch::Matchers::StartsWith("digraph"));
  CHECK_THAT(dot, Catch::Matchers::ContainsSubstring("->"));
}
