#pragma once

// Exact max-flow on the bipartite demand/capacity networks G(A):
//   source -> e~ (capacity d_e) -> v~ (unbounded) -> sink (capacity M_v * c_v)
// Shortest augmenting paths over a fixed arc order, so results are
// bitwise deterministic.

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vchc/assignment.hpp"
#include "vchc/instance.hpp"

namespace vchc {

struct FlowArc {
  int from = 0;
  int to = 0;
  Rational capacity;
};

struct FlowNetwork {
  static constexpr int kSource = 0;
  static constexpr int kSink = 1;

  enum class NodeKind { kSource, kSink, kEdge, kVertex };
  struct Node {
    NodeKind kind;
    int entity;  // edge or vertex id; -1 for the terminals
  };

  std::vector<Node> nodes{{NodeKind::kSource, -1}, {NodeKind::kSink, -1}};
  std::vector<FlowArc> arcs;
  std::map<EdgeId, int> edge_node;
  std::map<VertexId, int> vertex_node;
  std::map<EdgeId, int> source_arc;
  std::map<VertexId, int> sink_arc;

  int num_nodes() const { return static_cast<int>(nodes.size()); }

  int add_edge_node(EdgeId e) {
    nodes.push_back({NodeKind::kEdge, e});
    return edge_node[e] = num_nodes() - 1;
  }
  int add_vertex_node(VertexId v) {
    nodes.push_back({NodeKind::kVertex, v});
    return vertex_node[v] = num_nodes() - 1;
  }
  int add_arc(int from, int to, Rational capacity) {
    if (capacity.is_negative()) throw std::invalid_argument("negative arc capacity");
    arcs.push_back({from, to, std::move(capacity)});
    return static_cast<int>(arcs.size()) - 1;
  }

  bool has_vertex(VertexId v) const { return vertex_node.count(v) != 0; }
};

struct Flow {
  std::vector<Rational> arc_flow;
  Rational value;

  /// Flow on the sink arc of v (0 when v has no node).
  Rational through(const FlowNetwork& net, VertexId v) const {
    auto it = net.sink_arc.find(v);
    return it == net.sink_arc.end() ? Rational() : arc_flow[static_cast<std::size_t>(it->second)];
  }
  /// Flow on the source arc of e.
  Rational served(const FlowNetwork& net, EdgeId e) const {
    auto it = net.source_arc.find(e);
    return it == net.source_arc.end() ? Rational() : arc_flow[static_cast<std::size_t>(it->second)];
  }
};

/// G(A) restricted to `active_edges`; sink arcs carry
/// multiplicity_in_force[v] * c_v.
inline FlowNetwork build_flow_graph(const Instance& inst, const std::set<VertexId>& vertex_set,
                                    const std::set<EdgeId>& active_edges,
                                    const std::vector<std::int64_t>& multiplicity_in_force) {
  FlowNetwork net;
  std::set<EdgeId> edges;
  for (EdgeId e : incident_edges(inst, vertex_set))
    if (active_edges.count(e)) edges.insert(e);

  Rational unbounded;
  for (EdgeId e : edges) unbounded += inst.edge(e).demand;

  for (EdgeId e : edges) net.add_edge_node(e);
  for (VertexId v : vertex_set) net.add_vertex_node(v);

  for (EdgeId e : edges) net.source_arc[e] = net.add_arc(FlowNetwork::kSource, net.edge_node[e], inst.edge(e).demand);
  for (EdgeId e : edges)
    for (VertexId v : inst.edge(e).members)
      if (vertex_set.count(v)) net.add_arc(net.edge_node[e], net.vertex_node[v], unbounded);
  for (VertexId v : vertex_set) {
    const Rational cap = Rational(static_cast<long>(multiplicity_in_force.at(static_cast<std::size_t>(v)))) *
                         inst.vertex(v).capacity;
    net.sink_arc[v] = net.add_arc(net.vertex_node[v], FlowNetwork::kSink, cap);
  }
  return net;
}

namespace detail {

/// Augments `flow` along shortest residual paths until none remains.
/// `blocked_arc` (if >= 0) is treated as having no residual capacity.
inline void augment_to_max(const FlowNetwork& net, Flow& flow, int blocked_arc = -1) {
  const int n = net.num_nodes();
  // (arc, forward?) per node, in arc order
  std::vector<std::vector<std::pair<int, bool>>> adj(static_cast<std::size_t>(n));
  for (int a = 0; a < static_cast<int>(net.arcs.size()); ++a) {
    adj[static_cast<std::size_t>(net.arcs[static_cast<std::size_t>(a)].from)].push_back({a, true});
    adj[static_cast<std::size_t>(net.arcs[static_cast<std::size_t>(a)].to)].push_back({a, false});
  }

  auto residual = [&](int a, bool forward) -> Rational {
    const auto& arc = net.arcs[static_cast<std::size_t>(a)];
    const auto& f = flow.arc_flow[static_cast<std::size_t>(a)];
    if (forward) return a == blocked_arc ? Rational() : arc.capacity - f;
    return f;
  };

  while (true) {
    std::vector<std::pair<int, bool>> parent(static_cast<std::size_t>(n), {-1, false});
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{FlowNetwork::kSource};
    seen[FlowNetwork::kSource] = 1;
    while (!queue.empty() && !seen[FlowNetwork::kSink]) {
      const int node = queue.front();
      queue.pop_front();
      for (auto [a, forward] : adj[static_cast<std::size_t>(node)]) {
        const auto& arc = net.arcs[static_cast<std::size_t>(a)];
        const int next = forward ? arc.to : arc.from;
        if (seen[static_cast<std::size_t>(next)] || !residual(a, forward).is_positive()) continue;
        seen[static_cast<std::size_t>(next)] = 1;
        parent[static_cast<std::size_t>(next)] = {a, forward};
        if (next == FlowNetwork::kSink) break;
        queue.push_back(next);
      }
    }
    if (!seen[FlowNetwork::kSink]) return;

    std::optional<Rational> bottleneck;
    for (int node = FlowNetwork::kSink; node != FlowNetwork::kSource;) {
      auto [a, forward] = parent[static_cast<std::size_t>(node)];
      Rational r = residual(a, forward);
      if (!bottleneck || r < *bottleneck) bottleneck = std::move(r);
      const auto& arc = net.arcs[static_cast<std::size_t>(a)];
      node = forward ? arc.from : arc.to;
    }
    for (int node = FlowNetwork::kSink; node != FlowNetwork::kSource;) {
      auto [a, forward] = parent[static_cast<std::size_t>(node)];
      auto& f = flow.arc_flow[static_cast<std::size_t>(a)];
      if (forward)
        f += *bottleneck;
      else
        f -= *bottleneck;
      const auto& arc = net.arcs[static_cast<std::size_t>(a)];
      node = forward ? arc.from : arc.to;
    }
    flow.value += *bottleneck;
  }
}

}  // namespace detail

inline Flow max_flow(const FlowNetwork& net) {
  Flow flow{std::vector<Rational>(net.arcs.size()), Rational()};
  detail::augment_to_max(net, flow);
  return flow;
}

/// A maximum flow that routes as little as possible through u's sink arc.
/// Phase one saturates the network with u's sink arc removed (value F0);
/// phase two restores the arc and augments. Augmenting paths end at the
/// sink, so they never cancel flow on other sink arcs, and u carries
/// exactly F - F0.
inline Flow max_flow_min_through(const FlowNetwork& net, VertexId u) {
  auto it = net.sink_arc.find(u);
  if (it == net.sink_arc.end()) throw std::invalid_argument("vertex has no node in the flow network");
  Flow flow{std::vector<Rational>(net.arcs.size()), Rational()};
  detail::augment_to_max(net, flow, it->second);
  detail::augment_to_max(net, flow);
  return flow;
}

/// h'(e, v) = flow on arc (e~, v~), positive entries only.
inline DemandAssignment flow_to_assignment(const FlowNetwork& net, const Flow& flow) {
  DemandAssignment h;
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const auto& arc = net.arcs[a];
    const auto& from = net.nodes[static_cast<std::size_t>(arc.from)];
    const auto& to = net.nodes[static_cast<std::size_t>(arc.to)];
    if (from.kind == FlowNetwork::NodeKind::kEdge && to.kind == FlowNetwork::NodeKind::kVertex &&
        flow.arc_flow[a].is_positive())
      h.add(from.entity, to.entity, flow.arc_flow[a]);
  }
  return h;
}

/// Graphviz rendering for debugging; arcs are labelled "flow/capacity".
inline std::string to_dot(const FlowNetwork& net, const Flow* flow = nullptr) {
  auto name = [&](int node) -> std::string {
    const auto& n = net.nodes[static_cast<std::size_t>(node)];
    switch (n.kind) {
      case FlowNetwork::NodeKind::kSource: return "s_plus";
      case FlowNetwork::NodeKind::kSink: return "s_minus";
      case FlowNetwork::NodeKind::kEdge: return "e" + std::to_string(n.entity);
      case FlowNetwork::NodeKind::kVertex: return "v" + std::to_string(n.entity);
    }
    return "?";
  };
  std::ostringstream out;
  out << "digraph G {\n  rankdir=LR;\n";
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const auto& arc = net.arcs[a];
    out << "  " << name(arc.from) << " -> " << name(arc.to) << " [label=\"";
    if (flow) out << flow->arc_flow[a] << "/";
    out << arc.capacity << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vchc
