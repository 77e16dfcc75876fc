#pragma once

#include <set>
#include <vector>

#include "vchc/maxflow.hpp"

namespace vchc {

inline std::vector<std::int64_t> multiplicity_vector(const Instance& inst) {
  std::vector<std::int64_t> m;
  m.reserve(inst.num_vertices());
  for (const Vertex& v : inst.vertices()) m.push_back(v.multiplicity);
  return m;
}

inline std::set<EdgeId> positive_demand_edges(const Instance& inst) {
  std::set<EdgeId> out;
  for (const Edge& e : inst.edges())
    if (e.demand.is_positive()) out.insert(e.id);
  return out;
}

inline std::set<VertexId> all_vertices(const Instance& inst) {
  std::set<VertexId> out;
  for (const Vertex& v : inst.vertices()) out.insert(v.id);
  return out;
}

/// True iff the vertices in `group`, with sink capacities multiplicity[v]*c_v,
/// can fully serve every edge of E[group] ∩ active.
inline bool can_fully_serve(const Instance& inst, const std::set<VertexId>& group, const std::set<EdgeId>& active,
                            const std::vector<std::int64_t>& multiplicity) {
  FlowNetwork net = build_flow_graph(inst, group, active, multiplicity);
  Rational need;
  for (const auto& [e, node] : net.edge_node) need += inst.edge(e).demand;
  return max_flow(net).value == need;
}

/// Whether some demand assignment satisfies every edge within the
/// available multiplicities: max-flow over all positive-demand edges with
/// sink capacities m_v * c_v must carry the total demand.
inline bool is_feasible(const Instance& inst) {
  const auto active = positive_demand_edges(inst);
  return can_fully_serve(inst, all_vertices(inst), active, multiplicity_vector(inst));
}

}  // namespace vchc
