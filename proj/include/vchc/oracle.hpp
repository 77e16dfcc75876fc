#pragma once

// Exact optimum for small instances: branch and bound over multiplicity
// vectors x in prod_v {0..m_v}, with max-flow feasibility at every node.

#include <cstdint>
#include <numeric>
#include <vector>

#include "vchc/errors.hpp"
#include "vchc/feasibility.hpp"

namespace vchc {

inline constexpr std::int64_t kDefaultOracleBudget = 2'000'000;

struct OracleResult {
  bool feasible = false;
  Rational opt_cost;
  std::vector<std::int64_t> witness_x;
  DemandAssignment witness_h;
  std::int64_t nodes = 0;
};

/// Cheapest feasible multiplicity vector; ties go to the lexicographically
/// smallest x. Throws BudgetExceeded when prod (m_v + 1) > budget.
inline OracleResult exact_opt(const Instance& inst, std::int64_t budget = kDefaultOracleBudget) {
  std::int64_t space = 1;
  for (const Vertex& v : inst.vertices()) {
    space *= v.multiplicity + 1;
    if (space > budget)
      throw BudgetExceeded("search space exceeds oracle budget of " + std::to_string(budget) + " (too large for oracle)");
  }

  OracleResult result;
  const auto active = positive_demand_edges(inst);
  const auto everyone = all_vertices(inst);
  const std::size_t n = inst.num_vertices();

  // Vertices that can carry demand, heaviest first; others stay at 0.
  std::vector<VertexId> order;
  for (const Vertex& v : inst.vertices()) {
    bool touches = false;
    for (EdgeId e : inst.incident(v.id)) touches = touches || active.count(e) != 0;
    if (touches && v.capacity.is_positive() && v.multiplicity > 0) order.push_back(v.id);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return inst.vertex(a).weight > inst.vertex(b).weight; });

  std::vector<std::int64_t> x(n, 0);
  for (VertexId v : order) x[static_cast<std::size_t>(v)] = inst.vertex(v).multiplicity;
  if (!can_fully_serve(inst, everyone, active, x)) {
    result.nodes = 1;
    return result;
  }

  std::optional<Rational> best;
  std::vector<std::int64_t> best_x;

  auto dfs = [&](auto&& self, std::size_t depth, const Rational& partial) -> void {
    ++result.nodes;
    if (best && partial > *best) return;
    if (depth == order.size()) {
      if (!best || partial < *best || x < best_x) {
        best = partial;
        best_x = x;
      }
      return;
    }
    const VertexId v = order[depth];
    const auto vi = static_cast<std::size_t>(v);
    const std::int64_t cap = inst.vertex(v).multiplicity;
    for (std::int64_t value = 0; value <= cap; ++value) {
      x[vi] = value;
      const Rational next = partial + inst.vertex(v).weight * Rational(static_cast<long>(value));
      if (best && next > *best) break;
      // remaining vertices are still at their maximum
      if (can_fully_serve(inst, everyone, active, x)) self(self, depth + 1, next);
    }
    x[vi] = cap;
  };
  dfs(dfs, 0, Rational());

  result.feasible = true;
  result.opt_cost = *best;
  result.witness_x = best_x;
  FlowNetwork net = build_flow_graph(inst, everyone, active, best_x);
  result.witness_h = flow_to_assignment(net, max_flow(net));
  return result;
}

/// exact_opt on the instance with multiplicities beta * m_v.
inline OracleResult exact_opt_augmented(const Instance& inst, std::int64_t beta,
                                        std::int64_t budget = kDefaultOracleBudget) {
  return exact_opt(augment_multiplicities(inst, beta), budget);
}

}  // namespace vchc
