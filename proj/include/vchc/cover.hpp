#pragma once

// Augmented cover pipeline: run the primal-dual loop with multiplicities
// k * m_v, then shift demand away from overloaded vertices onto lightly
// loaded ones, bounded by each receiver's light profile.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "vchc/primal_dual.hpp"

namespace vchc {

/// Per-vertex earmark l_v over E[v]: at most c_v units in total whose edge
/// duals pay exactly w_v.
struct LightProfile {
  VertexId vertex = 0;
  std::map<EdgeId, Rational> loads;

  Rational at(EdgeId e) const {
    auto it = loads.find(e);
    return it == loads.end() ? Rational() : it->second;
  }
  Rational total() const {
    Rational sum;
    for (const auto& [e, amount] : loads) sum += amount;
    return sum;
  }

  friend bool operator==(const LightProfile&, const LightProfile&) = default;
};

/// R_{u,v} units of edge e moved from donor u to receiver v.
struct ReassignmentMove {
  EdgeId edge = 0;
  VertexId donor = 0;
  VertexId receiver = 0;
  Rational amount;

  friend bool operator==(const ReassignmentMove&, const ReassignmentMove&) = default;
};

/// Empty string when l_v satisfies h <= l <= d, sum l <= c_v and
/// sum l * y = w_v; otherwise a description of the first failure.
inline std::string light_profile_violation(const Instance& inst, const LightProfile& profile,
                                           const DemandAssignment& h, const std::vector<Rational>& y) {
  const VertexId v = profile.vertex;
  const std::string who = "light profile of vertex " + std::to_string(v);
  for (const auto& [e, amount] : profile.loads)
    if (!inst.edge(e).contains(v)) return who + ": edge " + std::to_string(e) + " not incident";
  Rational paid;
  for (EdgeId e : inst.incident(v)) {
    const Rational l = profile.at(e);
    if (h.get(e, v) > l || l > inst.edge(e).demand)
      return who + ": condition (a) fails on edge " + std::to_string(e);
    paid += l * y.at(static_cast<std::size_t>(e));
  }
  if (profile.total() > inst.vertex(v).capacity) return who + ": condition (b) fails";
  if (paid != inst.vertex(v).weight) return who + ": condition (c) fails (" + paid.str() + " != " + inst.vertex(v).weight.str() + ")";
  return {};
}

/// Builds l_v for a vertex whose residual demand was at most c_v when it
/// saturated. Initially light vertices earmark all incident demand;
/// otherwise the edges kept at the crossing are earmarked in full and the
/// remaining budget is filled from the removed edges in ascending id order.
inline LightProfile build_light_profile(const Instance& inst, VertexId v, const std::optional<LightSnapshot>& snapshot,
                                        bool initially_light, const DemandAssignment& h,
                                        const std::vector<Rational>& y) {
  LightProfile profile{v, {}};
  if (initially_light) {
    for (EdgeId e : inst.incident(v))
      if (inst.edge(e).demand.is_positive()) profile.loads[e] = inst.edge(e).demand;
  } else {
    if (!snapshot) throw std::invalid_argument("vertex " + std::to_string(v) + " was never light before saturating");
    Rational budget = inst.vertex(v).capacity;
    for (EdgeId e : snapshot->remaining) {
      profile.loads[e] = inst.edge(e).demand;
      budget -= inst.edge(e).demand;
    }
    std::vector<EdgeId> removed = snapshot->removed;
    std::sort(removed.begin(), removed.end());
    for (EdgeId e : removed) {
      if (!budget.is_positive()) break;
      Rational take = min(inst.edge(e).demand, budget);
      budget -= take;
      profile.loads[e] = std::move(take);
    }
  }
  std::erase_if(profile.loads, [](const auto& kv) { return kv.second.is_zero(); });
  if (auto why = light_profile_violation(inst, profile, h, y); !why.empty()) throw InvariantViolation(why);
  return profile;
}

struct ReassignResult {
  DemandAssignment assignment;
  std::vector<ReassignmentMove> moves;
};

/// Moves demand of each edge from overloaded donors outside `pending_history`
/// to receivers that were underloaded in `h`, up to their light profile.
/// Donor and receiver are the smallest eligible ids.
inline ReassignResult reassign(const Instance& inst, const DemandAssignment& h,
                               const std::map<VertexId, LightProfile>& profiles,
                               const std::set<VertexId>& pending_history) {
  ReassignResult out{h, {}};
  const std::vector<Rational> base_load = received_all(inst, h);
  std::vector<Rational> load = base_load;
  auto light_bound = [&](VertexId v, EdgeId e) {
    auto it = profiles.find(v);
    return it == profiles.end() ? Rational() : it->second.at(e);
  };

  for (const Edge& edge : inst.edges()) {
    const EdgeId e = edge.id;
    while (true) {
      std::optional<VertexId> donor, receiver;
      for (VertexId u : edge.members) {
        const auto ui = static_cast<std::size_t>(u);
        if (!pending_history.count(u) && out.assignment.get(e, u).is_positive() && load[ui] > inst.vertex(u).capacity) {
          donor = u;
          break;
        }
      }
      if (!donor) break;
      for (VertexId v : edge.members) {
        const auto vi = static_cast<std::size_t>(v);
        if (!pending_history.count(v) && base_load[vi] < inst.vertex(v).capacity &&
            out.assignment.get(e, v) < light_bound(v, e)) {
          receiver = v;
          break;
        }
      }
      if (!receiver) break;

      const Rational amount = min(out.assignment.get(e, *donor), light_bound(*receiver, e) - out.assignment.get(e, *receiver));
      out.assignment.add(e, *donor, -amount);
      out.assignment.add(e, *receiver, amount);
      load[static_cast<std::size_t>(*donor)] -= amount;
      load[static_cast<std::size_t>(*receiver)] += amount;
      out.moves.push_back({e, *donor, *receiver, amount});
    }
  }
  return out;
}

struct CoverResult {
  std::int64_t k = 2;
  int f = 0;
  DemandAssignment assignment;              // h*, after reassignment
  DemandAssignment primal_dual_assignment;  // h, straight from the primal-dual loop
  std::vector<std::int64_t> multiplicities;
  Rational cost;
  DualSolution dual;
  Rational dual_lower_bound;  // dual objective with the original multiplicities
  Rational guaranteed_ratio;
  std::set<VertexId> pending_history;
  std::vector<LightProfile> profiles;
  std::vector<ReassignmentMove> moves;
  SolverTrace trace;

  friend bool operator==(const CoverResult&, const CoverResult&) = default;
};

/// Computes an augmented (k, (1 + 1/(k-1))(f-1))-cover of `inst`.
inline CoverResult solve_augmented(const Instance& inst, std::int64_t k) {
  if (k < 2) throw std::invalid_argument("augmentation factor k must be >= 2");
  if (!is_feasible(inst)) throw InfeasibleError("instance admits no feasible demand assignment");

  const Instance augmented = augment_multiplicities(inst, k);
  SolverState run = run_dual_vchc(augmented);

  CoverResult result;
  result.k = k;
  result.f = max_edge_size(inst);
  result.guaranteed_ratio = guaranteed_ratio(k, result.f);
  result.primal_dual_assignment = run.assignment;
  result.dual = run.dual;
  result.pending_history = run.pending_history;
  result.trace = run.trace;

  const std::vector<Rational> loads = received_all(augmented, run.assignment);
  std::map<VertexId, LightProfile> profiles;
  for (const Vertex& v : augmented.vertices()) {
    const auto vi = static_cast<std::size_t>(v.id);
    if (!(loads[vi] < v.capacity) || run.saturation_mode[vi] != SaturationMode::kG) continue;
    profiles.emplace(v.id, build_light_profile(augmented, v.id, run.snapshots[vi], run.initially_light[vi],
                                               run.assignment, run.dual.y));
  }
  for (const auto& [v, p] : profiles) result.profiles.push_back(p);

  ReassignResult moved = reassign(augmented, run.assignment, profiles, run.pending_history);
  result.assignment = std::move(moved.assignment);
  result.moves = std::move(moved.moves);
  result.multiplicities = multiplicities(inst, result.assignment);
  result.cost = cost(inst, result.assignment);

  Rational lower;
  for (const Edge& e : inst.edges()) lower += e.demand * run.dual.y[static_cast<std::size_t>(e.id)];
  for (const Vertex& v : inst.vertices())
    lower -= Rational(static_cast<long>(v.multiplicity)) * run.dual.eta[static_cast<std::size_t>(v.id)];
  result.dual_lower_bound = lower;
  return result;
}

}  // namespace vchc
