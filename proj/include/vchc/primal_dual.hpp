#pragma once

// Primal-dual event loop for VC-HC. Edge duals y_e rise in lockstep; each
// vertex pays for the rise through z_v while its residual incident demand
// exceeds c_v and through g_{e,v} otherwise. Vertices whose dual constraint
// becomes tight are handed to a recursive max-flow procedure that extracts
// the largest group of saturated vertices able to serve all remaining
// demand around them. Vertices that cannot be served yet stay pending in S,
// and for them eta_v rises at rate c_v so the constraint stays tight.
//
// Time advances event by event (dt = smallest saturation rate), so every
// dual value is an exact rational at every boundary.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "vchc/errors.hpp"
#include "vchc/feasibility.hpp"

namespace vchc {

/// Solution of the dual LP: y per edge, z and eta per vertex, g per incidence.
struct DualSolution {
  std::vector<Rational> y;
  std::vector<Rational> z;
  std::vector<Rational> eta;
  std::map<std::pair<EdgeId, VertexId>, Rational> g;

  static DualSolution zero(const Instance& inst) {
    DualSolution d;
    d.y.assign(inst.num_edges(), Rational());
    d.z.assign(inst.num_vertices(), Rational());
    d.eta.assign(inst.num_vertices(), Rational());
    return d;
  }

  Rational g_at(EdgeId e, VertexId v) const {
    auto it = g.find({e, v});
    return it == g.end() ? Rational() : it->second;
  }

  /// c_v z_v + sum_{e in E[v]} d_e g_{e,v} - eta_v, the left side of v's
  /// dual constraint.
  Rational vertex_load(const Instance& inst, VertexId v) const {
    const auto vi = static_cast<std::size_t>(v);
    Rational lhs = inst.vertex(v).capacity * z.at(vi) - eta.at(vi);
    for (EdgeId e : inst.incident(v)) lhs += inst.edge(e).demand * g_at(e, v);
    return lhs;
  }

  friend bool operator==(const DualSolution&, const DualSolution&) = default;
};

enum class SaturationMode { kZ, kG };

inline const char* to_string(SaturationMode m) { return m == SaturationMode::kZ ? "z" : "g"; }

/// Edges of E[v] removed (H) and kept (K) in the removal that brought v's
/// residual demand down to at most c_v.
struct LightSnapshot {
  std::vector<EdgeId> removed;
  std::vector<EdgeId> remaining;

  friend bool operator==(const LightSnapshot&, const LightSnapshot&) = default;
};

namespace trace {

struct Saturation {
  VertexId vertex = 0;
  Rational time;
  SaturationMode mode = SaturationMode::kZ;
  friend bool operator==(const Saturation&, const Saturation&) = default;
};

/// One completed Self-Containment call: the candidate set, the active
/// edges it saw, the group it returned and the assignment for that group.
struct SelfContainment {
  VertexId trigger = 0;
  Rational time;
  std::vector<VertexId> candidates;
  std::vector<EdgeId> active_edges;
  std::vector<VertexId> group;
  DemandAssignment assignment;
  int depth = 0;
  friend bool operator==(const SelfContainment&, const SelfContainment&) = default;
};

struct PendingAdded {
  VertexId vertex = 0;
  Rational time;
  friend bool operator==(const PendingAdded&, const PendingAdded&) = default;
};

/// A served group left S and its edges left the active set. `stranded`
/// lists pending vertices that no longer have an active edge.
struct GroupRemoved {
  Rational time;
  std::vector<VertexId> group;
  std::vector<EdgeId> removed_edges;
  std::vector<VertexId> stranded;
  friend bool operator==(const GroupRemoved&, const GroupRemoved&) = default;
};

struct LightCrossing {
  VertexId vertex = 0;
  Rational time;
  LightSnapshot snapshot;
  friend bool operator==(const LightCrossing&, const LightCrossing&) = default;
};

using Event = std::variant<Saturation, SelfContainment, PendingAdded, GroupRemoved, LightCrossing>;

inline const Rational& time_of(const Event& ev) {
  return std::visit([](const auto& e) -> const Rational& { return e.time; }, ev);
}

}  // namespace trace

struct SolverTrace {
  std::vector<trace::Event> events;
  friend bool operator==(const SolverTrace&, const SolverTrace&) = default;
};

struct SolverState {
  Instance instance;  // multiplicities are the ones in force
  std::set<EdgeId> active_edges;
  std::set<VertexId> candidates;
  std::set<VertexId> pending;
  std::set<VertexId> pending_history;
  std::vector<Rational> residual_demand;
  std::vector<Rational> slack;
  Rational time;
  DemandAssignment assignment;
  DualSolution dual;
  std::vector<std::optional<LightSnapshot>> snapshots;
  std::vector<bool> initially_light;
  std::vector<std::optional<SaturationMode>> saturation_mode;
  SolverTrace trace;
  int iterations = 0;

  static SolverState initial(const Instance& inst) {
    SolverState s;
    s.instance = inst;
    s.active_edges = positive_demand_edges(inst);
    const std::size_t n = inst.num_vertices();
    s.residual_demand.assign(n, Rational());
    s.slack.assign(n, Rational());
    s.snapshots.assign(n, std::nullopt);
    s.initially_light.assign(n, false);
    s.saturation_mode.assign(n, std::nullopt);
    s.dual = DualSolution::zero(inst);
    for (const Vertex& v : inst.vertices()) {
      const auto vi = static_cast<std::size_t>(v.id);
      for (EdgeId e : inst.incident(v.id))
        if (s.active_edges.count(e)) s.residual_demand[vi] += inst.edge(e).demand;
      s.slack[vi] = v.weight;
      s.initially_light[vi] = s.residual_demand[vi] <= v.capacity;
      if (v.multiplicity > 0 && v.capacity.is_positive() && s.residual_demand[vi].is_positive())
        s.candidates.insert(v.id);
    }
    return s;
  }

  std::vector<EdgeId> active_incident(VertexId v) const {
    std::vector<EdgeId> out;
    for (EdgeId e : instance.incident(v))
      if (active_edges.count(e)) out.push_back(e);
    return out;
  }
};

/// Throws InvariantViolation unless every stored slack equals the slack
/// recomputed from the dual variables and is nonnegative.
inline void check_slack_consistency(const SolverState& s) {
  for (const Vertex& v : s.instance.vertices()) {
    const auto vi = static_cast<std::size_t>(v.id);
    const Rational recomputed = v.weight - s.dual.vertex_load(s.instance, v.id);
    if (recomputed.is_negative())
      throw InvariantViolation("dual constraint of vertex " + std::to_string(v.id) + " violated");
    if (s.candidates.count(v.id) && recomputed != s.slack[vi])
      throw InvariantViolation("stored slack of vertex " + std::to_string(v.id) + " is stale");
    if ((s.pending.count(v.id) || s.saturation_mode[vi]) && !recomputed.is_zero())
      throw InvariantViolation("saturated vertex " + std::to_string(v.id) + " is no longer tight");
  }
}

struct SelfContainmentResult {
  std::set<VertexId> group;
  DemandAssignment assignment;
  int depth = 0;
};

/// Largest subset of `vertex_set` whose in-force capacity can serve all
/// active demand incident to it, found by repeatedly keeping the vertices
/// whose incident edges a max-flow fully serves. When `trigger` is among
/// the candidates, the max-flow routes as little as possible through it.
inline SelfContainmentResult self_containment(const SolverState& state, const std::set<VertexId>& vertex_set,
                                              VertexId trigger) {
  const auto multiplicity = multiplicity_vector(state.instance);
  std::set<VertexId> current = vertex_set;
  for (int depth = 1;; ++depth) {
    FlowNetwork net = build_flow_graph(state.instance, current, state.active_edges, multiplicity);
    Flow flow = current.count(trigger) ? max_flow_min_through(net, trigger) : max_flow(net);

    std::set<VertexId> served;
    for (VertexId v : current) {
      bool all = true;
      for (EdgeId e : state.instance.incident(v))
        if (state.active_edges.count(e) && flow.served(net, e) != state.instance.edge(e).demand) {
          all = false;
          break;
        }
      if (all) served.insert(v);
    }
    if (served == current) return {served, flow_to_assignment(net, flow), depth};
    if (served.empty()) return {{}, {}, depth};
    current = std::move(served);
  }
}

/// Vertex reaching saturation next and the time step to get there:
/// argmin over candidates of slack / min(c_v, residual demand), smallest id
/// on ties.
inline std::pair<VertexId, Rational> select_next_saturation(const SolverState& state) {
  std::optional<std::pair<VertexId, Rational>> best;
  for (VertexId v : state.candidates) {
    const auto vi = static_cast<std::size_t>(v);
    const Rational& rate_base = min(state.instance.vertex(v).capacity, state.residual_demand[vi]);
    if (!rate_base.is_positive()) throw InvariantViolation("candidate vertex with zero rate");
    Rational r = state.slack[vi] / rate_base;
    if (!best || r < best->second) best.emplace(v, std::move(r));
  }
  if (!best) throw InfeasibleError("no vertex can saturate while demand remains; instance infeasible for the multiplicities in force");
  return *best;
}

/// Raises every active y_e by dt and pays for it at each incident vertex.
inline void advance_duals(SolverState& state, const Rational& dt) {
  if (dt.is_negative()) throw InvariantViolation("negative time step");
  if (dt.is_zero()) return;
  state.time += dt;
  for (EdgeId e : state.active_edges) state.dual.y[static_cast<std::size_t>(e)] += dt;

  for (const Vertex& v : state.instance.vertices()) {
    const auto vi = static_cast<std::size_t>(v.id);
    const auto inc = state.active_incident(v.id);
    if (inc.empty()) continue;
    if (state.candidates.count(v.id)) {
      if (state.residual_demand[vi] > v.capacity) {
        state.dual.z[vi] += dt;
        state.slack[vi] -= v.capacity * dt;
      } else {
        for (EdgeId e : inc) state.dual.g[{e, v.id}] += dt;
        state.slack[vi] -= state.residual_demand[vi] * dt;
      }
      if (state.slack[vi].is_negative())
        throw InvariantViolation("slack of vertex " + std::to_string(v.id) + " went negative");
    } else {
      // Pending vertices, and vertices that can never serve (m_v c_v = 0):
      // z_v covers the rise of y_e, eta_v offsets it in the constraint.
      state.dual.z[vi] += dt;
      state.dual.eta[vi] += v.capacity * dt;
    }
  }
}

/// Runs the loop until every positive-demand edge has been served.
/// `inst` must carry the multiplicities in force (k * m_v for the
/// augmented run).
inline SolverState run_dual_vchc(const Instance& inst) {
  if (!is_feasible(inst)) throw InfeasibleError("instance admits no feasible demand assignment");
  SolverState s = SolverState::initial(inst);

  while (!s.active_edges.empty()) {
    if (++s.iterations > static_cast<int>(inst.num_vertices()))
      throw InvariantViolation("primal-dual loop exceeded |V| iterations");

    auto [u, dt] = select_next_saturation(s);
    advance_duals(s, dt);
    const auto ui = static_cast<std::size_t>(u);
    if (!s.slack[ui].is_zero()) throw InvariantViolation("selected vertex did not saturate");
    const SaturationMode mode =
        s.residual_demand[ui] > inst.vertex(u).capacity ? SaturationMode::kZ : SaturationMode::kG;
    s.saturation_mode[ui] = mode;
    s.candidates.erase(u);
    s.trace.events.emplace_back(trace::Saturation{u, s.time, mode});

    std::set<VertexId> vertex_set = s.pending;
    vertex_set.insert(u);
    SelfContainmentResult sc = self_containment(s, vertex_set, u);
    s.trace.events.emplace_back(trace::SelfContainment{
        u, s.time, {vertex_set.begin(), vertex_set.end()}, {s.active_edges.begin(), s.active_edges.end()},
        {sc.group.begin(), sc.group.end()}, sc.assignment, sc.depth});

    if (sc.group.empty()) {
      s.pending.insert(u);
      s.pending_history.insert(u);
      s.trace.events.emplace_back(trace::PendingAdded{u, s.time});
    } else {
      if (!sc.group.count(u))
        throw InvariantViolation("served group excludes the newly saturated vertex");
      for (VertexId v : sc.group) s.pending.erase(v);

      std::vector<EdgeId> removed;
      for (EdgeId e : incident_edges(inst, sc.group))
        if (s.active_edges.erase(e)) removed.push_back(e);
      s.assignment.merge(sc.assignment);

      const std::vector<Rational> before = s.residual_demand;
      for (EdgeId e : removed)
        for (VertexId v : inst.edge(e).members) s.residual_demand[static_cast<std::size_t>(v)] -= inst.edge(e).demand;

      for (VertexId v : std::set<VertexId>(s.candidates)) {
        const auto vi = static_cast<std::size_t>(v);
        const Rational& c = inst.vertex(v).capacity;
        if (s.residual_demand[vi].is_zero()) {
          s.candidates.erase(v);
          continue;
        }
        if (before[vi] > c && s.residual_demand[vi] <= c) {
          LightSnapshot snap;
          for (EdgeId e : inst.incident(v)) {
            if (std::binary_search(removed.begin(), removed.end(), e))
              snap.removed.push_back(e);
            else if (s.active_edges.count(e))
              snap.remaining.push_back(e);
          }
          s.snapshots[vi] = snap;
          s.trace.events.emplace_back(trace::LightCrossing{v, s.time, std::move(snap)});
        }
      }

      std::vector<VertexId> stranded;
      for (VertexId v : s.pending)
        if (s.active_incident(v).empty()) stranded.push_back(v);
      s.trace.events.emplace_back(trace::GroupRemoved{s.time, {sc.group.begin(), sc.group.end()}, removed, stranded});
    }
    check_slack_consistency(s);
  }
  return s;
}

}  // namespace vchc
