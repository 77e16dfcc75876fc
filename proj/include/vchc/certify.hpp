#pragma once

// Independent verification of solver artifacts. Nothing here reads solver
// state: every check is recomputed from the instance, the assignment, the
// dual values and the event trace.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vchc/cover.hpp"

namespace vchc {

enum class CheckStatus { kPass, kFail, kVacuous };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kVacuous: return "vacuous";
  }
  return "?";
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct CertificateReport {
  std::vector<Check> checks;

  bool overall() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::kFail; });
  }
  void pass(std::string name, std::string detail = {}) {
    checks.push_back({std::move(name), CheckStatus::kPass, std::move(detail)});
  }
  void fail(std::string name, std::string detail) {
    checks.push_back({std::move(name), CheckStatus::kFail, std::move(detail)});
  }
  void vacuous(std::string name, std::string detail) {
    checks.push_back({std::move(name), CheckStatus::kVacuous, std::move(detail)});
  }
  /// Records a pass, or a fail carrying the first witness.
  void expect(std::string name, const std::vector<std::string>& witnesses) {
    if (witnesses.empty())
      pass(std::move(name));
    else
      fail(std::move(name), witnesses.front() + (witnesses.size() > 1 ? " (+" + std::to_string(witnesses.size() - 1) + " more)" : ""));
  }
  void append(const CertificateReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool passed(std::string_view name) const {
    const Check* c = find(name);
    return c && c->status == CheckStatus::kPass;
  }
};

namespace detail {

inline std::string pair_str(EdgeId e, VertexId v) {
  return "(e" + std::to_string(e) + ", v" + std::to_string(v) + ")";
}

/// Whether `group` can serve every active edge it touches, decided by the
/// supply/demand form of Hall's condition: for every subset T of those
/// edges, d(T) <= sum of multiplicity*capacity over group members in T.
inline bool hall_can_serve(const Instance& inst, const std::set<VertexId>& group, const std::set<EdgeId>& active,
                           const std::vector<std::int64_t>& multiplicity) {
  std::vector<EdgeId> edges;
  for (EdgeId e : active) {
    const Edge& edge = inst.edge(e);
    if (std::any_of(edge.members.begin(), edge.members.end(), [&](VertexId v) { return group.count(v) != 0; }))
      edges.push_back(e);
  }
  if (edges.size() > 20) return can_fully_serve(inst, group, active, multiplicity);
  const std::uint32_t subsets = 1u << edges.size();
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    Rational demand;
    std::set<VertexId> neighbours;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      const Edge& edge = inst.edge(edges[i]);
      demand += edge.demand;
      for (VertexId v : edge.members)
        if (group.count(v)) neighbours.insert(v);
    }
    Rational supply;
    for (VertexId v : neighbours)
      supply += Rational(static_cast<long>(multiplicity[static_cast<std::size_t>(v)])) * inst.vertex(v).capacity;
    if (demand > supply) return false;
  }
  return true;
}

}  // namespace detail

/// Augmented-cover conditions: coverage, x^(h)_v <= beta m_v, nonnegative
/// entries, assignments only along incidences.
inline CertificateReport check_primal(const Instance& inst, std::int64_t beta, const DemandAssignment& h) {
  CertificateReport report;
  std::vector<std::string> negative, non_incident, zero_capacity, under, over;

  std::vector<Rational> loads(inst.num_vertices());
  for (const auto& [key, amount] : h) {
    const auto [e, v] = key;
    if (e < 0 || static_cast<std::size_t>(e) >= inst.num_edges() || v < 0 ||
        static_cast<std::size_t>(v) >= inst.num_vertices()) {
      non_incident.push_back("non-incident assignment " + detail::pair_str(e, v) + ": unknown id");
      continue;
    }
    if (amount.is_negative()) negative.push_back("negative assignment " + detail::pair_str(e, v));
    if (!inst.edge(e).contains(v)) non_incident.push_back("non-incident assignment " + detail::pair_str(e, v));
    loads[static_cast<std::size_t>(v)] += amount;
  }
  for (const Edge& e : inst.edges()) {
    Rational total;
    for (VertexId v : e.members) total += h.get(e.id, v);
    if (total < e.demand)
      under.push_back("undercovered edge " + std::to_string(e.id) + ": " + total.str() + " < " + e.demand.str());
  }
  for (const Vertex& v : inst.vertices()) {
    const Rational& load = loads[static_cast<std::size_t>(v.id)];
    if (v.capacity.is_zero()) {
      if (load.is_positive()) zero_capacity.push_back("zero-capacity vertex " + std::to_string(v.id) + " receives demand");
      continue;
    }
    const std::int64_t x = (load / v.capacity).ceil();
    if (x > beta * v.multiplicity)
      over.push_back("vertex " + std::to_string(v.id) + " needs " + std::to_string(x) + " > " +
                     std::to_string(beta * v.multiplicity) + " multiplicities");
  }
  report.expect("nonnegativity", negative);
  report.expect("incidence", non_incident);
  report.expect("coverage", under);
  report.expect("zero-capacity hosting", zero_capacity);
  report.expect("multiplicity", over);
  return report;
}

/// Both dual constraint families and nonnegativity. The multiplicities do
/// not appear in any constraint, so one check covers every augmentation.
inline CertificateReport check_dual(const Instance& inst, const DualSolution& dual) {
  CertificateReport report;
  if (dual.y.size() != inst.num_edges() || dual.z.size() != inst.num_vertices() ||
      dual.eta.size() != inst.num_vertices()) {
    report.fail("dual shape", "dual vectors do not match the instance dimensions");
    return report;
  }
  std::vector<std::string> shape, negative, vertex_rows, edge_rows;
  for (const auto& [key, value] : dual.g) {
    const auto [e, v] = key;
    if (e < 0 || static_cast<std::size_t>(e) >= inst.num_edges() || !inst.edge(e).contains(v))
      shape.push_back("g defined off an incidence " + detail::pair_str(e, v));
    if (value.is_negative()) negative.push_back("g" + detail::pair_str(e, v) + " < 0");
  }
  for (std::size_t e = 0; e < dual.y.size(); ++e)
    if (dual.y[e].is_negative()) negative.push_back("y_" + std::to_string(e) + " < 0");
  for (std::size_t v = 0; v < dual.z.size(); ++v) {
    if (dual.z[v].is_negative()) negative.push_back("z_" + std::to_string(v) + " < 0");
    if (dual.eta[v].is_negative()) negative.push_back("eta_" + std::to_string(v) + " < 0");
  }
  for (const Vertex& v : inst.vertices()) {
    const auto vi = static_cast<std::size_t>(v.id);
    Rational lhs = v.capacity * dual.z[vi] - dual.eta[vi];
    for (EdgeId e : inst.incident(v.id)) lhs += inst.edge(e).demand * dual.g_at(e, v.id);
    if (lhs > v.weight)
      vertex_rows.push_back("vertex " + std::to_string(v.id) + ": " + lhs.str() + " > " + v.weight.str());
    for (EdgeId e : inst.incident(v.id))
      if (dual.y[static_cast<std::size_t>(e)] > dual.z[vi] + dual.g_at(e, v.id))
        edge_rows.push_back("y_" + std::to_string(e) + " > z_" + std::to_string(v.id) + " + g" + detail::pair_str(e, v.id));
  }
  report.expect("dual shape", shape);
  report.expect("dual nonnegativity", negative);
  report.expect("dual vertex constraints", vertex_rows);
  report.expect("dual edge constraints", edge_rows);
  return report;
}

/// sum_e d_e y_e - sum_v m_v eta_v with the multiplicities of `inst`.
inline Rational dual_objective(const Instance& inst, const DualSolution& dual) {
  Rational value;
  for (const Edge& e : inst.edges()) value += e.demand * dual.y.at(static_cast<std::size_t>(e.id));
  for (const Vertex& v : inst.vertices())
    value -= Rational(static_cast<long>(v.multiplicity)) * dual.eta.at(static_cast<std::size_t>(v.id));
  return value;
}

/// Upper bound on cost / OPT certified by the dual alone, when the dual
/// objective is positive. Otherwise the check is vacuous and an oracle is
/// needed.
inline Check ratio_bound_check(const Rational& cost, const Rational& guaranteed, const Rational& lower_bound) {
  if (!lower_bound.is_positive())
    return {"ratio (bound-certified)", CheckStatus::kVacuous, "dual lower bound " + lower_bound.str() + " <= 0; use oracle"};
  const Rational ratio = cost / lower_bound;
  if (ratio <= guaranteed)
    return {"ratio (bound-certified)", CheckStatus::kPass, "cost / dual bound = " + ratio.str() + " <= " + guaranteed.str()};
  return {"ratio (bound-certified)", CheckStatus::kVacuous,
          "cost / dual bound = " + ratio.str() + " exceeds " + guaranteed.str() + "; dual bound too weak, use oracle"};
}

inline Check ratio_oracle_check(const Rational& cost, const Rational& guaranteed, const Rational& opt) {
  if (cost <= guaranteed * opt)
    return {"ratio (oracle-certified)", CheckStatus::kPass, "cost " + cost.str() + " <= " + guaranteed.str() + " * " + opt.str()};
  return {"ratio (oracle-certified)", CheckStatus::kFail, "cost " + cost.str() + " > " + guaranteed.str() + " * " + opt.str()};
}

/// Re-verifies the structural guarantees of one augmented run from its
/// artifacts. `inst` is the original instance; multiplicities in force are
/// k * m_v. Maximality of every Self-Containment result is checked by
/// subset enumeration when the candidate set has at most
/// `max_enumeration` vertices.
inline CertificateReport audit_trace(const Instance& inst, std::int64_t k, const SolverTrace& trace,
                                     const DemandAssignment& h, const DemandAssignment& h_star, const DualSolution& dual,
                                     const std::set<VertexId>& pending_history,
                                     const std::vector<LightProfile>& profiles, std::size_t max_enumeration = 12) {
  CertificateReport report;
  const std::size_t n = inst.num_vertices();
  std::vector<std::int64_t> in_force(n);
  for (const Vertex& v : inst.vertices()) in_force[static_cast<std::size_t>(v.id)] = k * v.multiplicity;
  auto hosted = [&](VertexId v) {
    return Rational(static_cast<long>(in_force[static_cast<std::size_t>(v)])) * inst.vertex(v).capacity;
  };
  const CertificateReport dual_report = check_dual(inst, dual);
  if (dual_report.overall())
    report.pass("dual feasibility");
  else
    for (const Check& c : dual_report.checks)
      if (c.status == CheckStatus::kFail) {
        report.fail("dual feasibility", c.detail);
        break;
      }

  // Replay the event log.
  std::vector<std::string> order, provenance_issues;
  std::map<VertexId, SaturationMode> saturated;
  std::set<VertexId> pending_seen;
  DemandAssignment replayed;
  std::vector<const trace::SelfContainment*> containment_calls;
  const Rational* last_time = nullptr;
  for (const auto& ev : trace.events) {
    const Rational& t = trace::time_of(ev);
    if (last_time && t < *last_time) order.push_back("event at time " + t.str() + " after " + last_time->str());
    last_time = &t;
    if (const auto* s = std::get_if<trace::Saturation>(&ev)) {
      if (!saturated.emplace(s->vertex, s->mode).second)
        order.push_back("vertex " + std::to_string(s->vertex) + " saturated twice");
    } else if (const auto* sc = std::get_if<trace::SelfContainment>(&ev)) {
      containment_calls.push_back(sc);
      if (!sc->group.empty()) replayed.merge(sc->assignment);
    } else if (const auto* p = std::get_if<trace::PendingAdded>(&ev)) {
      pending_seen.insert(p->vertex);
    }
  }
  report.expect("event order", order);
  if (replayed != h) provenance_issues.push_back("assignment differs from the union of served-group assignments");
  report.expect("assignment provenance", provenance_issues);

  std::vector<std::string> history;
  if (pending_seen != pending_history) history.push_back("reported pending set differs from the trace");
  report.expect("pending history", history);

  // Tightness of every saturated constraint.
  std::vector<std::string> tight;
  for (const auto& [v, mode] : saturated) {
    const auto vi = static_cast<std::size_t>(v);
    Rational lhs = inst.vertex(v).capacity * dual.z.at(vi) - dual.eta.at(vi);
    for (EdgeId e : inst.incident(v)) lhs += inst.edge(e).demand * dual.g_at(e, v);
    if (lhs != inst.vertex(v).weight)
      tight.push_back("vertex " + std::to_string(v) + ": " + lhs.str() + " != w = " + inst.vertex(v).weight.str());
  }
  report.expect("saturation tightness", tight);

  // Heavy vertices (residual demand above capacity at saturation).
  std::vector<std::string> heavy_rate, eta_support, eta_bound;
  for (const auto& [v, mode] : saturated) {
    if (mode != SaturationMode::kZ) continue;
    for (EdgeId e : inst.incident(v))
      if (h.get(e, v).is_positive() && dual.z[static_cast<std::size_t>(v)] != dual.y[static_cast<std::size_t>(e)])
        heavy_rate.push_back("z_" + std::to_string(v) + " != y_" + std::to_string(e));
  }
  for (const Vertex& v : inst.vertices()) {
    const auto vi = static_cast<std::size_t>(v.id);
    if (dual.eta[vi].is_positive()) {
      const bool never_serves = !saturated.count(v.id) && hosted(v.id).is_zero();
      if (!pending_history.count(v.id) && !never_serves)
        eta_support.push_back("eta_" + std::to_string(v.id) + " > 0 outside the pending history");
    }
    if (dual.eta[vi] > v.capacity * dual.z[vi]) eta_bound.push_back("eta_" + std::to_string(v.id) + " > c z");
  }
  report.expect("heavy edge rate", heavy_rate);
  report.expect("eta support", eta_support);
  report.expect("eta bound", eta_bound);

  // Pending vertices end up fully loaded and paid at the edge rate.
  std::vector<std::string> full_load, pay_identity;
  const std::vector<Rational> loads = received_all(inst, h);
  for (VertexId v : pending_history) {
    const auto vi = static_cast<std::size_t>(v);
    const Rational m_in_force(static_cast<long>(in_force[vi]));
    if (loads[vi] != hosted(v))
      full_load.push_back("vertex " + std::to_string(v) + " received " + loads[vi].str() + " != " + hosted(v).str());
    for (EdgeId e : inst.incident(v)) {
      if (!h.get(e, v).is_positive()) continue;
      const Rational lhs = inst.vertex(v).weight * m_in_force;
      const Rational rhs = loads[vi] * dual.y[static_cast<std::size_t>(e)] - m_in_force * dual.eta[vi];
      if (lhs != rhs)
        pay_identity.push_back("vertex " + std::to_string(v) + ", edge " + std::to_string(e) + ": " + lhs.str() +
                               " != " + rhs.str());
    }
  }
  report.expect("pending received", full_load);
  report.expect("pending cost identity", pay_identity);

  // Light profiles.
  std::vector<std::string> light;
  std::map<VertexId, const LightProfile*> by_vertex;
  for (const auto& p : profiles) {
    by_vertex[p.vertex] = &p;
    const Vertex& v = inst.vertex(p.vertex);
    Rational total, paid;
    for (const auto& [e, l] : p.loads) {
      if (!inst.edge(e).contains(p.vertex)) light.push_back("profile of " + std::to_string(v.id) + " uses a foreign edge");
      if (l.is_negative() || l > inst.edge(e).demand)
        light.push_back("profile of " + std::to_string(v.id) + " exceeds d on edge " + std::to_string(e));
      total += l;
      paid += l * dual.y[static_cast<std::size_t>(e)];
    }
    for (EdgeId e : inst.incident(v.id))
      if (h.get(e, v.id) > p.at(e))
        light.push_back("profile of " + std::to_string(v.id) + " below h on edge " + std::to_string(e));
    if (total > v.capacity) light.push_back("profile of " + std::to_string(v.id) + " exceeds capacity");
    if (paid != v.weight)
      light.push_back("profile of " + std::to_string(v.id) + " pays " + paid.str() + " != " + v.weight.str());
    if (!saturated.count(v.id) || saturated.at(v.id) != SaturationMode::kG)
      light.push_back("profile for vertex " + std::to_string(v.id) + " that was not light at saturation");
  }
  report.expect("light profiles", light);

  // Self-Containment results: served groups self-serve, and nothing left
  // behind could have served itself.
  std::vector<std::string> service, maximality;
  std::size_t skipped = 0;
  for (const auto* sc : containment_calls) {
    const std::set<EdgeId> active(sc->active_edges.begin(), sc->active_edges.end());
    const std::set<VertexId> group(sc->group.begin(), sc->group.end());
    if (!group.empty()) {
      for (const auto& [key, amount] : sc->assignment)
        if (!group.count(key.second) || !active.count(key.first))
          service.push_back("assignment outside the served group at time " + sc->time.str());
      for (EdgeId e : active) {
        const Edge& edge = inst.edge(e);
        if (std::none_of(edge.members.begin(), edge.members.end(), [&](VertexId v) { return group.count(v) != 0; }))
          continue;
        Rational total;
        for (VertexId v : edge.members) total += sc->assignment.get(e, v);
        if (total != edge.demand) service.push_back("edge " + std::to_string(e) + " not fully served at time " + sc->time.str());
      }
      for (VertexId v : group) {
        Rational load;
        for (EdgeId e : inst.incident(v)) load += sc->assignment.get(e, v);
        if (load > hosted(v)) service.push_back("vertex " + std::to_string(v) + " over its in-force capacity");
      }
    }
    std::vector<VertexId> rest;
    for (VertexId v : sc->candidates)
      if (!group.count(v)) rest.push_back(v);
    if (sc->candidates.size() > max_enumeration) {
      ++skipped;
      continue;
    }
    for (std::uint32_t mask = 1; mask < (1u << rest.size()); ++mask) {
      std::set<VertexId> subset;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (mask >> i & 1u) subset.insert(rest[i]);
      if (detail::hall_can_serve(inst, subset, active, in_force)) {
        std::ostringstream msg;
        msg << "left-behind subset {";
        for (VertexId v : subset) msg << ' ' << v;
        msg << " } can serve itself at time " << sc->time;
        maximality.push_back(msg.str());
        break;
      }
    }
  }
  report.expect("self-containment service", service);
  if (maximality.empty() && skipped > 0 && skipped == containment_calls.size())
    report.vacuous("self-containment maximality", "all candidate sets larger than the enumeration limit");
  else
    report.expect("self-containment maximality", maximality);

  // Reassignment: per-edge totals preserved, pending vertices untouched,
  // receivers stay within their light profile.
  std::vector<std::string> conservation, untouched, receivers;
  for (const Edge& e : inst.edges())
    if (h.edge_total(e.id) != h_star.edge_total(e.id))
      conservation.push_back("edge " + std::to_string(e.id) + " total changed");
  std::set<std::pair<EdgeId, VertexId>> keys;
  for (const auto& [key, amount] : h) keys.insert(key);
  for (const auto& [key, amount] : h_star) keys.insert(key);
  for (const auto& [e, v] : keys) {
    const Rational before = h.get(e, v), after = h_star.get(e, v);
    if (pending_history.count(v) && before != after)
      untouched.push_back("pending vertex " + std::to_string(v) + " changed on edge " + std::to_string(e));
    if (after > before) {
      auto it = by_vertex.find(v);
      if (it == by_vertex.end() || after > it->second->at(e))
        receivers.push_back("vertex " + std::to_string(v) + " received beyond its light profile on edge " + std::to_string(e));
    }
  }
  report.expect("reassignment conservation", conservation);
  report.expect("reassignment skips pending vertices", untouched);
  report.expect("reassignment within light profiles", receivers);
  return report;
}

/// Convenience: audit a CoverResult against its instance.
inline CertificateReport audit_result(const Instance& inst, const CoverResult& r) {
  return audit_trace(inst, r.k, r.trace, r.primal_dual_assignment, r.assignment, r.dual, r.pending_history, r.profiles);
}

// ---------------------------------------------------------------------------
// LP text export (CPLEX LP format).
//
// Primal variables: x_<v>, h_<e>_<v>. Rows: cover_<e>, cap_<v>, mult_<v>,
// link_<e>_<v>. Dual variables: y_<e>, z_<v>, g_<e>_<v>, eta_<v>. Rows:
// vtx_<v>, pair_<e>_<v>. Vertices without incident edges get no rows; their
// bound x_<v> <= m_v goes to the Bounds section. All variables are
// nonnegative (the LP default).

namespace detail {

inline bool lp_exact(const Rational& r) {
  return r.has_terminating_decimal() && Rational::parse(r.decimal(60)) == r;
}

/// Exact decimal when it terminates, else rounded at 30 fractional digits.
inline std::string lp_number(const Rational& r) { return lp_exact(r) ? r.decimal(60) : r.decimal(30); }

class LpRow {
 public:
  void term(const Rational& coef, const std::string& var) {
    if (coef.is_zero()) return;
    terms_.emplace_back(coef, var);
  }
  bool exact() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return lp_exact(t.first); });
  }
  std::string render(bool exact_form) const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [coef, var] : terms_) {
      const Rational mag = coef.is_negative() ? -coef : coef;
      if (first)
        out << (coef.is_negative() ? "- " : "");
      else
        out << (coef.is_negative() ? " - " : " + ");
      out << (exact_form ? mag.str() : lp_number(mag)) << ' ' << var;
      first = false;
    }
    return out.str();
  }
  bool empty() const { return terms_.empty(); }

 private:
  std::vector<std::pair<Rational, std::string>> terms_;
};

inline void emit_row(std::ostringstream& out, const std::string& name, const LpRow& row, const std::string& sense,
                     const Rational& rhs) {
  if (!row.exact() || !lp_exact(rhs)) out << "\\ exact " << name << ": " << row.render(true) << ' ' << sense << ' ' << rhs.str() << "\n";
  out << ' ' << name << ": " << (row.empty() ? "0 x_0" : row.render(false)) << ' ' << sense << ' ' << lp_number(rhs) << "\n";
}

inline std::string var(const char* prefix, int a) { return std::string(prefix) + "_" + std::to_string(a); }
inline std::string var(const char* prefix, int a, int b) {
  return std::string(prefix) + "_" + std::to_string(a) + "_" + std::to_string(b);
}

}  // namespace detail

/// Natural LP relaxation of the instance, as CPLEX LP text.
inline std::string export_lp(const Instance& inst) {
  std::ostringstream out;
  out << "\\ VC-HC LP relaxation: " << inst.num_vertices() << " vertices, " << inst.num_edges() << " edges\n";
  out << "Minimize\n";
  detail::LpRow objective;
  for (const Vertex& v : inst.vertices()) objective.term(v.weight, detail::var("x", v.id));
  if (!objective.exact()) out << "\\ exact obj: " << objective.render(true) << "\n";
  out << " obj: " << (objective.empty() ? (inst.num_vertices() ? "0 x_0" : "") : objective.render(false)) << "\n";
  out << "Subject To\n";
  for (const Edge& e : inst.edges()) {
    detail::LpRow row;
    for (VertexId v : e.members) row.term(1, detail::var("h", e.id, v));
    detail::emit_row(out, detail::var("cover", e.id), row, ">=", e.demand);
  }
  for (const Vertex& v : inst.vertices()) {
    if (inst.incident(v.id).empty()) continue;
    detail::LpRow row;
    row.term(v.capacity, detail::var("x", v.id));
    for (EdgeId e : inst.incident(v.id)) row.term(-1, detail::var("h", e, v.id));
    detail::emit_row(out, detail::var("cap", v.id), row, ">=", 0);
  }
  for (const Vertex& v : inst.vertices()) {
    if (inst.incident(v.id).empty()) continue;
    detail::LpRow row;
    row.term(1, detail::var("x", v.id));
    detail::emit_row(out, detail::var("mult", v.id), row, "<=", Rational(static_cast<long>(v.multiplicity)));
  }
  for (const Edge& e : inst.edges())
    for (VertexId v : e.members) {
      detail::LpRow row;
      row.term(e.demand, detail::var("x", v));
      row.term(-1, detail::var("h", e.id, v));
      detail::emit_row(out, detail::var("link", e.id, v), row, ">=", 0);
    }
  out << "Bounds\n";
  for (const Vertex& v : inst.vertices())
    if (inst.incident(v.id).empty()) out << ' ' << detail::var("x", v.id) << " <= " << v.multiplicity << "\n";
  out << "End\n";
  return out.str();
}

/// Dual of the LP relaxation, as CPLEX LP text.
inline std::string export_dual_lp(const Instance& inst) {
  std::ostringstream out;
  out << "\\ VC-HC dual LP: " << inst.num_vertices() << " vertices, " << inst.num_edges() << " edges\n";
  out << "Maximize\n";
  detail::LpRow objective;
  for (const Edge& e : inst.edges()) objective.term(e.demand, detail::var("y", e.id));
  for (const Vertex& v : inst.vertices())
    if (!inst.incident(v.id).empty()) objective.term(-Rational(static_cast<long>(v.multiplicity)), detail::var("eta", v.id));
  if (!objective.exact()) out << "\\ exact obj: " << objective.render(true) << "\n";
  out << " obj: " << objective.render(false) << "\n";
  out << "Subject To\n";
  for (const Vertex& v : inst.vertices()) {
    if (inst.incident(v.id).empty()) continue;
    detail::LpRow row;
    row.term(v.capacity, detail::var("z", v.id));
    for (EdgeId e : inst.incident(v.id)) row.term(inst.edge(e).demand, detail::var("g", e, v.id));
    row.term(-1, detail::var("eta", v.id));
    detail::emit_row(out, detail::var("vtx", v.id), row, "<=", v.weight);
  }
  for (const Edge& e : inst.edges())
    for (VertexId v : e.members) {
      detail::LpRow row;
      row.term(1, detail::var("y", e.id));
      row.term(-1, detail::var("z", v));
      row.term(-1, detail::var("g", e.id, v));
      detail::emit_row(out, detail::var("pair", e.id, v), row, "<=", 0);
    }
  out << "End\n";
  return out.str();
}

}  // namespace vchc
