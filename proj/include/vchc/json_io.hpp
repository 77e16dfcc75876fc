#pragma once

// JSON forms of solver artifacts. Rationals are always strings in canonical
// "p" or "p/q" form; fields ending in "_approx" carry a 6-significant-digit
// decimal for human readers and are ignored on input.

#include <sstream>
#include <string>
#include <vector>

#include "vchc/certify.hpp"
#include "vchc/instance_json.hpp"
#include "vchc/oracle.hpp"

namespace vchc {

namespace detail {

inline Rational rat(const Json& j) { return Rational::parse(j.get<std::string>()); }

inline std::vector<Rational> rat_vector(const Json& j) {
  std::vector<Rational> out;
  for (const auto& item : j) out.push_back(rat(item));
  return out;
}

inline Json str_vector(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

}  // namespace detail

inline Json assignment_to_json(const DemandAssignment& h) {
  Json out = Json::array();
  for (const auto& [key, amount] : h) out.push_back({{"edge", key.first}, {"vertex", key.second}, {"amount", amount.str()}});
  return out;
}

inline DemandAssignment assignment_from_json(const Json& j) {
  DemandAssignment h;
  for (const auto& item : j) h.add(item.at("edge").get<int>(), item.at("vertex").get<int>(), detail::rat(item.at("amount")));
  return h;
}

inline Json dual_to_json(const DualSolution& d) {
  Json g = Json::array();
  for (const auto& [key, value] : d.g) g.push_back({{"edge", key.first}, {"vertex", key.second}, {"value", value.str()}});
  return {{"y", detail::str_vector(d.y)}, {"z", detail::str_vector(d.z)}, {"eta", detail::str_vector(d.eta)}, {"g", g}};
}

inline DualSolution dual_from_json(const Json& j) {
  DualSolution d;
  d.y = detail::rat_vector(j.at("y"));
  d.z = detail::rat_vector(j.at("z"));
  d.eta = detail::rat_vector(j.at("eta"));
  for (const auto& item : j.at("g"))
    d.g[{item.at("edge").get<int>(), item.at("vertex").get<int>()}] = detail::rat(item.at("value"));
  return d;
}

// One JSON object per event; "type" is one of saturation, self_containment,
// pending_added, group_removed, light_crossing.
inline Json event_to_json(const trace::Event& ev) {
  return std::visit(
      [](const auto& e) -> Json {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, trace::Saturation>) {
          return {{"type", "saturation"}, {"time", e.time.str()}, {"vertex", e.vertex}, {"mode", to_string(e.mode)}};
        } else if constexpr (std::is_same_v<T, trace::SelfContainment>) {
          return {{"type", "self_containment"},     {"time", e.time.str()},
                  {"trigger", e.trigger},           {"candidates", e.candidates},
                  {"active_edges", e.active_edges}, {"group", e.group},
                  {"depth", e.depth},               {"assignment", assignment_to_json(e.assignment)}};
        } else if constexpr (std::is_same_v<T, trace::PendingAdded>) {
          return {{"type", "pending_added"}, {"time", e.time.str()}, {"vertex", e.vertex}};
        } else if constexpr (std::is_same_v<T, trace::GroupRemoved>) {
          return {{"type", "group_removed"}, {"time", e.time.str()}, {"group", e.group},
                  {"removed_edges", e.removed_edges}, {"stranded", e.stranded}};
        } else {
          return {{"type", "light_crossing"}, {"time", e.time.str()}, {"vertex", e.vertex},
                  {"removed", e.snapshot.removed}, {"remaining", e.snapshot.remaining}};
        }
      },
      ev);
}

inline trace::Event event_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  const Rational time = detail::rat(j.at("time"));
  if (type == "saturation")
    return trace::Saturation{j.at("vertex").get<int>(), time,
                             j.at("mode").get<std::string>() == "z" ? SaturationMode::kZ : SaturationMode::kG};
  if (type == "self_containment")
    return trace::SelfContainment{j.at("trigger").get<int>(),
                                  time,
                                  j.at("candidates").get<std::vector<VertexId>>(),
                                  j.at("active_edges").get<std::vector<EdgeId>>(),
                                  j.at("group").get<std::vector<VertexId>>(),
                                  assignment_from_json(j.at("assignment")),
                                  j.at("depth").get<int>()};
  if (type == "pending_added") return trace::PendingAdded{j.at("vertex").get<int>(), time};
  if (type == "group_removed")
    return trace::GroupRemoved{time, j.at("group").get<std::vector<VertexId>>(),
                               j.at("removed_edges").get<std::vector<EdgeId>>(),
                               j.at("stranded").get<std::vector<VertexId>>()};
  if (type == "light_crossing")
    return trace::LightCrossing{j.at("vertex").get<int>(), time,
                                {j.at("removed").get<std::vector<EdgeId>>(), j.at("remaining").get<std::vector<EdgeId>>()}};
  throw ParseError("/type", "unknown trace event '" + type + "'");
}

/// Event log, one compact JSON object per line.
inline std::string trace_to_jsonl(const SolverTrace& t) {
  std::string out;
  for (const auto& ev : t.events) out += event_to_json(ev).dump() + "\n";
  return out;
}

inline SolverTrace trace_from_jsonl(const std::string& text) {
  SolverTrace t;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) t.events.push_back(event_from_json(Json::parse(line)));
  return t;
}

inline Json report_to_json(const CertificateReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return {{"overall", r.overall()}, {"checks", checks}};
}

inline Json profile_to_json(const LightProfile& p) {
  Json loads = Json::array();
  for (const auto& [e, amount] : p.loads) loads.push_back({{"edge", e}, {"amount", amount.str()}});
  return {{"vertex", p.vertex}, {"loads", loads}};
}

inline LightProfile profile_from_json(const Json& j) {
  LightProfile p;
  p.vertex = j.at("vertex").get<int>();
  for (const auto& item : j.at("loads")) p.loads[item.at("edge").get<int>()] = detail::rat(item.at("amount"));
  return p;
}

inline Json move_to_json(const ReassignmentMove& m) {
  return {{"edge", m.edge}, {"donor", m.donor}, {"receiver", m.receiver}, {"amount", m.amount.str()}};
}

/// CoverResult as JSON. With `with_trace`, the reassignment move log and the
/// full event trace are included so the result can be audited offline.
inline Json cover_to_json(const CoverResult& r, bool with_trace) {
  Json profiles = Json::array();
  for (const auto& p : r.profiles) profiles.push_back(profile_to_json(p));
  Json out{{"k", r.k},
           {"f", r.f},
           {"cost", r.cost.str()},
           {"cost_approx", r.cost.approx()},
           {"dual_lower_bound", r.dual_lower_bound.str()},
           {"dual_lower_bound_approx", r.dual_lower_bound.approx()},
           {"guaranteed_ratio", r.guaranteed_ratio.str()},
           {"guaranteed_ratio_approx", r.guaranteed_ratio.approx()},
           {"multiplicities", r.multiplicities},
           {"assignment", assignment_to_json(r.assignment)},
           {"primal_dual_assignment", assignment_to_json(r.primal_dual_assignment)},
           {"pending_history", std::vector<VertexId>(r.pending_history.begin(), r.pending_history.end())},
           {"light_profiles", profiles},
           {"dual", dual_to_json(r.dual)}};
  if (with_trace) {
    Json moves = Json::array();
    for (const auto& m : r.moves) moves.push_back(move_to_json(m));
    out["moves"] = moves;
    Json events = Json::array();
    for (const auto& ev : r.trace.events) events.push_back(event_to_json(ev));
    out["trace"] = events;
  }
  return out;
}

inline CoverResult cover_from_json(const Json& j) {
  CoverResult r;
  r.k = j.at("k").get<std::int64_t>();
  r.f = j.at("f").get<int>();
  r.cost = detail::rat(j.at("cost"));
  r.dual_lower_bound = detail::rat(j.at("dual_lower_bound"));
  r.guaranteed_ratio = detail::rat(j.at("guaranteed_ratio"));
  r.multiplicities = j.at("multiplicities").get<std::vector<std::int64_t>>();
  r.assignment = assignment_from_json(j.at("assignment"));
  r.primal_dual_assignment = assignment_from_json(j.at("primal_dual_assignment"));
  const auto vs = j.at("pending_history").get<std::vector<VertexId>>();
  r.pending_history = {vs.begin(), vs.end()};
  for (const auto& p : j.at("light_profiles")) r.profiles.push_back(profile_from_json(p));
  r.dual = dual_from_json(j.at("dual"));
  if (j.contains("moves"))
    for (const auto& m : j.at("moves"))
      r.moves.push_back({m.at("edge").get<int>(), m.at("donor").get<int>(), m.at("receiver").get<int>(), detail::rat(m.at("amount"))});
  if (j.contains("trace"))
    for (const auto& ev : j.at("trace")) r.trace.events.push_back(event_from_json(ev));
  return r;
}

inline Json oracle_to_json(const OracleResult& o) {
  Json out{{"feasible", o.feasible}, {"nodes", o.nodes}};
  if (o.feasible) {
    out["opt"] = o.opt_cost.str();
    out["opt_approx"] = o.opt_cost.approx();
    out["witness_x"] = o.witness_x;
    out["witness_assignment"] = assignment_to_json(o.witness_h);
  }
  return out;
}

}  // namespace vchc
