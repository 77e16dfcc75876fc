#pragma once

// Instance data model for capacitated vertex cover with hard capacities on
// hypergraphs: edges carry demands, vertices carry a weight, a capacity and
// an available multiplicity.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vchc/rational.hpp"

namespace vchc {

using VertexId = int;
using EdgeId = int;

struct Vertex {
  VertexId id = 0;
  Rational weight;
  Rational capacity;
  std::int64_t multiplicity = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  EdgeId id = 0;
  std::vector<VertexId> members;  // sorted, duplicate-free
  Rational demand;

  bool contains(VertexId v) const { return std::binary_search(members.begin(), members.end(), v); }

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Severity { kWarning, kError };

struct ValidationIssue {
  Severity severity = Severity::kError;
  std::string message;
  std::string entity;  // e.g. "vertex 3", "edge 0", or empty for global issues
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const {
    return std::none_of(issues.begin(), issues.end(),
                        [](const ValidationIssue& i) { return i.severity == Severity::kError; });
  }
  void error(std::string message, std::string entity = {}) {
    issues.push_back({Severity::kError, std::move(message), std::move(entity)});
  }
  void warn(std::string message, std::string entity = {}) {
    issues.push_back({Severity::kWarning, std::move(message), std::move(entity)});
  }
  std::string first_error() const {
    for (const auto& i : issues)
      if (i.severity == Severity::kError) return i.entity.empty() ? i.message : i.entity + ": " + i.message;
    return {};
  }
};

/// Checks ids, memberships and signs. Vertex i must carry id i, likewise
/// for edges.
inline ValidationReport validate(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges) {
  ValidationReport report;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex& v = vertices[i];
    const std::string who = "vertex " + std::to_string(v.id);
    if (v.id != static_cast<VertexId>(i)) report.error("vertex ids must be 0..|V|-1 in order", who);
    if (v.weight.is_negative()) report.error("negative weight", who);
    if (v.capacity.is_negative()) report.error("negative capacity", who);
    if (v.multiplicity < 0) report.error("negative multiplicity", who);
    if (v.capacity.is_zero() || v.multiplicity == 0) report.warn("vertex can never receive demand", who);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const std::string who = "edge " + std::to_string(e.id);
    if (e.id != static_cast<EdgeId>(i)) report.error("edge ids must be 0..|E|-1 in order", who);
    if (e.demand.is_negative()) report.error("negative demand", who);
    if (e.members.empty()) report.error("edge has no vertices", who);
    for (std::size_t j = 0; j < e.members.size(); ++j) {
      const VertexId v = e.members[j];
      if (v < 0 || static_cast<std::size_t>(v) >= vertices.size())
        report.error("unknown vertex " + std::to_string(v), who);
      if (j > 0 && e.members[j - 1] >= v) report.error("members must be sorted and duplicate-free", who);
    }
    if (e.demand.is_zero()) report.warn("zero demand; vacuously covered", who);
  }
  if (edges.empty()) report.warn("instance has no edges; f = 0");
  return report;
}

/// Immutable hypergraph instance with precomputed incidence lists.
class Instance {
 public:
  Instance() = default;
  Instance(std::vector<Vertex> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (auto& e : edges_) std::sort(e.members.begin(), e.members.end());
    if (auto report = validate(vertices_, edges_); !report.ok())
      throw std::invalid_argument("invalid instance: " + report.first_error());
    incidence_.assign(vertices_.size(), {});
    for (const Edge& e : edges_)
      for (VertexId v : e.members) incidence_[static_cast<std::size_t>(v)].push_back(e.id);
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(VertexId v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  /// E[v], ascending edge ids.
  const std::vector<EdgeId>& incident(VertexId v) const { return incidence_.at(static_cast<std::size_t>(v)); }

  Rational total_demand() const {
    Rational sum;
    for (const Edge& e : edges_) sum += e.demand;
    return sum;
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Edges incident to v.
inline std::set<EdgeId> incident_edges(const Instance& inst, VertexId v) {
  const auto& inc = inst.incident(v);
  return {inc.begin(), inc.end()};
}

/// E[A]: union of the incident sets of the vertices in A.
inline std::set<EdgeId> incident_edges(const Instance& inst, const std::set<VertexId>& vertices) {
  std::set<EdgeId> out;
  for (VertexId v : vertices) {
    const auto& inc = inst.incident(v);
    out.insert(inc.begin(), inc.end());
  }
  return out;
}

/// f = max |e|; 0 for an edgeless instance.
inline int max_edge_size(const Instance& inst) {
  std::size_t f = 0;
  for (const Edge& e : inst.edges()) f = std::max(f, e.members.size());
  return static_cast<int>(f);
}

/// Edge size used in approximation-ratio formulas; the analysis assumes f >= 2.
inline int ratio_edge_size(const Instance& inst) { return std::max(max_edge_size(inst), 2); }

/// Copy of `inst` with every multiplicity multiplied by k.
inline Instance augment_multiplicities(const Instance& inst, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("augmentation factor must be >= 1");
  std::vector<Vertex> vertices = inst.vertices();
  for (Vertex& v : vertices) v.multiplicity *= k;
  return Instance(std::move(vertices), inst.edges());
}

/// (1 + 1/(k-1)) * (max(f,2) - 1).
inline Rational guaranteed_ratio(std::int64_t k, int f) {
  if (k < 2) throw std::invalid_argument("ratio guarantee needs k >= 2");
  const long fe = std::max(f, 2);
  return (Rational(1) + Rational(1, static_cast<long>(k - 1))) * Rational(fe - 1);
}

}  // namespace vchc
