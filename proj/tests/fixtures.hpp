#pragma once

// Shared instances and brute-force reference computations for the tests.

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vchc/vchc.hpp"

namespace fixtures {

using namespace vchc;

inline Rational R(long p, long q = 1) { return Rational(p, q); }

inline Vertex V(VertexId id, Rational w, Rational c, std::int64_t m) { return {id, std::move(w), std::move(c), m}; }
inline Edge E(EdgeId id, std::vector<VertexId> members, Rational d) { return {id, std::move(members), std::move(d)}; }

// a = 0, b = 1; a alone covers the edge.
inline Instance i1() { return Instance({V(0, R(1), R(2), 1), V(1, R(10), R(2), 1)}, {E(0, {0, 1}, R(2))}); }

// e0 = {a}, e1 = {a, b}; optimum buys both vertices once.
inline Instance i2() {
  return Instance({V(0, R(1), R(1), 1), V(1, R(3), R(2), 1)}, {E(0, {0}, R(1)), E(1, {0, 1}, R(2))});
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& name) { return std::string(VCHC_DATA_DIR) + "/" + name; }

/// Max-flow value as the minimum s-t cut over all node bipartitions.
inline Rational brute_min_cut(const FlowNetwork& net, int zeroed_arc = -1) {
  const int inner = net.num_nodes() - 2;
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1u << inner); ++mask) {
    auto source_side = [&](int node) {
      if (node == FlowNetwork::kSource) return true;
      if (node == FlowNetwork::kSink) return false;
      return (mask >> (node - 2) & 1u) != 0;
    };
    Rational cut;
    for (int a = 0; a < static_cast<int>(net.arcs.size()); ++a) {
      const FlowArc& arc = net.arcs[static_cast<std::size_t>(a)];
      if (a == zeroed_arc) continue;
      if (source_side(arc.from) && !source_side(arc.to)) cut += arc.capacity;
    }
    if (!best || cut < *best) best = cut;
  }
  return *best;
}

/// Largest self-serving subset by enumeration: the union of all subsets of
/// `candidates` that can serve every active edge they touch.
inline std::set<VertexId> brute_self_containing(const Instance& inst, const std::vector<VertexId>& candidates,
                                                const std::set<EdgeId>& active) {
  const auto mult = multiplicity_vector(inst);
  std::set<VertexId> out;
  for (std::uint32_t mask = 1; mask < (1u << candidates.size()); ++mask) {
    std::set<VertexId> subset;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (mask >> i & 1u) subset.insert(candidates[i]);
    if (detail::hall_can_serve(inst, subset, active, mult)) out.insert(subset.begin(), subset.end());
  }
  return out;
}

}  // namespace fixtures
