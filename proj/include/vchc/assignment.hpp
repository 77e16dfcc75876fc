#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "vchc/instance.hpp"

namespace vchc {

/// Sparse demand assignment h: (edge, vertex) -> amount. Zero entries are
/// never stored, so two assignments compare equal iff they agree everywhere.
class DemandAssignment {
 public:
  using Key = std::pair<EdgeId, VertexId>;
  using Map = std::map<Key, Rational>;

  Rational get(EdgeId e, VertexId v) const {
    auto it = entries_.find({e, v});
    return it == entries_.end() ? Rational() : it->second;
  }

  void set(EdgeId e, VertexId v, const Rational& amount) {
    if (amount.is_zero())
      entries_.erase({e, v});
    else
      entries_[{e, v}] = amount;
  }

  void add(EdgeId e, VertexId v, const Rational& amount) { set(e, v, get(e, v) + amount); }

  /// Adds every entry of `other` into this assignment.
  void merge(const DemandAssignment& other) {
    for (const auto& [key, amount] : other.entries_) add(key.first, key.second, amount);
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }
  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }

  /// Sum over v of h(e, v).
  Rational edge_total(EdgeId e) const {
    Rational sum;
    for (auto it = entries_.lower_bound({e, INT32_MIN}); it != entries_.end() && it->first.first == e; ++it)
      sum += it->second;
    return sum;
  }

  friend bool operator==(const DemandAssignment&, const DemandAssignment&) = default;

 private:
  Map entries_;
};

/// Received_h(v): total demand assigned to v.
inline Rational received(const DemandAssignment& h, VertexId v) {
  Rational sum;
  for (const auto& [key, amount] : h)
    if (key.second == v) sum += amount;
  return sum;
}

/// Received_h(v) for every vertex of `inst`.
inline std::vector<Rational> received_all(const Instance& inst, const DemandAssignment& h) {
  std::vector<Rational> out(inst.num_vertices());
  for (const auto& [key, amount] : h) out.at(static_cast<std::size_t>(key.second)) += amount;
  return out;
}

/// Multiplicity needed to host `load` units at capacity c: ceil(load / c),
/// and 0 when c = 0 (such a vertex cannot receive demand at all).
inline std::int64_t multiplicity_for(const Rational& load, const Rational& capacity) {
  if (capacity.is_zero()) return 0;
  return (load / capacity).ceil();
}

/// x^(h) for every vertex.
inline std::vector<std::int64_t> multiplicities(const Instance& inst, const DemandAssignment& h) {
  std::vector<Rational> loads = received_all(inst, h);
  std::vector<std::int64_t> x(inst.num_vertices());
  for (std::size_t v = 0; v < x.size(); ++v) x[v] = multiplicity_for(loads[v], inst.vertices()[v].capacity);
  return x;
}

/// w(h) = sum_v w_v * x^(h)_v.
inline Rational cost(const Instance& inst, const DemandAssignment& h) {
  Rational total;
  const auto x = multiplicities(inst, h);
  for (std::size_t v = 0; v < x.size(); ++v) total += inst.vertices()[v].weight * Rational(static_cast<long>(x[v]));
  return total;
}

}  // namespace vchc
