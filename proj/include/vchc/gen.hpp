#pragma once

// Deterministic instance generators.
//
// Randomness comes from SplitMix64 (Steele, Lea, Flood 2014):
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
// Integers in [lo, hi] are drawn by rejection: r = next() until
// r < 2^64 - (2^64 mod span), then lo + r mod span. Every draw below happens
// in a fixed order, so (params, seed) fully determines the instance.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vchc/feasibility.hpp"

namespace vchc {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("empty integer range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(next());
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
    std::uint64_t r;
    do r = next();
    while (r > limit);
    return lo + static_cast<long>(r % span);
  }

 private:
  std::uint64_t state_;
};

struct IntRange {
  long lo = 1;
  long hi = 1;
};

/// Rationals p/q with q drawn from [1, max_denominator] and p chosen so that
/// lo <= p/q <= hi.
struct RationalRange {
  Rational lo{1};
  Rational hi{1};
  long max_denominator = 1;
};

struct GenParams {
  int n = 5;
  int m = 6;
  int f = 3;
  RationalRange demand{Rational(1), Rational(4), 4};
  RationalRange capacity{Rational(1), Rational(4), 4};
  RationalRange weight{Rational(1), Rational(10), 1};
  IntRange multiplicity{1, 2};
  std::uint64_t seed = 1;
  bool ensure_feasible = true;
};

inline Rational sample(SplitMix64& rng, const RationalRange& range) {
  const long q = rng.uniform(1, std::max(1L, range.max_denominator));
  const long p_lo = (range.lo * Rational(q)).ceil();
  const long p_hi = -((-range.hi * Rational(q)).ceil());
  if (p_lo > p_hi) return range.lo;
  return Rational(rng.uniform(p_lo, p_hi), q);
}

namespace detail {

inline void check_params(const GenParams& p) {
  if (p.n < 0 || p.m < 0) throw std::invalid_argument("vertex and edge counts must be nonnegative");
  if (p.m > 0 && (p.n < 1 || p.f < 1 || p.f > p.n)) throw std::invalid_argument("need 1 <= f <= n");
  for (const RationalRange* r : {&p.demand, &p.capacity, &p.weight})
    if (r->lo > r->hi || r->lo.is_negative() || r->max_denominator < 1)
      throw std::invalid_argument("bad rational range");
  if (p.multiplicity.lo > p.multiplicity.hi || p.multiplicity.lo < 0) throw std::invalid_argument("bad multiplicity range");
}

inline std::vector<VertexId> sample_members(SplitMix64& rng, int n, int size) {
  std::vector<VertexId> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < size; ++i) {
    const long j = rng.uniform(i, n - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(size));
  std::sort(pool.begin(), pool.end());
  return pool;
}

/// Raises multiplicities one unit at a time, cycling through vertices that
/// can host demand, until the instance is feasible.
inline Instance raise_until_feasible(std::vector<Vertex> vertices, const std::vector<Edge>& edges) {
  const Instance probe(vertices, edges);
  std::vector<VertexId> useful;
  for (const Vertex& v : vertices) {
    bool touches = false;
    for (EdgeId e : probe.incident(v.id)) touches = touches || probe.edge(e).demand.is_positive();
    if (touches && v.capacity.is_positive()) useful.push_back(v.id);
  }
  Instance current(vertices, edges);
  std::size_t next = 0;
  while (!is_feasible(current)) {
    if (useful.empty()) throw std::runtime_error("cannot make instance feasible");
    vertices[static_cast<std::size_t>(useful[next])].multiplicity += 1;
    next = (next + 1) % useful.size();
    current = Instance(vertices, edges);
  }
  return current;
}

}  // namespace detail

/// Random instance: edge sizes uniform in [1, f], members uniform, numbers
/// drawn from the ranges. With ensure_feasible, an edge whose members all
/// have zero capacity gets their capacities redrawn (bounded retries), then
/// multiplicities are raised round-robin until the instance is feasible.
inline Instance gen_random(const GenParams& params) {
  detail::check_params(params);
  SplitMix64 rng(params.seed);
  std::vector<Vertex> vertices;
  for (int i = 0; i < params.n; ++i) {
    Vertex v;
    v.id = i;
    v.weight = sample(rng, params.weight);
    v.capacity = sample(rng, params.capacity);
    v.multiplicity = rng.uniform(params.multiplicity.lo, params.multiplicity.hi);
    vertices.push_back(std::move(v));
  }
  std::vector<Edge> edges;
  for (int j = 0; j < params.m; ++j) {
    Edge e;
    e.id = j;
    const int size = static_cast<int>(rng.uniform(1, params.f));
    e.members = detail::sample_members(rng, params.n, size);
    e.demand = sample(rng, params.demand);
    edges.push_back(std::move(e));
  }
  if (!params.ensure_feasible) return Instance(std::move(vertices), std::move(edges));

  constexpr int kRetries = 16;
  for (const Edge& e : edges) {
    if (!e.demand.is_positive()) continue;
    int attempt = 0;
    auto dead = [&] {
      return std::all_of(e.members.begin(), e.members.end(),
                         [&](VertexId v) { return vertices[static_cast<std::size_t>(v)].capacity.is_zero(); });
    };
    while (dead()) {
      if (++attempt > kRetries) throw std::runtime_error("edge " + std::to_string(e.id) + " has no usable capacity");
      for (VertexId v : e.members) vertices[static_cast<std::size_t>(v)].capacity = sample(rng, params.capacity);
    }
  }
  return detail::raise_until_feasible(std::move(vertices), edges);
}

/// Structured families:
///   star        hub 0 in every edge, cheap and too small to serve alone
///   tight       total demand equals total available capacity
///   heavy_light a forced heavy vertex, a forced light vertex, plus a
///               random mix of both kinds
inline Instance gen_family(const std::string& name, int size, std::uint64_t seed) {
  if (size < 1) throw std::invalid_argument("family size must be >= 1");
  SplitMix64 rng(seed);
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  auto add_vertex = [&](Rational w, Rational c, long m) {
    vertices.push_back({static_cast<VertexId>(vertices.size()), std::move(w), std::move(c), m});
  };
  auto add_edge = [&](std::vector<VertexId> members, Rational d) {
    std::sort(members.begin(), members.end());
    edges.push_back({static_cast<EdgeId>(edges.size()), std::move(members), std::move(d)});
  };

  if (name == "star") {
    add_vertex(Rational(1), Rational(1), 1);
    for (int i = 1; i <= size; ++i) {
      const Rational d = sample(rng, {Rational(2), Rational(3), 2});
      add_vertex(sample(rng, {Rational(5), Rational(10), 1}), sample(rng, {Rational(3), Rational(4), 2}), 1);
      add_edge({0, i}, d);
    }
    return Instance(std::move(vertices), std::move(edges));
  }
  if (name == "tight") {
    for (int i = 0; i < size; ++i)
      add_vertex(sample(rng, {Rational(1), Rational(10), 1}), sample(rng, {Rational(1), Rational(3), 2}), rng.uniform(1, 2));
    for (int i = 0; i < size; ++i) {
      const int extra = static_cast<int>(rng.uniform(0, std::min(2, size - 1)));
      std::vector<VertexId> members{i};
      for (VertexId v : detail::sample_members(rng, size, extra + 1))
        if (v != i && static_cast<int>(members.size()) <= extra) members.push_back(v);
      const Vertex& owner = vertices[static_cast<std::size_t>(i)];
      add_edge(members, owner.capacity * Rational(static_cast<long>(owner.multiplicity)));
    }
    return Instance(std::move(vertices), std::move(edges));
  }
  if (name == "heavy_light") {
    add_vertex(Rational(1), Rational(1), 3);
    add_edge({0}, Rational(3));
    add_vertex(Rational(2), Rational(5), 1);
    add_edge({1}, Rational(1));
    for (int i = 0; i < size; ++i) {
      if (i % 2 == 0)
        add_vertex(sample(rng, {Rational(1), Rational(4), 1}), Rational(1), 2);
      else
        add_vertex(sample(rng, {Rational(2), Rational(8), 1}), Rational(6), 1);
    }
    const int extra_vertices = size;
    for (int j = 0; j < size + 1 && extra_vertices > 0; ++j) {
      const int width = static_cast<int>(rng.uniform(1, std::min(3, extra_vertices)));
      std::vector<VertexId> members;
      for (VertexId v : detail::sample_members(rng, extra_vertices, width)) members.push_back(v + 2);
      add_edge(members, sample(rng, {Rational(1), Rational(2), 2}));
    }
    return detail::raise_until_feasible(std::move(vertices), edges);
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace vchc
