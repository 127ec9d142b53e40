#pragma once

// Seeded graph families. All randomness comes from Xoshiro256, so a GenSpec names one graph
// on every platform.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "konig/errors.hpp"
#include "konig/graph.hpp"
#include "konig/random.hpp"

namespace konig {

enum class GenKind { random, planted_bipartite, planted_odd_cycle, forest };

inline std::string_view to_string(GenKind k) {
  switch (k) {
    case GenKind::random: return "random";
    case GenKind::planted_bipartite: return "planted-bipartite";
    case GenKind::planted_odd_cycle: return "planted-odd-cycle";
    case GenKind::forest: return "forest";
  }
  return "?";
}

inline std::optional<GenKind> parse_gen_kind(std::string_view name) {
  for (const auto k : {GenKind::random, GenKind::planted_bipartite, GenKind::planted_odd_cycle,
                       GenKind::forest}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

struct GenSpec {
  GenKind kind = GenKind::random;
  std::size_t n = 0;      // random, forest
  std::size_t left = 0;   // planted kinds
  std::size_t right = 0;  // planted kinds
  // At most one of m / p. Neither means no sampled edges.
  std::optional<std::size_t> m;
  std::optional<double> p;
  std::size_t cycle_len = 3;    // planted-odd-cycle
  bool allow_loops = false;     // random
  bool allow_multi = false;     // random
  double isolate_p = 0.1;       // forest: chance a new vertex starts its own tree
  std::uint64_t seed = 0;
};

inline void validate(const GenSpec& spec) {
  if (spec.m && spec.p) throw InputError("give either an edge count or an edge probability, not both");
  if (spec.p && !(*spec.p >= 0.0 && *spec.p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  if (!(spec.isolate_p >= 0.0 && spec.isolate_p <= 1.0)) {
    throw InputError("isolation probability must lie in [0, 1]");
  }
  if (spec.kind == GenKind::planted_odd_cycle && (spec.cycle_len < 3 || spec.cycle_len % 2 == 0)) {
    throw InputError("cycle length must be odd and at least 3, got " +
                     std::to_string(spec.cycle_len));
  }
  if (spec.kind != GenKind::random && (spec.allow_loops || spec.allow_multi)) {
    throw InputError("loops and multi-edges are only available for the random family");
  }
}

namespace detail {

inline std::uint64_t pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

inline void planted_edges(std::size_t left, std::size_t right, const GenSpec& spec,
                          Xoshiro256& rng, std::vector<EndpointPair>& out) {
  if (spec.p) {
    for (std::size_t u = 0; u < left; ++u) {
      for (std::size_t v = left; v < left + right; ++v) {
        if (rng.bernoulli(*spec.p)) out.emplace_back(u, v);
      }
    }
    return;
  }
  const auto m = spec.m.value_or(0);
  if (m > left * right) {
    throw InputError("cannot place " + std::to_string(m) + " distinct edges across sides of size " +
                     std::to_string(left) + " and " + std::to_string(right));
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m);
  while (out.size() < m) {
    const auto u = static_cast<VertexId>(rng.below(left));
    const auto v = static_cast<VertexId>(left + rng.below(right));
    if (seen.insert(pair_key(u, v)).second) out.emplace_back(u, v);
  }
}

}  // namespace detail

inline Graph gen_random(const GenSpec& spec) {
  validate(spec);
  if (spec.kind != GenKind::random) throw InputError("gen_random needs kind random");
  const auto n = spec.n;
  Xoshiro256 rng(spec.seed);
  std::vector<EndpointPair> pairs;

  if (spec.p) {
    for (std::size_t u = 0; u < n; ++u) {
      if (spec.allow_loops && rng.bernoulli(*spec.p)) pairs.emplace_back(u, u);
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rng.bernoulli(*spec.p)) pairs.emplace_back(u, v);
      }
    }
    return build_graph(n, pairs);
  }

  const auto m = spec.m.value_or(0);
  if (m > 0 && n == 0) throw InputError("cannot place edges on zero vertices");
  if (!spec.allow_loops && n == 1 && m > 0) throw InputError("a single vertex only admits loops");
  if (!spec.allow_multi) {
    const auto capacity = n * (n - (n > 0 ? 1 : 0)) / 2 + (spec.allow_loops ? n : 0);
    if (m > capacity) {
      throw InputError("cannot place " + std::to_string(m) + " distinct edges on " +
                       std::to_string(n) + " vertices");
    }
  }
  std::unordered_set<std::uint64_t> seen;
  if (!spec.allow_multi) seen.reserve(m);
  pairs.reserve(m);
  while (pairs.size() < m) {
    const auto u = static_cast<VertexId>(rng.below(n));
    const auto v = static_cast<VertexId>(rng.below(n));
    if (u == v && !spec.allow_loops) continue;
    if (!spec.allow_multi && !seen.insert(detail::pair_key(u, v)).second) continue;
    pairs.emplace_back(u, v);
  }
  return build_graph(n, pairs);
}

/// Sides are [0, left) and [left, left + right); every edge crosses.
inline Graph gen_planted_bipartite(const GenSpec& spec) {
  validate(spec);
  if (spec.kind != GenKind::planted_bipartite) {
    throw InputError("gen_planted_bipartite needs kind planted-bipartite");
  }
  Xoshiro256 rng(spec.seed);
  std::vector<EndpointPair> pairs;
  detail::planted_edges(spec.left, spec.right, spec, rng, pairs);
  return build_graph(spec.left + spec.right, pairs);
}

/// A planted bipartite base, then a cycle of odd length on fresh vertices. When the base has
/// vertices, one bridge edge joins the first cycle vertex to a random base vertex.
inline Graph gen_planted_odd_cycle(const GenSpec& spec) {
  validate(spec);
  if (spec.kind != GenKind::planted_odd_cycle) {
    throw InputError("gen_planted_odd_cycle needs kind planted-odd-cycle");
  }
  Xoshiro256 rng(spec.seed);
  std::vector<EndpointPair> pairs;
  detail::planted_edges(spec.left, spec.right, spec, rng, pairs);

  const auto base = spec.left + spec.right;
  const auto k = spec.cycle_len;
  for (std::size_t i = 0; i < k; ++i) {
    pairs.emplace_back(base + i, base + (i + 1) % k);
  }
  if (base > 0) pairs.emplace_back(rng.below(base), base);
  return build_graph(base + k, pairs);
}

/// Vertex i > 0 links to a uniform earlier vertex, or with probability isolate_p starts a tree.
inline Graph gen_forest(const GenSpec& spec) {
  validate(spec);
  if (spec.kind != GenKind::forest) throw InputError("gen_forest needs kind forest");
  Xoshiro256 rng(spec.seed);
  std::vector<EndpointPair> pairs;
  for (std::size_t i = 1; i < spec.n; ++i) {
    if (rng.bernoulli(spec.isolate_p)) continue;
    pairs.emplace_back(rng.below(i), i);
  }
  return build_graph(spec.n, pairs);
}

inline Graph generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::random: return gen_random(spec);
    case GenKind::planted_bipartite: return gen_planted_bipartite(spec);
    case GenKind::planted_odd_cycle: return gen_planted_odd_cycle(spec);
    case GenKind::forest: return gen_forest(spec);
  }
  throw InputError("unknown generator kind");
}

}  // namespace konig
