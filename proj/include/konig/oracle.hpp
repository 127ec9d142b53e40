#pragma once

// Exhaustive ground truth for small graphs. Deliberately independent of the checkers:
// nothing here uses components, union-find, or path search.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "konig/certificates.hpp"
#include "konig/errors.hpp"
#include "konig/graph.hpp"

namespace konig {

inline constexpr std::size_t kMaxAssignmentVertices = 20;
inline constexpr std::size_t kMaxCycleSearchVertices = 12;

namespace detail {

inline void guard_size(const Graph& g, std::size_t limit, const char* what) {
  if (g.vertex_count() > limit) {
    throw SizeLimitError(std::string(what) + " is limited to " + std::to_string(limit) +
                         " vertices, got " + std::to_string(g.vertex_count()));
  }
}

// Assignment `mask` puts vertex v on side (mask >> (n - 1 - v)) & 1, so counting mask upward
// walks the side vectors in lexicographic order.
inline bool mask_is_proper(const Graph& g, std::uint32_t mask) {
  const auto n = g.vertex_count();
  for (const auto& e : g.edges()) {
    if (((mask >> (n - 1 - e.u)) & 1U) == ((mask >> (n - 1 - e.v)) & 1U)) return false;
  }
  return true;
}

}  // namespace detail

inline std::optional<Bipartition> brute_force_bipartite(const Graph& g) {
  detail::guard_size(g, kMaxAssignmentVertices, "brute_force_bipartite");
  const auto n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (!detail::mask_is_proper(g, mask)) continue;
    Bipartition bp;
    bp.side.resize(n);
    for (std::size_t v = 0; v < n; ++v) bp.side[v] = (mask >> (n - 1 - v)) & 1U;
    return bp;
  }
  return std::nullopt;
}

inline std::uint64_t count_proper_2colorings(const Graph& g) {
  detail::guard_size(g, kMaxAssignmentVertices, "count_proper_2colorings");
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1U << g.vertex_count()); ++mask) {
    if (detail::mask_is_proper(g, mask)) ++count;
  }
  return count;
}

/// Depth-first search over simple cycles, smallest start vertex first, then lexicographic in
/// the vertex sequence. Returns the first odd cycle met; a loop is a cycle of length one.
inline std::optional<OddCycle> find_odd_cycle_exhaustive(const Graph& g) {
  detail::guard_size(g, kMaxCycleSearchVertices, "find_odd_cycle_exhaustive");
  const auto n = g.vertex_count();

  struct Frame {
    VertexId v;
    std::size_t next;  // adjacency cursor
  };

  std::vector<bool> on_path(n, false);
  for (VertexId s = 0; s < n; ++s) {
    for (const auto& a : g.neighbors(s)) {
      if (a.neighbor == s) return OddCycle{{s}, {a.edge}};
    }

    std::vector<Frame> stack{{s, 0}};
    std::vector<VertexId> verts{s};
    std::vector<EdgeId> edges;
    on_path[s] = true;
    while (!stack.empty()) {
      auto& top = stack.back();
      const auto adj = g.neighbors(top.v);
      bool descended = false;
      while (top.next < adj.size()) {
        const auto entry = adj[top.next++];
        // Parallel edges give the same vertex sequence; keep the lowest id only.
        if (top.next >= 2 && adj[top.next - 2].neighbor == entry.neighbor) continue;
        const auto w = entry.neighbor;
        if (w == s && edges.size() >= 2) {
          if (edges.size() % 2 == 0) {
            OddCycle c{verts, edges};
            c.edges.push_back(entry.edge);
            return c;
          }
          continue;
        }
        if (w <= s || on_path[w]) continue;
        on_path[w] = true;
        verts.push_back(w);
        edges.push_back(entry.edge);
        stack.push_back({w, 0});
        descended = true;
        break;
      }
      if (!descended) {
        on_path[stack.back().v] = false;
        stack.pop_back();
        if (!edges.empty()) {
          verts.pop_back();
          edges.pop_back();
        }
      }
    }
  }
  return std::nullopt;
}

struct OracleVerdict {
  std::optional<Bipartition> bipartition;
  std::optional<OddCycle> odd_cycle;
  std::uint64_t coloring_count = 0;
};

/// Runs all three exhaustive searches; n is bounded by the cycle search limit.
inline OracleVerdict oracle_verdict(const Graph& g) {
  OracleVerdict out;
  out.bipartition = brute_force_bipartite(g);
  out.odd_cycle = find_odd_cycle_exhaustive(g);
  out.coloring_count = count_proper_2colorings(g);
  return out;
}

}  // namespace konig
