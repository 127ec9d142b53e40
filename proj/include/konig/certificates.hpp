#pragma once

// The two certificates of the bipartite / odd-cycle dichotomy, their verifiers,
// and the side-assignment algebra the checkers rely on.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "konig/errors.hpp"
#include "konig/graph.hpp"

namespace konig {

/// side[v] == 0 puts v in X, side[v] == 1 puts v in Y.
struct Bipartition {
  std::vector<std::uint8_t> side;

  std::size_t size() const noexcept { return side.size(); }

  /// {X, Y} as ascending vertex lists.
  std::pair<std::vector<VertexId>, std::vector<VertexId>> sides() const {
    std::pair<std::vector<VertexId>, std::vector<VertexId>> out;
    for (std::size_t v = 0; v < side.size(); ++v) {
      (side[v] == 0 ? out.first : out.second).push_back(static_cast<VertexId>(v));
    }
    return out;
  }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Simple cycle v_0 .. v_{k-1}; edges[i] joins v_i and v_{(i+1) mod k}. A loop is the k = 1 case.
struct OddCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }

  friend bool operator==(const OddCycle&, const OddCycle&) = default;
};

class CheckOutcome {
 public:
  CheckOutcome(Bipartition bp) : value_(std::move(bp)) {}  // NOLINT(google-explicit-constructor)
  CheckOutcome(OddCycle c) : value_(std::move(c)) {}       // NOLINT(google-explicit-constructor)

  bool is_bipartite() const noexcept { return std::holds_alternative<Bipartition>(value_); }
  const Bipartition& bipartition() const { return std::get<Bipartition>(value_); }
  const OddCycle& odd_cycle() const { return std::get<OddCycle>(value_); }

  friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;

 private:
  std::variant<Bipartition, OddCycle> value_;
};

inline void require_total(const Graph& g, const Bipartition& bp) {
  if (bp.side.size() != g.vertex_count()) {
    throw InputError("bipartition covers " + std::to_string(bp.side.size()) + " of " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
  for (const auto s : bp.side) {
    if (s > 1) throw InputError("side values must be 0 or 1");
  }
}

/// True iff no edge (loops included) has both endpoints on one side.
inline bool verify_bipartition(const Graph& g, const Bipartition& bp) {
  require_total(g, bp);
  for (const auto& e : g.edges()) {
    if (bp.side[e.u] == bp.side[e.v]) return false;
  }
  return true;
}

/// Structural check only; malformed certificates are rejected, never thrown on.
inline bool verify_odd_cycle(const Graph& g, const OddCycle& c) {
  const auto k = c.vertices.size();
  if (k == 0 || k % 2 == 0 || c.edges.size() != k) return false;

  std::vector<bool> used(g.vertex_count(), false);
  for (const auto v : c.vertices) {
    if (!g.contains(v) || used[v]) return false;
    used[v] = true;
  }
  std::vector<bool> edge_used(g.edge_count(), false);
  for (std::size_t i = 0; i < k; ++i) {
    const auto e = c.edges[i];
    if (e >= g.edge_count() || edge_used[e]) return false;
    edge_used[e] = true;
    if (!g.edge(e).joins(c.vertices[i], c.vertices[(i + 1) % k])) return false;
  }
  return true;
}

inline bool verify_outcome(const Graph& g, const CheckOutcome& outcome) {
  return outcome.is_bipartite() ? verify_bipartition(g, outcome.bipartition())
                                : verify_odd_cycle(g, outcome.odd_cycle());
}

/// Toggles the side of every vertex in `component`. Involutive.
inline Bipartition flip_component(Bipartition bp, std::span<const VertexId> component) {
  for (const auto v : component) {
    if (v >= bp.side.size()) throw InputError("flip set names a vertex outside the assignment");
    bp.side[v] ^= 1;
  }
  return bp;
}

inline Bipartition flip_component(Bipartition bp, std::initializer_list<VertexId> component) {
  return flip_component(std::move(bp),
                        std::span<const VertexId>(component.begin(), component.size()));
}

/// Embeds per-component assignments (indexed by local ids) into one global assignment.
/// vertex_maps[c][local] is the global id of local vertex `local` of component c.
inline Bipartition merge_bipartitions(const ComponentLabeling& labeling,
                                      std::span<const Bipartition> parts,
                                      std::span<const std::vector<VertexId>> vertex_maps) {
  if (parts.size() != labeling.count || vertex_maps.size() != labeling.count) {
    throw InputError("expected one bipartition per component (" + std::to_string(labeling.count) +
                     "), got " + std::to_string(parts.size()));
  }
  const auto n = labeling.component_of.size();
  Bipartition out;
  out.side.assign(n, 0);
  std::vector<bool> assigned(n, false);
  for (std::size_t c = 0; c < parts.size(); ++c) {
    if (parts[c].side.size() != vertex_maps[c].size()) {
      throw InputError("component " + std::to_string(c) + " assignment/map size mismatch");
    }
    for (std::size_t local = 0; local < vertex_maps[c].size(); ++local) {
      const auto v = vertex_maps[c][local];
      if (v >= n || labeling.component_of[v] != c || assigned[v]) {
        throw InputError("component " + std::to_string(c) + " maps to vertex " +
                         std::to_string(v) + " it does not own");
      }
      out.side[v] = parts[c].side[local];
      assigned[v] = true;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!assigned[v]) throw InputError("vertex " + std::to_string(v) + " has no side");
  }
  return out;
}

/// Sides must strictly alternate along p. Then the endpoints share a side iff p is even.
inline bool check_path_parity(const Bipartition& bp, const Path& p) {
  for (const auto v : p.vertices) {
    if (v >= bp.side.size()) throw InputError("path vertex outside the assignment");
  }
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    if (bp.side[p.vertices[i]] == bp.side[p.vertices[i + 1]]) return false;
  }
  return true;
}

/// Flips whole components so the smallest vertex of each component sits on side 0.
inline Bipartition canonicalize(const Graph& g, Bipartition bp) {
  require_total(g, bp);
  const auto labels = connected_components(g);
  std::vector<int> flip(labels.count, -1);
  for (std::size_t v = 0; v < bp.side.size(); ++v) {
    auto& f = flip[labels.component_of[v]];
    if (f < 0) f = bp.side[v];
    bp.side[v] ^= static_cast<std::uint8_t>(f);
  }
  return bp;
}

}  // namespace konig
