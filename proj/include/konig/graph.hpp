#pragma once

// Undirected multigraph with loops: dense vertex ids, stable edge ids, CSR adjacency.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "konig/errors.hpp"

namespace konig {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using EndpointPair = std::pair<VertexId, VertexId>;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const noexcept { return u == v; }
  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
  bool joins(VertexId a, VertexId b) const noexcept {
    return (u == a && v == b) || (u == b && v == a);
  }

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct AdjEntry {
  VertexId neighbor = 0;
  EdgeId edge = 0;

  friend bool operator==(const AdjEntry&, const AdjEntry&) = default;
};

class Graph;
Graph build_graph(std::size_t n, std::span<const EndpointPair> pairs);

/// Immutable after construction. Each vertex's adjacency is sorted by (neighbor, edge id);
/// a non-loop edge appears once at each endpoint, a loop once at its vertex.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const AdjEntry> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  bool contains(VertexId v) const noexcept { return v < n_; }

  /// Lowest-id loop edge, if any.
  std::optional<EdgeId> first_loop() const noexcept {
    if (first_loop_ == kNoEdge) return std::nullopt;
    return first_loop_;
  }

  /// Endpoint pairs in edge-id order; feeding them back to build_graph reproduces the graph.
  std::vector<EndpointPair> endpoint_pairs() const {
    std::vector<EndpointPair> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(std::size_t n, std::span<const EndpointPair> pairs);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<AdjEntry> adj_;
  EdgeId first_loop_ = kNoEdge;
};

inline Graph build_graph(std::size_t n, std::span<const EndpointPair> pairs) {
  if (n >= kNoVertex) throw InputError("vertex count " + std::to_string(n) + " too large");
  if (pairs.size() >= kNoEdge) throw InputError("too many edges");

  Graph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    if (u >= n || v >= n) {
      throw InputError("edge " + std::to_string(i) + " (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") has an endpoint outside [0, " + std::to_string(n) +
                       ")");
    }
    const auto id = static_cast<EdgeId>(i);
    g.edges_.push_back({id, u, v});
    ++degree[u];
    if (u != v) ++degree[v];
    else if (g.first_loop_ == kNoEdge) g.first_loop_ = id;
  }

  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adj_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : g.edges_) {
    g.adj_[cursor[e.u]++] = {e.v, e.id};
    if (!e.is_loop()) g.adj_[cursor[e.v]++] = {e.u, e.id};
  }
  // Edges were appended in id order, so only the neighbor key needs a stable sort.
  for (std::size_t v = 0; v < n; ++v) {
    std::stable_sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                     g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
                     [](const AdjEntry& a, const AdjEntry& b) { return a.neighbor < b.neighbor; });
  }
  return g;
}

inline Graph build_graph(std::size_t n, std::initializer_list<EndpointPair> pairs) {
  return build_graph(n, std::span<const EndpointPair>(pairs.begin(), pairs.size()));
}

inline Graph build_graph(std::size_t n, const std::vector<EndpointPair>& pairs) {
  return build_graph(n, std::span<const EndpointPair>(pairs));
}

struct SimplifyResult {
  Graph graph;
  std::size_t removed = 0;
};

/// Keeps the first edge of every unordered endpoint pair. Loops are deduplicated but kept.
inline SimplifyResult simplify(const Graph& g) {
  std::unordered_map<std::uint64_t, bool> seen;
  seen.reserve(g.edge_count());
  std::vector<EndpointPair> kept;
  kept.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    const auto lo = std::min(e.u, e.v);
    const auto hi = std::max(e.u, e.v);
    const auto key = (static_cast<std::uint64_t>(lo) << 32) | hi;
    if (seen.emplace(key, true).second) kept.emplace_back(e.u, e.v);
  }
  const auto removed = g.edge_count() - kept.size();
  return {build_graph(g.vertex_count(), kept), removed};
}

struct ComponentLabeling {
  std::vector<std::uint32_t> component_of;
  std::size_t count = 0;

  /// Vertices of each component, ascending.
  std::vector<std::vector<VertexId>> members() const {
    std::vector<std::vector<VertexId>> out(count);
    for (std::size_t v = 0; v < component_of.size(); ++v) {
      out[component_of[v]].push_back(static_cast<VertexId>(v));
    }
    return out;
  }
};

/// Component ids follow the order of each component's smallest vertex.
inline ComponentLabeling connected_components(const Graph& g) {
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  ComponentLabeling labels;
  labels.component_of.assign(g.vertex_count(), unset);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (labels.component_of[s] != unset) continue;
    const auto id = static_cast<std::uint32_t>(labels.count++);
    labels.component_of[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (const auto& a : g.neighbors(v)) {
        if (labels.component_of[a.neighbor] == unset) {
          labels.component_of[a.neighbor] = id;
          stack.push_back(a.neighbor);
        }
      }
    }
  }
  return labels;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> vertex_map;  // new vertex id -> old vertex id
  std::vector<EdgeId> edge_map;      // new edge id -> old edge id
};

/// New vertex ids follow ascending old ids; surviving edges keep their relative id order.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  InducedSubgraph out;
  out.vertex_map.assign(vertices.begin(), vertices.end());
  std::sort(out.vertex_map.begin(), out.vertex_map.end());
  out.vertex_map.erase(std::unique(out.vertex_map.begin(), out.vertex_map.end()),
                       out.vertex_map.end());
  if (!out.vertex_map.empty() && out.vertex_map.back() >= g.vertex_count()) {
    throw InputError("vertex " + std::to_string(out.vertex_map.back()) + " is not in the graph");
  }

  std::unordered_map<VertexId, VertexId> local;
  local.reserve(out.vertex_map.size());
  for (std::size_t i = 0; i < out.vertex_map.size(); ++i) {
    local.emplace(out.vertex_map[i], static_cast<VertexId>(i));
  }

  std::vector<EndpointPair> pairs;
  for (const auto& e : g.edges()) {
    const auto u = local.find(e.u);
    const auto v = local.find(e.v);
    if (u == local.end() || v == local.end()) continue;
    pairs.emplace_back(u->second, v->second);
    out.edge_map.push_back(e.id);
  }
  out.graph = build_graph(out.vertex_map.size(), pairs);
  return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, std::initializer_list<VertexId> vertices) {
  return induced_subgraph(g, std::span<const VertexId>(vertices.begin(), vertices.size()));
}

/// v_0..v_L joined by edges[i] = {v_i, v_{i+1}}; all vertices distinct.
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Breadth-first shortest a,b-path using only vertices and edges accepted by the predicates.
/// Neighbors are expanded in (neighbor id, edge id) order, so ties go to the lowest neighbor.
template <class VertexPred, class EdgePred>
std::optional<Path> find_path_if(const Graph& g, VertexId a, VertexId b, VertexPred&& vertex_ok,
                                 EdgePred&& edge_ok) {
  if (!g.contains(a) || !g.contains(b)) throw InputError("path endpoint outside the graph");
  if (!vertex_ok(a) || !vertex_ok(b)) return std::nullopt;
  if (a == b) return Path{{a}, {}};

  std::vector<VertexId> parent(g.vertex_count(), kNoVertex);
  std::vector<EdgeId> via(g.vertex_count(), kNoEdge);
  std::vector<VertexId> queue;
  queue.push_back(a);
  parent[a] = a;
  for (std::size_t head = 0; head < queue.size() && parent[b] == kNoVertex; ++head) {
    const auto v = queue[head];
    for (const auto& adj : g.neighbors(v)) {
      const auto w = adj.neighbor;
      if (parent[w] != kNoVertex || !edge_ok(adj.edge) || !vertex_ok(w)) continue;
      parent[w] = v;
      via[w] = adj.edge;
      queue.push_back(w);
    }
  }
  if (parent[b] == kNoVertex) return std::nullopt;

  Path p;
  for (auto v = b; v != a; v = parent[v]) {
    p.vertices.push_back(v);
    p.edges.push_back(via[v]);
  }
  p.vertices.push_back(a);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

/// `allowed` is a membership mask over V(g).
inline std::optional<Path> find_path(const Graph& g, const std::vector<bool>& allowed, VertexId a,
                                     VertexId b) {
  if (allowed.size() != g.vertex_count()) throw InputError("allowed mask size != vertex count");
  return find_path_if(
      g, a, b, [&](VertexId v) { return static_cast<bool>(allowed[v]); },
      [](EdgeId) { return true; });
}

inline std::optional<Path> find_path(const Graph& g, VertexId a, VertexId b) {
  return find_path_if(
      g, a, b, [](VertexId) { return true; }, [](EdgeId) { return true; });
}

}  // namespace konig
