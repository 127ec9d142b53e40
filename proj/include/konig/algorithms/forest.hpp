#pragma once

// Acyclic graphs are 2-colored by peeling vertices of degree at most one and coloring them in
// reverse. General graphs: color a spanning forest that way, then put the remaining edges back.
// A reinserted edge with equal end sides closes an odd cycle with the (even) forest path.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "konig/algorithms/common.hpp"

namespace konig {

/// Throws PreconditionError if g has a cycle (loops and parallel pairs included).
/// Each tree's smallest vertex ends up on side 0.
inline Bipartition leaf_peel_two_color(const Graph& g) {
  if (g.first_loop()) throw PreconditionError("leaf peeling needs an acyclic graph (found a loop)");

  const auto n = g.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<VertexId> peel;
  peel.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1) peel.push_back(v);
  }

  std::vector<std::uint8_t> removed(n, 0);
  std::vector<VertexId> anchor(n, kNoVertex);  // the single live neighbor at removal time
  for (std::size_t head = 0; head < peel.size(); ++head) {
    const auto x = peel[head];
    removed[x] = 1;
    for (const auto& a : g.neighbors(x)) {
      if (removed[a.neighbor]) continue;
      anchor[x] = a.neighbor;
      if (--degree[a.neighbor] == 1) peel.push_back(a.neighbor);
      break;
    }
  }
  if (peel.size() != n) throw PreconditionError("leaf peeling needs an acyclic graph");

  Bipartition bp;
  bp.side.assign(n, 0);
  std::vector<VertexId> root(n);
  for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
    const auto x = *it;
    if (anchor[x] == kNoVertex) {
      root[x] = x;
    } else {
      bp.side[x] = bp.side[anchor[x]] ^ 1;
      root[x] = root[anchor[x]];
    }
  }

  std::vector<int> flip(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    auto& f = flip[root[v]];
    if (f < 0) f = bp.side[v];
    bp.side[v] ^= static_cast<std::uint8_t>(f);
  }
  return bp;
}

struct ForestColoring {
  std::vector<EdgeId> forest_edges;
  std::vector<EdgeId> nonforest;
  std::vector<std::uint8_t> side;
};

inline CheckOutcome check_forest_recolor(const Graph& g, CheckStats* stats = nullptr) {
  if (auto loop = detail::loop_certificate(g)) return *std::move(loop);

  const auto n = g.vertex_count();
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<EdgeId> parent_edge(n, kNoEdge);
  std::vector<std::uint32_t> depth(n, 0);
  std::vector<std::uint8_t> is_forest(g.edge_count(), 0);
  ForestColoring fc;

  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId s = 0; s < n; ++s) {
    if (parent[s] != kNoVertex) continue;
    parent[s] = s;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto v = queue[head];
      for (const auto& a : g.neighbors(v)) {
        if (parent[a.neighbor] != kNoVertex) continue;
        parent[a.neighbor] = v;
        parent_edge[a.neighbor] = a.edge;
        depth[a.neighbor] = depth[v] + 1;
        is_forest[a.edge] = 1;
        queue.push_back(a.neighbor);
      }
    }
  }

  std::vector<EndpointPair> forest_pairs;
  forest_pairs.reserve(n);
  for (const auto& e : g.edges()) {
    if (is_forest[e.id]) {
      fc.forest_edges.push_back(e.id);
      forest_pairs.emplace_back(e.u, e.v);
    } else {
      fc.nonforest.push_back(e.id);
    }
  }
  fc.side = leaf_peel_two_color(build_graph(n, forest_pairs)).side;

  for (const auto id : fc.nonforest) {
    const auto& e = g.edge(id);
    detail::count(stats);
    if (fc.side[e.u] != fc.side[e.v]) continue;

    // Unique forest path v -> u through their lowest common ancestor; e closes it.
    Path up;
    std::vector<VertexId> down_vertices;
    std::vector<EdgeId> down_edges;
    auto a = e.v;
    auto b = e.u;
    up.vertices.push_back(a);
    while (a != b) {
      if (depth[a] >= depth[b]) {
        up.edges.push_back(parent_edge[a]);
        a = parent[a];
        up.vertices.push_back(a);
      } else {
        down_vertices.push_back(b);
        down_edges.push_back(parent_edge[b]);
        b = parent[b];
      }
    }
    up.vertices.insert(up.vertices.end(), down_vertices.rbegin(), down_vertices.rend());
    up.edges.insert(up.edges.end(), down_edges.rbegin(), down_edges.rend());
    return detail::close_path(std::move(up), id);
  }
  return Bipartition{std::move(fc.side)};
}

}  // namespace konig
