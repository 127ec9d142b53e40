#pragma once

// Grows a connected induced bipartite subgraph H one vertex at a time. A frontier vertex whose
// H-neighbors all share a side joins the opposite side; one with H-neighbors on both sides
// closes an odd cycle through an (odd) H-path between two of them.

#include <array>
#include <cstdint>
#include <vector>

#include "konig/algorithms/common.hpp"

namespace konig {

struct GrowthState {
  std::vector<std::uint8_t> in_h;
  std::vector<std::uint8_t> side;
  std::vector<std::uint8_t> queued;
  std::vector<VertexId> frontier;  // FIFO; reset per component
  std::size_t head = 0;

  explicit GrowthState(std::size_t n) : in_h(n, 0), side(n, 0), queued(n, 0) {}

  void absorb(const Graph& g, VertexId v, std::uint8_t s) {
    in_h[v] = 1;
    side[v] = s;
    for (const auto& a : g.neighbors(v)) {
      if (!in_h[a.neighbor] && !queued[a.neighbor]) {
        queued[a.neighbor] = 1;
        frontier.push_back(a.neighbor);
      }
    }
  }
};

inline CheckOutcome check_growth_induced(const Graph& g, CheckStats* stats = nullptr) {
  if (auto loop = detail::loop_certificate(g)) return *std::move(loop);

  const auto n = g.vertex_count();
  GrowthState st(n);
  for (VertexId seed = 0; seed < n; ++seed) {
    if (st.in_h[seed]) continue;
    st.frontier.clear();
    st.head = 0;
    st.absorb(g, seed, 0);
    detail::count(stats);

    while (st.head < st.frontier.size()) {
      const auto z = st.frontier[st.head++];
      // First H-neighbor found on each side, with the edge reaching it.
      std::array<VertexId, 2> x{kNoVertex, kNoVertex};
      std::array<EdgeId, 2> via{kNoEdge, kNoEdge};
      for (const auto& a : g.neighbors(z)) {
        if (!st.in_h[a.neighbor]) continue;
        const auto s = st.side[a.neighbor];
        if (x[s] == kNoVertex) {
          x[s] = a.neighbor;
          via[s] = a.edge;
        }
      }

      if (x[0] != kNoVertex && x[1] != kNoVertex) {
        auto path = find_path_if(
            g, x[0], x[1], [&](VertexId v) { return st.in_h[v] != 0; },
            [](EdgeId) { return true; });
        if (!path) throw InvariantError("growth: H is not connected");
        OddCycle cycle;
        cycle.vertices.push_back(z);
        cycle.vertices.insert(cycle.vertices.end(), path->vertices.begin(), path->vertices.end());
        cycle.edges.push_back(via[0]);
        cycle.edges.insert(cycle.edges.end(), path->edges.begin(), path->edges.end());
        cycle.edges.push_back(via[1]);
        return cycle;
      }

      const std::uint8_t taken = x[0] != kNoVertex ? 0 : 1;
      st.absorb(g, z, static_cast<std::uint8_t>(taken ^ 1));
      detail::count(stats);
    }
  }
  return Bipartition{std::move(st.side)};
}

}  // namespace konig
