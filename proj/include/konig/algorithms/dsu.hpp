#pragma once

// Edge-by-edge induction with a parity union-find. Joining two sets is the disconnected case
// where flipping one side repairs the partition; the parity bit on the link does that flip
// lazily. An edge inside one set with equal parities closes an odd cycle through the forest
// of linking edges, which is kept separately and never compressed.

#include <cstdint>
#include <vector>

#include "konig/algorithms/common.hpp"
#include "konig/parity_union_find.hpp"

namespace konig {

struct ParityForestState {
  ParityUnionFind sets;
  std::vector<std::uint8_t> in_forest;  // indexed by edge id

  ParityForestState(std::size_t n, std::size_t m) : sets(n), in_forest(m, 0) {}
};

inline CheckOutcome check_dsu_parity(const Graph& g, CheckStats* stats = nullptr) {
  if (auto loop = detail::loop_certificate(g)) return *std::move(loop);

  ParityForestState st(g.vertex_count(), g.edge_count());
  for (const auto& e : g.edges()) {
    const auto ra = st.sets.find(e.u);
    const auto rb = st.sets.find(e.v);
    if (ra.id != rb.id) {
      st.sets.unite(e.u, e.v);
      st.in_forest[e.id] = 1;
      detail::count(stats);
    } else if (ra.parity == rb.parity) {
      auto path = find_path_if(
          g, e.v, e.u, [](VertexId) { return true; },
          [&](EdgeId id) { return st.in_forest[id] != 0; });
      if (!path) throw InvariantError("dsu: endpoints share a set but not a forest path");
      return detail::close_path(*std::move(path), e.id);
    }
  }

  Bipartition bp;
  bp.side.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) bp.side[v] = st.sets.find(v).parity;
  return bp;
}

}  // namespace konig
