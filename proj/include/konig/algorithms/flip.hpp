#pragma once

// Maintains a bipartition of the spanning subgraph H of accepted edges, starting edgeless.
// An edge between same-side endpoints in different components of H is accepted after flipping
// the smaller component; inside one component it closes an odd cycle with the even H-path.

#include <cstdint>
#include <utility>
#include <vector>

#include "konig/algorithms/common.hpp"

namespace konig {

struct FlipState {
  std::vector<std::uint8_t> side;
  std::vector<std::uint32_t> comp_id;
  std::vector<std::vector<VertexId>> comp_members;
  std::vector<std::uint8_t> accepted;  // indexed by edge id

  FlipState(std::size_t n, std::size_t m)
      : side(n, 0), comp_id(n), comp_members(n), accepted(m, 0) {
    for (std::size_t v = 0; v < n; ++v) {
      comp_id[v] = static_cast<std::uint32_t>(v);
      comp_members[v] = {static_cast<VertexId>(v)};
    }
  }
};

inline CheckOutcome check_incremental_flip(const Graph& g, CheckStats* stats = nullptr) {
  if (auto loop = detail::loop_certificate(g)) return *std::move(loop);

  FlipState st(g.vertex_count(), g.edge_count());
  for (const auto& e : g.edges()) {
    const auto ca = st.comp_id[e.u];
    const auto cb = st.comp_id[e.v];

    if (ca == cb) {
      if (st.side[e.u] != st.side[e.v]) {
        st.accepted[e.id] = 1;
        continue;
      }
      auto path = find_path_if(
          g, e.v, e.u, [](VertexId) { return true; },
          [&](EdgeId id) { return st.accepted[id] != 0; });
      if (!path) throw InvariantError("flip: component has no internal path");
      return detail::close_path(*std::move(path), e.id);
    }

    // Ties flip the component holding the first endpoint.
    const bool a_smaller = st.comp_members[ca].size() <= st.comp_members[cb].size();
    const auto small = a_smaller ? ca : cb;
    const auto large = a_smaller ? cb : ca;
    if (st.side[e.u] == st.side[e.v]) {
      for (const auto v : st.comp_members[small]) st.side[v] ^= 1;
      detail::count(stats, st.comp_members[small].size());
    }
    auto& into = st.comp_members[large];
    for (const auto v : st.comp_members[small]) {
      st.comp_id[v] = large;
      into.push_back(v);
    }
    std::vector<VertexId>().swap(st.comp_members[small]);
    st.accepted[e.id] = 1;
  }
  return Bipartition{std::move(st.side)};
}

}  // namespace konig
