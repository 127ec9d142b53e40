#pragma once

#include <cstdint>
#include <optional>

#include "konig/certificates.hpp"
#include "konig/graph.hpp"

namespace konig {

/// Work counter reported by the benchmark harness. Its meaning depends on the checker:
/// growth counts vertices absorbed, flip counts side toggles, dsu counts unions,
/// forest counts non-forest edges reinserted.
struct CheckStats {
  std::uint64_t ops = 0;
};

namespace detail {

inline std::optional<OddCycle> loop_certificate(const Graph& g) {
  if (const auto e = g.first_loop()) return OddCycle{{g.edge(*e).u}, {*e}};
  return std::nullopt;
}

/// Closes an even a,b-path with an edge joining b back to a.
inline OddCycle close_path(Path path, EdgeId closing) {
  path.edges.push_back(closing);
  return OddCycle{std::move(path.vertices), std::move(path.edges)};
}

inline void count(CheckStats* stats, std::uint64_t n = 1) {
  if (stats != nullptr) stats->ops += n;
}

}  // namespace detail
}  // namespace konig
