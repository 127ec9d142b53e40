#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "konig/algorithms/dsu.hpp"
#include "konig/algorithms/flip.hpp"
#include "konig/algorithms/forest.hpp"
#include "konig/algorithms/growth.hpp"

namespace konig {

enum class Algorithm { growth, flip, dsu, forest };

inline constexpr std::array<Algorithm, 4> kAllAlgorithms{Algorithm::growth, Algorithm::flip,
                                                         Algorithm::dsu, Algorithm::forest};

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::growth: return "growth";
    case Algorithm::flip: return "flip";
    case Algorithm::dsu: return "dsu";
    case Algorithm::forest: return "forest";
  }
  return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto a : kAllAlgorithms) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

/// Runs the checker without verifying its output.
inline CheckOutcome run_unverified(const Graph& g, Algorithm a, CheckStats* stats = nullptr) {
  switch (a) {
    case Algorithm::growth: return check_growth_induced(g, stats);
    case Algorithm::flip: return check_incremental_flip(g, stats);
    case Algorithm::dsu: return check_dsu_parity(g, stats);
    case Algorithm::forest: return check_forest_recolor(g, stats);
  }
  throw InvariantError("unknown algorithm");
}

/// Self-certifying entry point: the outcome has passed its verifier, or InvariantError is thrown.
inline CheckOutcome check(const Graph& g, Algorithm a, CheckStats* stats = nullptr) {
  auto outcome = run_unverified(g, a, stats);
  if (!verify_outcome(g, outcome)) {
    throw InvariantError(std::string(to_string(a)) + " returned a certificate that fails " +
                         (outcome.is_bipartite() ? "verify_bipartition" : "verify_odd_cycle"));
  }
  return outcome;
}

/// Checks each connected component on its own induced subgraph and glues the answers:
/// the first odd cycle found (mapped back to global ids) or the merged bipartition.
inline CheckOutcome check_componentwise(const Graph& g, Algorithm a) {
  const auto labels = connected_components(g);
  const auto members = labels.members();
  std::vector<Bipartition> parts;
  std::vector<std::vector<VertexId>> maps;
  parts.reserve(labels.count);
  maps.reserve(labels.count);
  for (const auto& comp : members) {
    auto sub = induced_subgraph(g, comp);
    auto local = check(sub.graph, a);
    if (!local.is_bipartite()) {
      OddCycle c = local.odd_cycle();
      for (auto& v : c.vertices) v = sub.vertex_map[v];
      for (auto& e : c.edges) e = sub.edge_map[e];
      return c;
    }
    parts.push_back(local.bipartition());
    maps.push_back(std::move(sub.vertex_map));
  }
  return merge_bipartitions(labels, parts, maps);
}

}  // namespace konig
