#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "konig/algorithms/check.hpp"

namespace konig {

struct ResultReport {
  std::string algorithm;
  bool bipartite = false;
  std::vector<VertexId> x;  // bipartite only
  std::vector<VertexId> y;
  std::vector<VertexId> cycle;  // odd cycle only
  std::vector<EdgeId> cycle_edges;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::uint64_t> elapsed_ns;

  std::string_view verdict() const { return bipartite ? "bipartite" : "odd_cycle"; }
};

inline ResultReport make_report(const Graph& g, Algorithm a, const CheckOutcome& outcome,
                                std::optional<std::uint64_t> elapsed_ns = std::nullopt) {
  ResultReport r;
  r.algorithm = std::string(to_string(a));
  r.bipartite = outcome.is_bipartite();
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.elapsed_ns = elapsed_ns;
  if (r.bipartite) {
    std::tie(r.x, r.y) = outcome.bipartition().sides();
  } else {
    r.cycle = outcome.odd_cycle().vertices;
    r.cycle_edges = outcome.odd_cycle().edges;
  }
  return r;
}

namespace detail {

inline std::string join_ids(const std::vector<std::uint32_t>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ids[i]);
  }
  return out;
}

}  // namespace detail

inline std::string to_text(const ResultReport& r) {
  std::string out = "[" + r.algorithm + "] " + std::string(r.verdict()) +
                    "  n=" + std::to_string(r.n) + " m=" + std::to_string(r.m);
  if (r.elapsed_ns) out += " elapsed_ns=" + std::to_string(*r.elapsed_ns);
  out += '\n';
  if (r.bipartite) {
    out += "  X: " + detail::join_ids(r.x) + "\n";
    out += "  Y: " + detail::join_ids(r.y) + "\n";
  } else {
    out += "  cycle (length " + std::to_string(r.cycle.size()) + "): " +
           detail::join_ids(r.cycle) + "\n";
    out += "  edge ids: " + detail::join_ids(r.cycle_edges) + "\n";
  }
  return out;
}

inline nlohmann::ordered_json to_json(const ResultReport& r) {
  nlohmann::ordered_json j;
  j["algorithm"] = r.algorithm;
  j["verdict"] = r.verdict();
  j["n"] = r.n;
  j["m"] = r.m;
  if (r.bipartite) {
    j["sides"] = {r.x, r.y};
  } else {
    j["cycle"] = r.cycle;
    j["cycle_edges"] = r.cycle_edges;
  }
  if (r.elapsed_ns) j["elapsed_ns"] = *r.elapsed_ns;
  return j;
}

}  // namespace konig
