#pragma once

// Edge-list and DIMACS readers/writers, and Graphviz export of a certified outcome.
//
// Edge list:  optional header "n <count>" as the first content line, then one "u v" per line,
//             0-based. Lines starting with '#' are comments. Without a header the vertex count
//             is 1 + the largest id. Repeated lines are parallel edges.
// DIMACS:     "c ..." comments, exactly one "p edge <n> <m>", then m lines "e <u> <v>", 1-based.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "konig/certificates.hpp"
#include "konig/errors.hpp"
#include "konig/graph.hpp"

namespace konig {

enum class FileFormat { edgelist, dimacs };

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::uint64_t parse_count(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  if (value >= kNoVertex) throw ParseError(line, "value " + std::string(tok) + " is too large");
  return value;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    fn(++line_no, text.substr(pos, nl - pos));
    pos = nl + 1;
  }
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> declared;
  bool seen_content = false;
  std::uint64_t max_id = 0;
  bool any_edge = false;
  std::vector<EndpointPair> pairs;

  detail::for_each_line(text, [&](std::size_t line, std::string_view raw) {
    const auto tokens = detail::split_ws(raw);
    if (tokens.empty() || tokens[0].front() == '#') return;
    if (tokens[0] == "n") {
      if (seen_content) throw ParseError(line, "the 'n' header must be the first content line");
      if (tokens.size() != 2) throw ParseError(line, "header must be 'n <count>'");
      declared = detail::parse_count(tokens[1], line);
      seen_content = true;
      return;
    }
    seen_content = true;
    if (tokens.size() != 2) throw ParseError(line, "expected 'u v'");
    const auto u = detail::parse_count(tokens[0], line);
    const auto v = detail::parse_count(tokens[1], line);
    if (declared && (u >= *declared || v >= *declared)) {
      throw ParseError(line, "vertex out of range for n = " + std::to_string(*declared));
    }
    max_id = std::max({max_id, u, v});
    any_edge = true;
    pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  });

  const auto n = declared ? *declared : (any_edge ? max_id + 1 : 0);
  return build_graph(n, pairs);
}

inline Graph parse_dimacs(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::uint64_t m = 0;
  std::size_t last_line = 0;
  std::vector<EndpointPair> pairs;

  detail::for_each_line(text, [&](std::size_t line, std::string_view raw) {
    last_line = line;
    const auto tokens = detail::split_ws(raw);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (n) throw ParseError(line, "duplicate 'p' line");
      if (tokens.size() != 4 || tokens[1] != "edge") throw ParseError(line, "expected 'p edge <n> <m>'");
      n = detail::parse_count(tokens[2], line);
      m = detail::parse_count(tokens[3], line);
      pairs.reserve(m);
      return;
    }
    if (tokens[0] == "e") {
      if (!n) throw ParseError(line, "edge line before the 'p' line");
      if (tokens.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
      const auto u = detail::parse_count(tokens[1], line);
      const auto v = detail::parse_count(tokens[2], line);
      if (u < 1 || u > *n || v < 1 || v > *n) {
        throw ParseError(line, "vertex outside [1, " + std::to_string(*n) + "]");
      }
      pairs.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
      return;
    }
    throw ParseError(line, "unknown line type '" + std::string(tokens[0]) + "'");
  });

  if (!n) throw ParseError(last_line, "missing 'p edge <n> <m>' line");
  if (pairs.size() != m) {
    throw ParseError(last_line, "'p' line declares " + std::to_string(m) + " edges, found " +
                                    std::to_string(pairs.size()));
  }
  return build_graph(*n, pairs);
}

inline Graph parse_graph(std::string_view text, FileFormat format) {
  return format == FileFormat::dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Always writes the header, so isolated trailing vertices survive a round trip.
inline std::string write_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

inline std::string write_dimacs(const Graph& g) {
  std::string out =
      "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  }
  return out;
}

inline std::string write_graph(const Graph& g, FileFormat format) {
  return format == FileFormat::dimacs ? write_dimacs(g) : write_edge_list(g);
}

inline constexpr std::string_view kDotSideColors[2] = {"#8ecae6", "#ffb703"};

/// X and Y get two fill colors; an odd cycle's edges are drawn bold red.
inline std::string write_dot(const Graph& g, const CheckOutcome& outcome) {
  if (!verify_outcome(g, outcome)) throw InputError("write_dot needs an outcome verified against the graph");

  std::vector<std::uint8_t> highlight(g.edge_count(), 0);
  if (!outcome.is_bipartite()) {
    for (const auto e : outcome.odd_cycle().edges) highlight[e] = 1;
  }

  std::string out = "graph konig {\n";
  if (outcome.is_bipartite()) {
    out += "  node [shape=circle, style=filled];\n";
    const auto& side = outcome.bipartition().side;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      out += "  " + std::to_string(v) + " [fillcolor=\"" +
             std::string(kDotSideColors[side[v]]) + "\"];\n";
    }
  } else {
    out += "  node [shape=circle];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
  }
  for (const auto& e : g.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
    if (highlight[e.id]) out += " [color=red, penwidth=3]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace konig
