#include <gtest/gtest.h>

#include "konig/algorithms/check.hpp"
#include "konig/io.hpp"
#include "support/test_graphs.hpp"

namespace konig {
namespace {

std::size_t parse_error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "expected ParseError";
  return 0;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++k;
  return k;
}

// ----------------------------------------------------------------------------
// edge list
// ----------------------------------------------------------------------------

TEST(EdgeList, InfersVertexCount) {
  EXPECT_EQ(parse_edge_list("0 1\n1 2\n"), testing::path_graph(3));
}

TEST(EdgeList, HeaderAndComments) {
  const auto g = parse_edge_list("# comment\nn 4\n0 1\n");
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(EdgeList, Loop) {
  EXPECT_EQ(parse_edge_list("0 0\n"), testing::loop_graph());
}

TEST(EdgeList, DuplicatesArePreserved) {
  EXPECT_EQ(parse_edge_list("0 1\n0 1\n").edge_count(), 2u);
}

TEST(EdgeList, WhitespaceAndBlankLines) {
  EXPECT_EQ(parse_edge_list("\n  0\t1  \r\n\n1 2"), testing::path_graph(3));
  EXPECT_EQ(parse_edge_list("").vertex_count(), 0u);
  EXPECT_EQ(parse_edge_list("n 3\n").vertex_count(), 3u);
}

TEST(EdgeList, Errors) {
  EXPECT_EQ(parse_error_line([] { parse_edge_list("0 1\n1 x\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_edge_list("0 1\n-1 2\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_edge_list("n 2\n# c\n0 2\n"); }), 3u);
  EXPECT_EQ(parse_error_line([] { parse_edge_list("0 1 2\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_edge_list("0 1\nn 4\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_edge_list("n\n"); }), 1u);
}

TEST(EdgeList, RoundTrip) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto g = testing::corpus_graph(i);
    EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
    EXPECT_EQ(parse_dimacs(write_dimacs(g)), g);
  }
}

// ----------------------------------------------------------------------------
// DIMACS
// ----------------------------------------------------------------------------

TEST(Dimacs, Triangle) {
  EXPECT_EQ(parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 3 1\n"), testing::triangle());
}

TEST(Dimacs, IsolatedVertices) {
  const auto g = parse_dimacs("c nothing here\np edge 2 0\n");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Dimacs, Errors) {
  EXPECT_EQ(parse_error_line([] { parse_dimacs("e 1 2\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_dimacs("p edge 2 1\np edge 2 1\ne 1 2\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_dimacs("p edge 2 2\ne 1 2\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_dimacs("p edge 2 1\ne 1 3\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_dimacs("p edge 2 1\ne 0 1\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_dimacs("c only\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_dimacs("p col 2 1\ne 1 2\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_dimacs("p edge 2 1\nx 1 2\n"); }), 2u);
}

TEST(Dimacs, SampleFile) {
  const auto g = parse_dimacs(read_text_file(std::string(KONIG_SAMPLE_DATA) + "/petersen.dimacs"));
  EXPECT_EQ(g, testing::petersen());
}

TEST(ReadFile, MissingFileIsInputError) {
  EXPECT_THROW(read_text_file("/nonexistent/graph.txt"), InputError);
}

// ----------------------------------------------------------------------------
// DOT
// ----------------------------------------------------------------------------

TEST(Dot, BipartiteTwoColorClasses) {
  const auto g = testing::square();
  const auto dot = write_dot(g, check(g, Algorithm::growth));
  EXPECT_EQ(count_of(dot, std::string(kDotSideColors[0])), 2u);
  EXPECT_EQ(count_of(dot, std::string(kDotSideColors[1])), 2u);
  EXPECT_EQ(count_of(dot, " -- "), 4u);
  EXPECT_EQ(dot.rfind("graph konig {", 0), 0u);
}

TEST(Dot, OddCycleHighlightsCertificateEdges) {
  const auto g = build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  const auto dot = write_dot(g, check(g, Algorithm::dsu));
  EXPECT_EQ(count_of(dot, "color=red"), 3u);
  EXPECT_EQ(count_of(dot, "2 -- 3;"), 1u);
}

TEST(Dot, EmptyGraph) {
  const auto g = build_graph(0, {});
  EXPECT_EQ(write_dot(g, Bipartition{}), "graph konig {\n  node [shape=circle, style=filled];\n}\n");
}

TEST(Dot, ByteStable) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto g = testing::corpus_graph(i);
    EXPECT_EQ(write_dot(g, check(g, Algorithm::forest)), write_dot(g, check(g, Algorithm::forest)));
  }
}

TEST(Dot, RejectsUnverifiedOutcome) {
  EXPECT_THROW(write_dot(testing::triangle(), Bipartition{{0, 1, 0}}), InputError);
  EXPECT_THROW(write_dot(testing::square(), OddCycle{{0, 1, 2, 3}, {0, 1, 2, 3}}), InputError);
}

}  // namespace
}  // namespace konig
