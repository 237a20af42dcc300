#include <gtest/gtest.h>

#include <sstream>

#include "doat/generate.hpp"
#include "doat/graph.hpp"
#include "test_support.hpp"

namespace doat {
namespace {

TEST(ParseGraph, SingleEdge) {
  const auto g = parse_graph("2 1\n0 1 5");
  EXPECT_EQ(g.vertex_count(), 2);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1, 5}));
}

TEST(ParseGraph, UnitTriangleWithComments) {
  const auto g = parse_graph("# triangle\n3 3\n0 1 1\n\n1 2 1\n# closing edge\n2 0 1\n");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}));
}

TEST(ParseGraph, ParallelEdgesAllowed) {
  const auto g = parse_graph("3 3\n0 1 1\n0 1 2\n1 2 7\n");
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.degree(0), 2u);
}

TEST(ParseGraph, Errors) {
  EXPECT_THROW(parse_graph("2 1\n0 1 0"), GraphError);    // nonpositive length
  EXPECT_THROW(parse_graph("2 1\n0 1 -3"), GraphError);
  EXPECT_THROW(parse_graph("2 1\n0 2 1"), GraphError);    // out of range
  EXPECT_THROW(parse_graph("2 1\n1 1 1"), GraphError);    // self-loop
  EXPECT_THROW(parse_graph("2 1\n0 1"), GraphError);      // malformed
  EXPECT_THROW(parse_graph("2 1\n0 1 x"), GraphError);
  EXPECT_THROW(parse_graph("2 1\n0 1 1 4"), GraphError);
  EXPECT_THROW(parse_graph("3 2\n0 1 1\n"), GraphError);  // too few edges
  EXPECT_THROW(parse_graph("2 1\n0 1 1\n0 1 1\n"), GraphError);
  EXPECT_THROW(parse_graph("# nothing\n"), GraphError);
}

TEST(ParseGraph, WriteThenParseIsIdentity) {
  SplitMix64 rng(99);
  for (int round = 0; round < 50; ++round) {
    GenSpec spec;
    spec.n = static_cast<Vertex>(rng.in_range(3, 80));
    spec.seed = rng.next();
    spec.hi = 1000;
    spec.cycle = static_cast<Vertex>(rng.in_range(3, spec.n));
    const auto g = round % 2 ? random_tree(spec) : random_unicycle(spec);
    const auto text = to_string(g);
    const auto back = parse_graph(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(to_string(back), text);
  }
}

TEST(WeightedGraph, RejectsBadEdges) {
  WeightedGraph g(3);
  EXPECT_THROW(g.add_edge(0, 0, 1), GraphError);
  EXPECT_THROW(g.add_edge(0, 3, 1), GraphError);
  EXPECT_THROW(g.add_edge(0, 1, 0), GraphError);
  EXPECT_NO_THROW(g.add_edge(0, 1, 1));
}

TEST(WeightedGraph, TreeValidation) {
  EXPECT_NO_THROW(require_tree(testing::unit_path(5)));
  EXPECT_NO_THROW(require_tree(WeightedGraph(1)));
  EXPECT_THROW(require_tree(testing::example_e1()), GraphError);
  WeightedGraph forest(4);
  forest.add_edge(0, 1, 1);
  forest.add_edge(0, 1, 1);
  forest.add_edge(2, 3, 1);
  EXPECT_THROW(require_tree(forest), GraphError);
}

}  // namespace
}  // namespace doat
