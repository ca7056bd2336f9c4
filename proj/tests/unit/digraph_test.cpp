#include <gtest/gtest.h>

#include "earcolor/cycles.hpp"
#include "earcolor/digraph.hpp"
#include "earcolor/error.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace earcolor {
namespace {

using testing::digraph;
using testing::graph;

TEST(Digraph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(digraph(2, {{0, 0}}), InputError);
  EXPECT_THROW(digraph(2, {{0, 1}, {0, 1}}), InputError);
  EXPECT_THROW(digraph(2, {{0, 2}}), InputError);
  EXPECT_NO_THROW(digraph(2, {{0, 1}, {1, 0}}));
  EXPECT_THROW(graph(2, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(graph(2, {{1, 1}}), InputError);
}

TEST(Digraph, AdjacencyIsSorted) {
  const Digraph d = digraph(4, {{0, 3}, {0, 1}, {2, 0}, {0, 2}});
  ASSERT_EQ(d.out_neighbors(0).size(), 3u);
  EXPECT_TRUE(std::is_sorted(d.out_neighbors(0).begin(), d.out_neighbors(0).end()));
  EXPECT_EQ(d.in_neighbors(0).size(), 1u);
  const std::vector<Arc> expected{{0, 1}, {0, 2}, {0, 3}, {2, 0}};
  EXPECT_EQ(d.arcs(), expected);
}

TEST(StronglyConnected, Examples) {
  EXPECT_TRUE(strongly_connected(testing::directed_cycle(3)));
  EXPECT_FALSE(strongly_connected(testing::directed_path(3)));
  EXPECT_FALSE(strongly_connected(digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}})));
  EXPECT_TRUE(strongly_connected(Digraph(1)));
  EXPECT_TRUE(strongly_connected(Digraph(0)));
}

TEST(StrongComponents, Examples) {
  using Parts = std::vector<std::vector<Vertex>>;
  EXPECT_EQ(strong_components(digraph(3, {{0, 1}, {1, 0}, {1, 2}})), (Parts{{0, 1}, {2}}));
  EXPECT_EQ(strong_components(testing::directed_cycle(4)), (Parts{{0, 1, 2, 3}}));
  EXPECT_EQ(strong_components(testing::transitive_tournament(3)), (Parts{{0}, {1}, {2}}));
  EXPECT_EQ(strong_components(digraph(3, {{2, 1}, {1, 0}})), (Parts{{2}, {1}, {0}}));
}

TEST(IsAcyclic, Examples) {
  EXPECT_TRUE(is_acyclic(testing::directed_path(3)));
  EXPECT_FALSE(is_acyclic(digraph(2, {{0, 1}, {1, 0}})));
  EXPECT_TRUE(is_acyclic(Digraph(5)));
  EXPECT_FALSE(find_cycle(testing::directed_path(4)).has_value());
  auto c = find_cycle(digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->vertices, (std::vector<Vertex>{1, 2, 3}));
}

TEST(Bidirect, Examples) {
  EXPECT_EQ(bidirect(graph(2, {{0, 1}})).arcs(), (std::vector<Arc>{{0, 1}, {1, 0}}));
  EXPECT_EQ(bidirect(testing::complete_graph(3)).arc_count(), 6u);
  const Digraph empty = bidirect(UndirectedGraph(4));
  EXPECT_EQ(empty.vertex_count(), 4);
  EXPECT_EQ(empty.arc_count(), 0u);
}

TEST(UnderlyingGraph, Examples) {
  EXPECT_EQ(underlying_graph(digraph(2, {{0, 1}, {1, 0}})).edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(underlying_graph(testing::directed_cycle(3)), testing::complete_graph(3));
  EXPECT_EQ(underlying_graph(Digraph(3)).edge_count(), 0u);
}

TEST(InducedSubdigraph, Examples) {
  const Digraph c3 = testing::directed_cycle(3);
  const std::vector<Vertex> pair{0, 1};
  auto sub = induced_subdigraph(c3, pair);
  EXPECT_EQ(sub.graph.arcs(), (std::vector<Arc>{{0, 1}}));
  const std::vector<Vertex> reversed{2, 0};
  sub = induced_subdigraph(c3, reversed);
  EXPECT_EQ(sub.to_host, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(sub.from_host, (std::vector<Vertex>{0, -1, 1}));
  EXPECT_EQ(sub.graph.arcs(), (std::vector<Arc>{{1, 0}}));
  const std::vector<Vertex> all{0, 1, 2};
  EXPECT_EQ(induced_subdigraph(c3, all).graph, c3);
  EXPECT_EQ(induced_subdigraph(c3, std::vector<Vertex>{}).graph.vertex_count(), 0);
  EXPECT_THROW(induced_subdigraph(c3, std::vector<Vertex>{3}), InputError);
  EXPECT_THROW(induced_subdigraph(c3, std::vector<Vertex>{1, 1}), InputError);
}

TEST(VertexCycle, CanonicalRotationKeepsDirection) {
  EXPECT_EQ(VertexCycle::canonical({3, 1, 2}).vertices, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(VertexCycle::canonical({3, 2, 1}).vertices, (std::vector<Vertex>{1, 3, 2}));
}

TEST(DigraphProperties, RandomSweep) {
  testing::Rng rng(20261014);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const double p = 0.1 + 0.1 * static_cast<double>(rng() % 6);
    const Digraph d = testing::random_digraph(n, p, rng);
    const auto g = underlying_graph(d);
    ASSERT_EQ(underlying_graph(bidirect(g)), g);
    ASSERT_EQ(strongly_connected(d), strong_components(d).size() == 1);
    ASSERT_EQ(strongly_connected(d), testing::naive_strongly_connected(d));
    ASSERT_EQ(is_acyclic(d), testing::naive_cycles(d).empty());
    ASSERT_EQ(is_acyclic(d), enumerate_cycles(d).cycles.empty());
    // Topological order of the condensation.
    const auto parts = strong_components(d);
    std::vector<int> index(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (Vertex v : parts[i]) index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    for (const Arc& a : d.arcs())
      ASSERT_LE(index[static_cast<std::size_t>(a.tail)], index[static_cast<std::size_t>(a.head)]);
    for (const auto& part : parts) {
      ASSERT_TRUE(testing::naive_strongly_connected(induced_subdigraph(d, part).graph));
    }
  }
}

}  // namespace
}  // namespace earcolor
