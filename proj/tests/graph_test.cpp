#include <gtest/gtest.h>

#include <random>

#include "sbvs/generators.hpp"
#include "sbvs/graph.hpp"

namespace sbvs {
namespace {

std::vector<std::vector<Vertex>> as_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : sets) out.push_back(s.members());
  return out;
}

TEST(BuildGraph, TriangleSatisfiesHandshake) {
  const auto g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 3u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2u);
  EXPECT_EQ(degree_sum(g), 2 * g.size());
}

TEST(BuildGraph, DuplicateAndReversedPairsCollapse) {
  const auto g = build_graph(4, {{0, 1}, {1, 0}});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.degree(2), 0u);
}

TEST(BuildGraph, RejectsSelfLoopNamingThePair) {
  try {
    build_graph(2, {{0, 0}});
    FAIL() << "self-loop accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
    EXPECT_NE(std::string(e.what()).find("(0,0)"), std::string::npos);
  }
}

TEST(BuildGraph, RejectsOutOfRangeId) { EXPECT_THROW(build_graph(2, {{0, 2}}), Error); }

TEST(BuildGraph, AdjacencyIsSortedAscending) {
  const auto g = build_graph(5, {{4, 0}, {0, 2}, {3, 0}, {0, 1}});
  const auto row = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(row.begin(), row.end()));
  EXPECT_EQ(std::vector<Vertex>(row.begin(), row.end()), (std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(ConnectedComponents, PathSplitsAtMiddle) {
  const auto g = path_graph(3);
  EXPECT_EQ(as_lists(connected_components(g, VertexSet(3, {1}))), (std::vector<std::vector<Vertex>>{{0}, {2}}));
}

TEST(ConnectedComponents, K4StaysConnected) {
  const auto g = complete_graph(4);
  EXPECT_EQ(as_lists(connected_components(g, VertexSet(4, {0, 1}))), (std::vector<std::vector<Vertex>>{{2, 3}}));
}

TEST(ConnectedComponents, CubeLosesOneCorner) {
  // 000, 011, 101 removed: 001 is isolated, the rest stays together through 110.
  const auto g = hypercube(3);
  const auto parts = as_lists(connected_components(g, VertexSet(8, {0b000, 0b011, 0b101})));
  EXPECT_EQ(parts, (std::vector<std::vector<Vertex>>{{0b001}, {0b010, 0b100, 0b110, 0b111}}));
}

TEST(ConnectedComponents, UniverseMismatchRejected) {
  EXPECT_THROW(connected_components(path_graph(3), VertexSet(4)), Error);
}

TEST(IsKRegular, Examples) {
  EXPECT_TRUE(is_k_regular(complete_graph(4), 3));
  EXPECT_FALSE(is_k_regular(path_graph(3), 3));
  EXPECT_TRUE(is_k_regular(complete_bipartite(3, 3), 3));
}

TEST(InducedSubgraph, K4TripleIsTriangle) {
  const auto sub = induced_subgraph(complete_graph(4), VertexSet(4, {0, 1, 2}));
  EXPECT_EQ(sub.graph, complete_graph(3));
  EXPECT_EQ(sub.original_id, (std::vector<Vertex>{0, 1, 2}));
}

TEST(InducedSubgraph, EmptySelectionGivesEmptyGraph) {
  const auto sub = induced_subgraph(petersen_graph(), VertexSet(10));
  EXPECT_EQ(sub.graph.order(), 0u);
  EXPECT_EQ(sub.graph.size(), 0u);
}

TEST(InducedSubgraph, AdjacentPairOnCycleKeepsOneEdge) {
  const auto sub = induced_subgraph(cycle_graph(6), VertexSet(6, {1, 2}));
  EXPECT_EQ(sub.graph.size(), 1u);
  EXPECT_EQ(sub.original_id, (std::vector<Vertex>{1, 2}));
}

TEST(GraphProperty, HandshakeAndComponentsPartitionOnRandomGraphs) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const std::size_t m = rng() % (n * (n - 1) / 2 + 1);
    const auto g = random_graph(n, m, rng());
    ASSERT_EQ(g.size(), m);
    EXPECT_EQ(degree_sum(g), 2 * g.size());

    VertexSet removed(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 4 == 0) removed.insert(v);
    const auto parts = connected_components(g, removed);
    VertexSet seen(n);
    Vertex previous_first = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      EXPECT_FALSE(parts[i].intersects(seen));
      EXPECT_FALSE(parts[i].intersects(removed));
      if (i > 0) {
        EXPECT_LT(previous_first, parts[i].first());
      }
      previous_first = parts[i].first();
      seen |= parts[i];
      // no edge leaves a component except into the removed set
      parts[i].for_each([&](Vertex v) {
        for (auto w : g.neighbors(v)) EXPECT_TRUE(parts[i].contains(w) || removed.contains(w));
      });
    }
    EXPECT_EQ(seen | removed, VertexSet::full(n));
  }
}

TEST(VertexSetTest, SetAlgebraAcrossWordBoundary) {
  VertexSet a(130, {0, 63, 64, 129});
  VertexSet b(130, {63, 100});
  EXPECT_EQ((a | b).members(), (std::vector<Vertex>{0, 63, 64, 100, 129}));
  EXPECT_EQ((a & b).members(), (std::vector<Vertex>{63}));
  EXPECT_EQ((a - b).members(), (std::vector<Vertex>{0, 64, 129}));
  EXPECT_EQ(a.complement().size(), 126u);
  EXPECT_EQ(a.first(), 0u);
  EXPECT_THROW(a.insert(130), Error);
  EXPECT_TRUE(lex_less(VertexSet(5, {1}), VertexSet(5, {1, 2})));
  EXPECT_TRUE(lex_less(VertexSet(5, {1, 2}), VertexSet(5, {1, 3})));
}

}  // namespace
}  // namespace sbvs
