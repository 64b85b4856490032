#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "sbvs/canonical.hpp"
#include "sbvs/generators.hpp"

namespace sbvs {
namespace {

// Independent oracle: scan every edge subset of size 3n/2 of K_n and keep the
// connected 3-regular ones. Returns the canonical edge lists found.
std::set<std::vector<Edge>> brute_force_cubic(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) pairs.push_back({a, b});
  const std::size_t m = 3 * n / 2;
  std::set<std::vector<Edge>> out;
  // Gosper's hack over m-subsets of the pair list.
  for (std::uint64_t mask = (std::uint64_t{1} << m) - 1; mask < (std::uint64_t{1} << pairs.size());) {
    std::vector<int> degree(n, 0);
    bool ok = true;
    for (auto bits = mask; bits != 0 && ok; bits &= bits - 1) {
      const auto& e = pairs[std::countr_zero(bits)];
      ok = ++degree[e.u] <= 3 && ++degree[e.v] <= 3;
    }
    if (ok) {
      std::vector<Edge> edges;
      for (auto bits = mask; bits != 0; bits &= bits - 1) edges.push_back(pairs[std::countr_zero(bits)]);
      if (is_connected(build_graph(n, std::span<const Edge>(edges)))) out.insert(edges);
    }
    const auto c = mask & (~mask + 1);
    const auto r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return out;
}

std::set<std::vector<Edge>> streamed_cubic(std::size_t n, CubicEnumerationOptions options = {}) {
  std::set<std::vector<Edge>> out;
  std::size_t emitted = 0;
  enumerate_cubic(
      n,
      [&](const Graph& g) {
        EXPECT_TRUE(is_k_regular(g, 3));
        EXPECT_TRUE(is_connected(g));
        out.emplace(g.edges().begin(), g.edges().end());
        ++emitted;
        return true;
      },
      options);
  EXPECT_EQ(emitted, out.size()) << "labeled graph emitted twice";
  return out;
}

TEST(RandomCubic, RejectsOddOrTinyN) {
  EXPECT_THROW(random_cubic(5, 1), Error);
  EXPECT_THROW(random_cubic(2, 1), Error);
}

TEST(RandomCubic, FourVerticesIsAlwaysK4) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_EQ(random_cubic(4, seed), complete_graph(4));
}

TEST(RandomCubic, ProducesConnectedCubicGraphs) {
  for (std::size_t n = 4; n <= 40; n += 2) {
    const auto g = random_cubic(n, n * 7 + 1);
    EXPECT_TRUE(is_k_regular(g, 3)) << n;
    EXPECT_TRUE(is_connected(g)) << n;
  }
  EXPECT_TRUE(is_k_regular(random_cubic(8, 1), 3));
}

TEST(RandomCubic, ReproducibleForFixedSeed) {
  EXPECT_EQ(random_cubic(20, 99), random_cubic(20, 99));
  EXPECT_NE(random_cubic(20, 99), random_cubic(20, 100));
}

TEST(EnumerateCubic, FourVerticesGivesExactlyK4) {
  const auto graphs = streamed_cubic(4);
  ASSERT_EQ(graphs.size(), 1u);
  EXPECT_EQ(build_graph(4, std::span<const Edge>(*graphs.begin())), complete_graph(4));
}

TEST(EnumerateCubic, SixVerticesMatchesBruteForce) {
  const auto streamed = streamed_cubic(6);
  EXPECT_EQ(streamed, brute_force_cubic(6));
  std::set<CanonicalCode> classes;
  for (const auto& edges : streamed) classes.insert(canonical_form(build_graph(6, std::span<const Edge>(edges))));
  // K_{3,3} and the triangular prism
  EXPECT_EQ(classes.size(), 2u);
  EXPECT_TRUE(classes.contains(canonical_form(complete_bipartite(3, 3))));
  EXPECT_TRUE(classes.contains(canonical_form(prism_graph(3))));
}

TEST(EnumerateCubic, EightVerticesMatchesBruteForce) {
  const auto streamed = streamed_cubic(8);
  EXPECT_EQ(streamed, brute_force_cubic(8));
}

TEST(EnumerateCubic, RefusesAboveCap) {
  EXPECT_THROW(enumerate_cubic(12, [](const Graph&) { return true; }), Error);
  try {
    enumerate_cubic(12, [](const Graph&) { return true; });
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capacity);
  }
}

TEST(EnumerateCubic, StopsWhenVisitorDeclines) {
  std::size_t seen = 0;
  enumerate_cubic(8, [&](const Graph&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5u);
}

TEST(EnumerateCubic, RootFixedStreamIsSubsetCoveringAllClasses) {
  CubicEnumerationOptions fixed;
  fixed.fix_root_neighbors = true;
  const auto all = streamed_cubic(8);
  const auto restricted = streamed_cubic(8, fixed);
  std::set<CanonicalCode> all_classes, restricted_classes;
  for (const auto& edges : restricted) {
    EXPECT_TRUE(all.contains(edges));
    restricted_classes.insert(canonical_form(build_graph(8, std::span<const Edge>(edges))));
  }
  for (const auto& edges : all) all_classes.insert(canonical_form(build_graph(8, std::span<const Edge>(edges))));
  EXPECT_EQ(restricted_classes, all_classes);
}

TEST(RandomGraph, ExactEdgeCountAndDeterminism) {
  const auto g = random_graph(30, 100, 5);
  EXPECT_EQ(g.size(), 100u);
  EXPECT_EQ(g, random_graph(30, 100, 5));
  EXPECT_THROW(random_graph(4, 7, 1), Error);
}

}  // namespace
}  // namespace sbvs
