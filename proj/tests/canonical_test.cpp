#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sbvs/canonical.hpp"
#include "sbvs/generators.hpp"

namespace sbvs {
namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return build_graph(g.order(), edges);
}

// Independent oracle: try every bijection.
bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 14;
    const auto g = random_graph(n, rng() % (n * (n - 1) / 2 + 1), rng());
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(g), canonical_form(relabel(g, perm)));
    EXPECT_TRUE(isomorphic(canonical_graph(g), g));
  }
}

TEST(CanonicalForm, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 5;
    const std::size_t m = rng() % (n * (n - 1) / 2 + 1);
    const auto a = random_graph(n, m, rng());
    const auto b = random_graph(n, m, rng());
    EXPECT_EQ(isomorphic(a, b), brute_force_isomorphic(a, b));
  }
}

TEST(CanonicalForm, DistinguishesCubicPairs) {
  EXPECT_FALSE(isomorphic(complete_bipartite(3, 3), prism_graph(3)));
  EXPECT_TRUE(isomorphic(hypercube(3), prism_graph(4)));
  EXPECT_FALSE(isomorphic(petersen_graph(), prism_graph(5)));
}

TEST(ConnectedCatalog, CountsMatchKnownSequence) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto catalog = connected_graph_catalog(n);
    EXPECT_EQ(catalog.size(), expected[n - 1]) << "n=" << n;
    for (const auto& g : catalog) ASSERT_TRUE(is_connected(g));
  }
}

TEST(ConnectedCatalog, SmallLevelsAgreeWithBruteForceClasses) {
  // Oracle: every edge subset of K_n, connected ones grouped by brute-force isomorphism.
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<Graph> reps;
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1U) edges.push_back(pairs[i]);
      const auto g = build_graph(n, edges);
      if (!is_connected(g)) continue;
      if (std::none_of(reps.begin(), reps.end(), [&](const Graph& r) { return brute_force_isomorphic(r, g); }))
        reps.push_back(g);
    }
    EXPECT_EQ(connected_graph_catalog(n).size(), reps.size()) << "n=" << n;
  }
}

TEST(CubicClasses, CountsMatchKnownSequence) {
  const std::size_t expected[] = {1, 2, 5, 19};
  for (std::size_t n = 4; n <= 10; n += 2) {
    const auto classes = cubic_classes(n);
    EXPECT_EQ(classes.size(), expected[(n - 4) / 2]) << "n=" << n;
    for (const auto& g : classes) {
      EXPECT_TRUE(is_k_regular(g, 3));
      EXPECT_TRUE(is_connected(g));
    }
  }
}

TEST(CubicClasses, TenVerticesIncludesPetersen) {
  const auto classes = cubic_classes(10);
  EXPECT_TRUE(std::any_of(classes.begin(), classes.end(), [](const Graph& g) { return isomorphic(g, petersen_graph()); }));
}

}  // namespace
}  // namespace sbvs
