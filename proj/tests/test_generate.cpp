#include <gtest/gtest.h>

#include <set>

#include "majdom/generate.hpp"
#include "majdom/spanning.hpp"

using namespace majdom;

namespace {

TEST(Rng, BoundedSamplingStaysInRangeAndIsDeterministic) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t x = a.next_below(7);
    EXPECT_LT(x, 7u);
    EXPECT_EQ(x, b.next_below(7));
  }
  EXPECT_THROW(a.next_below(0), std::invalid_argument);
  Rng c(1);
  for (int i = 0; i < 100; ++i) {
    const double u = c.next_unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Generate, CompleteGraph) {
  const Graph g = complete(4);
  EXPECT_EQ(g.edge_count(), 6);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) EXPECT_TRUE(g.has_edge(u, v));
  EXPECT_EQ(complete(1).edge_count(), 0);
}

TEST(Generate, CirculantDegreeTwoIsCycle) {
  const Graph g = circulant(5, 2);
  EXPECT_EQ(g.edges(),
            (std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
}

TEST(Generate, CirculantOddDegreeUsesAntipodalMatching) {
  const Graph g = circulant(6, 3);
  EXPECT_EQ(g.edge_count(), 9);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 3);
  EXPECT_TRUE(g.has_edge(0, 3));
  EXPECT_TRUE(g.has_edge(1, 4));
  EXPECT_TRUE(g.has_edge(2, 5));
}

TEST(Generate, CirculantValidation) {
  EXPECT_THROW(circulant(5, 3), std::invalid_argument);  // n*degree odd
  EXPECT_THROW(circulant(5, 5), std::invalid_argument);  // degree >= n
  EXPECT_THROW(circulant(4, 0), std::invalid_argument);
}

TEST(Generate, CirculantIsRegularAndConnected) {
  for (const auto [n, k] : {std::pair{7, 2}, {7, 4}, {8, 3}, {9, 6}, {12, 5}, {10, 9}}) {
    const Graph g = circulant(n, k);
    for (int v = 0; v < n; ++v) EXPECT_EQ(g.degree(v), k) << n << " " << k;
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g.edge_count() * 2, n * k);
  }
}

TEST(Generate, GnpEdgeProbabilityExtremes) {
  EXPECT_EQ(gnp(10, 0.0, 123).edge_count(), 0);
  EXPECT_EQ(gnp(10, 1.0, 123).edge_count(), 45);
  EXPECT_THROW(gnp(5, 1.5, 0), std::invalid_argument);
}

TEST(Generate, GnpIsDeterministicPerSeed) {
  EXPECT_EQ(gnp(12, 0.4, 7), gnp(12, 0.4, 7));
}

TEST(Generate, RandomTreeIsATree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph t = random_tree(9, seed);
    EXPECT_TRUE(is_tree(t));
  }
  EXPECT_EQ(random_tree(1, 0).edge_count(), 0);
  EXPECT_EQ(random_tree(2, 0).edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(random_tree(14, 5), random_tree(14, 5));
}

TEST(Generate, RandomTreeVariesAcrossSeeds) {
  std::set<std::vector<Edge>> seen;
  for (std::uint64_t seed = 0; seed < 12; ++seed)
    seen.insert(random_tree(8, seed).edges());
  EXPECT_GE(seen.size(), 3u);
}

TEST(Generate, RandomConnectedIsConnected) {
  Rng rng(9);
  for (int round = 0; round < 20; ++round) {
    const Graph g = random_connected(2 + static_cast<int>(rng.next_below(10)),
                                     rng.next_unit(), rng);
    EXPECT_TRUE(is_connected(g));
    EXPECT_GE(g.edge_count(), g.vertex_count() - 1);
  }
}

}  // namespace
