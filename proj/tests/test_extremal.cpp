#include <gtest/gtest.h>

#include <map>

#include "rvdkit/enumerate.hpp"
#include "rvdkit/extremal.hpp"
#include "rvdkit/solver.hpp"

using namespace rvd;

TEST(Extremal, MinSizeExamples) {
  EXPECT_EQ(min_size(6, 3), 7);
  EXPECT_EQ(min_size(4, 4), 6);
  for (int n = 4; n <= 12; ++n) EXPECT_EQ(min_size(n, 1), n - 1);
  EXPECT_EQ(min_size(7, 7), 14);
  EXPECT_THROW(min_size(3, 2), std::invalid_argument);
  EXPECT_THROW(min_size(5, 6), std::invalid_argument);
}

TEST(Extremal, MaxSizeExamples) {
  auto b53 = max_size_bounds(5, 3);
  EXPECT_EQ(b53.lower, 8);
  EXPECT_EQ(b53.upper, 8);
  EXPECT_EQ(wheel_graph(4).size(), 8u);
  EXPECT_EQ(rvd_exact(wheel_graph(4)).value, 3);
  auto b72 = max_size_bounds(7, 2);
  EXPECT_EQ(b72.lower, 9);
  EXPECT_EQ(b72.upper, 9);
  EXPECT_EQ(max_size_bounds(9, 4).upper, 26);
  EXPECT_EQ(max_size_bounds(9, 4).lower, 10);
  EXPECT_THROW(max_size_bounds(5, 1), std::invalid_argument);
}

TEST(Extremal, SizeBoundInvariant) {
  for (int n = 4; n <= 20; ++n)
    for (int k = 1; k <= n; ++k) {
      auto b = size_bound(n, k);
      EXPECT_LE(b.min_size, b.max_upper) << n << ' ' << k;
    }
}

TEST(Extremal, SparseWitness) {
  auto w = gen_sparse_witness(6, 3);
  EXPECT_EQ(w.graph.size(), 7u);
  EXPECT_EQ(rvd_exact(w.graph).value, 3);
  EXPECT_TRUE(is_rvd_coloring(w.graph, w.coloring));

  auto w54 = gen_sparse_witness(5, 4);
  EXPECT_EQ(w54.graph.size(), 7u);
  EXPECT_TRUE(w54.graph.adjacent(0, 1));
  EXPECT_EQ(rvd_exact(w54.graph).value, 4);

  for (int n = 3; n <= 9; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      auto g = gen_sparse_witness(n, k);
      EXPECT_EQ(static_cast<int>(g.graph.size()), n + k - 2) << n << ' ' << k;
      EXPECT_TRUE(connected(g.graph));
      EXPECT_TRUE(is_rvd_coloring(g.graph, g.coloring)) << n << ' ' << k;
      EXPECT_EQ(g.coloring.palette_size(), k) << n << ' ' << k;
      EXPECT_EQ(rvd_exact(g.graph).value, k) << n << ' ' << k;
    }
}

TEST(Extremal, SparseFull) {
  EXPECT_EQ(gen_sparse_full(6).size(), 11u);
  EXPECT_EQ(gen_sparse_full(7).size(), 14u);
  EXPECT_EQ(rvd_exact(gen_sparse_full(6)).value, 6);
  for (int n = 4; n <= 9; ++n) EXPECT_EQ(rvd_exact(gen_sparse_full(n)).value, n) << n;
  for (int n = 4; n <= 50; ++n) {
    const Graph h = gen_sparse_full(n);
    EXPECT_EQ(static_cast<int>(h.size()), min_size(n, n)) << n;
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y) ASSERT_GE(common_neighbors(h, x, y).size(), 2u) << n;
  }
}

TEST(Extremal, TriangleChainAndCliqueChain) {
  const Graph t5 = gen_triangle_chain(5);
  EXPECT_EQ(t5.size(), 6u);
  EXPECT_EQ(rvd_exact(t5).value, 2);
  const Graph t4 = gen_triangle_chain(4);
  EXPECT_EQ(t4.size(), 4u);
  EXPECT_EQ(rvd_exact(t4).value, 2);
  for (int n = 3; n <= 15; ++n) EXPECT_EQ(static_cast<int>(gen_triangle_chain(n).size()), 3 * (n - 1) / 2);

  const Graph c94 = gen_clique_chain(9, 4);
  EXPECT_GE(static_cast<int>(c94.size()), max_size_bounds(9, 4).lower);
  EXPECT_EQ(rvd_exact(c94).value, 4);
  for (int k = 4; k <= 6; ++k)
    for (int n = k; n <= 12; ++n) {
      const Graph g = gen_clique_chain(n, k);
      EXPECT_TRUE(connected(g));
      EXPECT_GE(static_cast<int>(g.size()), max_size_bounds(n, k).lower) << n << ' ' << k;
      EXPECT_EQ(rvd_exact(g).value, k) << n << ' ' << k;
    }
}

TEST(Extremal, MinSizeTightOverCatalog) {
  for (int n = 4; n <= 7; ++n) {
    std::map<int, int> fewest;
    for (const auto& g : enumerate_connected(n)) {
      const int k = rvd_exact(g).value;
      const int m = static_cast<int>(g.size());
      auto it = fewest.find(k);
      if (it == fewest.end() || m < it->second) fewest[k] = m;
      EXPECT_GE(m, min_size(n, k));
    }
    for (int k = 1; k <= n; ++k) EXPECT_EQ(fewest.at(k), min_size(n, k)) << n << ' ' << k;
  }
}

TEST(Extremal, MaxSizeAgainstCatalog) {
  // The k = 2, 3 value is always an upper bound; it is reached for k = 2 at
  // every order, and for k = 3 where a wheel with rim divisible by 4 exists.
  for (int n = 4; n <= 7; ++n) {
    std::map<int, int> most;
    for (const auto& g : enumerate_connected(n)) {
      const int k = rvd_exact(g).value;
      most[k] = std::max(most[k], static_cast<int>(g.size()));
    }
    for (int k = 2; k <= n; ++k) {
      auto b = max_size_bounds(n, k);
      EXPECT_LE(most.at(k), b.upper) << n << ' ' << k;
      if (k >= 4) EXPECT_GE(most.at(k), b.lower) << n << ' ' << k;
    }
    EXPECT_EQ(most.at(2), max_size_bounds(n, 2).upper) << n;
    if (n == 5) EXPECT_EQ(most.at(3), max_size_bounds(n, 3).upper);
  }
}
