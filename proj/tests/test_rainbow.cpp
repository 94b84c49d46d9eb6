#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rvdkit/enumerate.hpp"
#include "rvdkit/io.hpp"
#include "rvdkit/rainbow.hpp"

using namespace rvd;

namespace {

// C_4 as v1..v4 = 0..3 with the cycle coloring 1,1,2,2.
const VertexColoring kC4Coloring{1, 1, 2, 2};

std::vector<int> sample(std::mt19937_64& rng, int n) {
  const int palette = std::uniform_int_distribution<int>(1, 3)(rng);
  std::vector<int> c(n);
  for (int& v : c) v = std::uniform_int_distribution<int>(1, palette)(rng);
  return c;
}

}  // namespace

TEST(Rainbow, IsRainbow) {
  EXPECT_TRUE(is_rainbow(kC4Coloring, std::span<const Vertex>{}));
  const Vertex v2v4[] = {1, 3};
  const Vertex v1v2[] = {0, 1};
  EXPECT_TRUE(is_rainbow(kC4Coloring, v2v4));
  EXPECT_FALSE(is_rainbow(kC4Coloring, v1v2));
}

TEST(Rainbow, IsVertexCut) {
  const Vertex middle[] = {1};
  EXPECT_TRUE(is_vertex_cut(path_graph(3), 0, 2, middle));
  EXPECT_TRUE(is_vertex_cut(path_graph(2), 0, 1, std::span<const Vertex>{}));
  EXPECT_FALSE(is_vertex_cut(cycle_graph(4), 0, 2, middle));
  const Vertex bad[] = {0};
  EXPECT_THROW(is_vertex_cut(path_graph(3), 0, 2, bad), std::invalid_argument);
}

TEST(Rainbow, CycleNonadjacentPair) {
  auto cert = find_rainbow_cut(cycle_graph(4), kC4Coloring, 0, 2);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->cut, (VertexSet{1, 3}));
  EXPECT_FALSE(cert->witness);
}

TEST(Rainbow, CycleAdjacentPair) {
  auto cert = find_rainbow_cut(cycle_graph(4), kC4Coloring, 0, 1);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->cut.size(), 1u);
  EXPECT_TRUE(cert->cut == VertexSet{2} || cert->cut == VertexSet{3});
  ASSERT_TRUE(cert->witness);
  EXPECT_EQ(kC4Coloring[*cert->witness], 1);
  EXPECT_TRUE(certificate_holds(cycle_graph(4), kC4Coloring, *cert));
}

TEST(Rainbow, CompleteFourWithThreeColorsFails) {
  const Graph k4 = complete_graph(4);
  const VertexColoring c{1, 1, 2, 3};
  auto v = verify_coloring(k4, c);
  EXPECT_FALSE(v.valid);
  ASSERT_TRUE(v.violation);
  EXPECT_FALSE(find_rainbow_cut(k4, c, v.violation->first, v.violation->second));
  EXPECT_FALSE(brute::valid(k4, c.colors()));
}

TEST(Rainbow, TreeWithOneColor) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : enumerate_connected(n))
      if (g.size() == static_cast<std::size_t>(n - 1)) EXPECT_TRUE(verify_coloring(g, VertexColoring::uniform(n)).valid);
}

TEST(Rainbow, WheelFourColoring) {
  // Rim v1..v4 = 0..3, hub 4.
  auto v = verify_coloring(wheel_graph(4), VertexColoring{1, 1, 2, 2, 3});
  EXPECT_TRUE(v.valid);
  EXPECT_EQ(v.certificates.size(), 10u);
}

TEST(Rainbow, TriangleWithTwoColorsIsValid) {
  // Pair (0,1) shares color 1; S = {2} with S + 0 rainbow cuts 0 from 1 once
  // the edge is gone. Consistent with the triangle needing only two colors.
  const Graph k3 = complete_graph(3);
  const VertexColoring c{1, 1, 2};
  EXPECT_TRUE(is_rvd_coloring(k3, c));
  EXPECT_TRUE(brute::valid(k3, c.colors()));
  EXPECT_FALSE(is_rvd_coloring(k3, VertexColoring::uniform(3)));
}

TEST(Rainbow, CertificatesAreSoundAndCoverAllPairs) {
  const Graph g = wheel_graph(8);
  const VertexColoring c{1, 1, 2, 2, 1, 1, 2, 2, 3};
  auto v = verify_coloring(g, c);
  ASSERT_TRUE(v.valid);
  ASSERT_EQ(v.certificates.size(), 36u);
  for (const auto& cert : v.certificates) {
    EXPECT_TRUE(certificate_holds(g, c, cert));
    for (Vertex s : cert.cut) {
      EXPECT_NE(s, cert.x);
      EXPECT_NE(s, cert.y);
    }
  }
}

TEST(Rainbow, AgreesWithOracleOnSampledColorings) {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : enumerate_connected(n))
      for (int s = 0; s < 20; ++s) {
        auto colors = sample(rng, n);
        VertexColoring c(colors);
        for (Vertex x = 0; x < n; ++x)
          for (Vertex y = x + 1; y < n; ++y) {
            const bool want = brute::has_rainbow_cut(g, colors, x, y);
            ASSERT_EQ(rainbow_cut_exists(g, c, x, y), want) << to_graph6(g);
            auto cert = find_rainbow_cut(g, c, x, y);
            ASSERT_EQ(cert.has_value(), want) << to_graph6(g);
            if (cert) EXPECT_TRUE(certificate_holds(g, c, *cert));
          }
        EXPECT_EQ(is_rvd_coloring(g, c), brute::valid(g, colors));
      }
}

TEST(Rainbow, CertificateHasMinimumSize) {
  std::mt19937_64 rng(11);
  for (const auto& g : enumerate_connected(6))
    for (int s = 0; s < 5; ++s) {
      auto colors = sample(rng, 6);
      VertexColoring c(colors);
      for (Vertex x = 0; x < 6; ++x)
        for (Vertex y = x + 1; y < 6; ++y) {
          auto cert = find_rainbow_cut(g, c, x, y);
          const int want = brute::min_rainbow_cut(g, colors, x, y);
          ASSERT_EQ(cert ? static_cast<int>(cert->cut.size()) : -1, want) << to_graph6(g);
          if (cert) EXPECT_TRUE(std::is_sorted(cert->cut.begin(), cert->cut.end()));
        }
    }
}

TEST(Rainbow, LexicographicallyLeastAmongMinimum) {
  // C_6 with all-distinct colors: the pair (0,3) has minimum cuts {1,4},
  // {1,5}, {2,4}, {2,5}; the least is {1,4}.
  auto cert = find_rainbow_cut(cycle_graph(6), VertexColoring::distinct(6), 0, 3);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->cut, (VertexSet{1, 4}));
}

TEST(Rainbow, RenamingColorsKeepsVerdict) {
  std::mt19937_64 rng(3);
  for (const auto& g : enumerate_connected(5))
    for (int s = 0; s < 10; ++s) {
      auto colors = sample(rng, 5);
      std::vector<int> renamed;
      for (int col : colors) renamed.push_back(100 - 7 * col);
      EXPECT_EQ(is_rvd_coloring(g, VertexColoring(colors)), is_rvd_coloring(g, VertexColoring(renamed)));
    }
}

TEST(Rainbow, DistinctColorsOnConflictCompleteGraphs) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : enumerate_connected(n)) {
      bool all_pairs = true;
      for (Vertex x = 0; x < n && all_pairs; ++x)
        for (Vertex y = x + 1; y < n; ++y)
          if (common_neighbors(g, x, y).size() < 2) all_pairs = false;
      if (all_pairs) EXPECT_TRUE(is_rvd_coloring(g, VertexColoring::distinct(n))) << to_graph6(g);
    }
}

TEST(Rainbow, Preconditions) {
  EXPECT_THROW(find_rainbow_cut(path_graph(3), VertexColoring{1, 1}, 0, 2), std::invalid_argument);
  EXPECT_THROW(find_rainbow_cut(path_graph(3), VertexColoring{1, 1, 1}, 1, 1), std::invalid_argument);
  EXPECT_THROW(VertexColoring({1, -2}), std::invalid_argument);
}
