#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rvdkit/connectivity.hpp"
#include "rvdkit/enumerate.hpp"
#include "rvdkit/io.hpp"
#include "rvdkit/structure.hpp"

using namespace rvd;

namespace {

Graph bowtie() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

/// Independent graph6 writer used to cross-check the decoder.
std::string encode(int n, const std::set<std::pair<int, int>>& edges) {
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(edges.count({i, j}) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  std::string s(1, static_cast<char>(n + 63));
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v * 2 + bits[i + b];
    s += static_cast<char>(v + 63);
  }
  return s;
}

}  // namespace

TEST(Parse, EdgeListPath) {
  Graph g = parse_graph("0 1\n1 2");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Parse, Graph6CompleteFour) {
  Graph g = parse_graph("C~");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(encode(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}), "C~");
}

TEST(Parse, SelfLoopRejectedWithLine) {
  try {
    parse_graph("# loop\n0 0\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Parse, MalformedInputs) {
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 -1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 3\n0 5\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 3\nn 4\n"), ParseError);
  EXPECT_THROW(parse_graph6("C}x"), ParseError);      // too long
  EXPECT_THROW(parse_graph6("C\x01"), ParseError);    // byte below 63
  EXPECT_THROW(parse_graph6("?"), ParseError);        // n = 0
  EXPECT_NO_THROW(parse_graph6("Bw"));
  EXPECT_THROW(parse_graph6("Bx"), ParseError);       // nonzero padding
  EXPECT_THROW(parse_graphs("A_\nC\x01\n"), ParseError);
}

TEST(Parse, Graph6ByteOffsetInStream) {
  try {
    parse_graphs("A_\nC~~\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.unit(), ParseError::Unit::Byte);
    EXPECT_EQ(e.location(), 5u);
  }
}

TEST(Parse, HeaderAllowsIsolatedVertices) {
  Graph g = parse_edge_list("n 5\n0 1\n");
  EXPECT_EQ(g.order(), 5);
  EXPECT_FALSE(connected(g));
}

TEST(Parse, ColoringText) {
  auto c = parse_coloring("0 1\n1 1\n2 2\n3 2\n", 4);
  EXPECT_EQ(c, VertexColoring({1, 1, 2, 2}));
  EXPECT_THROW(parse_coloring("0 1\n0 2\n", 2), ParseError);
  EXPECT_THROW(parse_coloring("0 1\n", 2), ParseError);
  EXPECT_THROW(parse_coloring("0 1\n5 2\n", 2), ParseError);
}

TEST(Parse, RoundTripsOverAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_connected(n)) {
      EXPECT_EQ(parse_graph6(to_graph6(g)), g);
      EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
      const auto edges = g.edges();
      std::set<std::pair<int, int>> e(edges.begin(), edges.end());
      EXPECT_EQ(to_graph6(g), encode(n, e));
    }
}

TEST(Graph, RejectsLoopsAndRangeErrors) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  EXPECT_EQ(Graph::from_edges(3, {{0, 1}, {1, 0}}).size(), 1u);
}

TEST(Components, Basics) {
  EXPECT_TRUE(connected(complete_graph(4)));
  EXPECT_EQ(components(complete_graph(4)).size(), 1u);
  EXPECT_EQ(components(Graph::from_edges(4, {{0, 1}, {2, 3}})).size(), 2u);
  EXPECT_TRUE(connected(Graph(1)));
}

TEST(Deletion, Basics) {
  const Vertex v0[] = {0};
  auto k3 = delete_vertices(complete_graph(4), v0).graph;
  EXPECT_EQ(k3, complete_graph(3));
  EXPECT_EQ(delete_edge(cycle_graph(4), 3, 0), path_graph(4));
  EXPECT_THROW(delete_edge(path_graph(3), 0, 2), std::invalid_argument);
  // C_5 on 0..4: deleting the two neighbors of 0 isolates it.
  const Vertex around[] = {1, 4};
  auto sub = delete_vertices(cycle_graph(5), around);
  EXPECT_EQ(sub.graph.degree(sub.old_to_new[0]), 0);
  EXPECT_EQ(components(sub.graph).size(), 2u);
}

TEST(Blocks, Examples) {
  auto k4 = block_decomposition(complete_graph(4));
  EXPECT_EQ(k4.blocks, (std::vector<VertexSet>{{0, 1, 2, 3}}));
  EXPECT_TRUE(k4.cut_vertices.empty());

  auto bt = block_decomposition(bowtie());
  EXPECT_EQ(bt.blocks, (std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}}));
  EXPECT_EQ(bt.cut_vertices, (VertexSet{2}));

  auto p4 = block_decomposition(path_graph(4));
  EXPECT_EQ(p4.blocks.size(), 3u);
  EXPECT_EQ(p4.cut_vertices, (VertexSet{1, 2}));
}

TEST(Blocks, CutVerticesMatchDeletion) {
  // A vertex is a cut vertex iff deleting it disconnects the graph.
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : enumerate_connected(n)) {
      auto bd = block_decomposition(g);
      for (Vertex v = 0; v < n; ++v) {
        const Vertex gone[] = {v};
        bool disconnects = !connected(delete_vertices(g, gone).graph);
        bool listed = std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), v);
        EXPECT_EQ(disconnects, listed) << to_graph6(g) << " vertex " << v;
      }
      std::size_t edge_total = 0;
      for (const auto& b : bd.blocks) edge_total += induced_subgraph(g, b).graph.size();
      EXPECT_EQ(edge_total, g.size()) << to_graph6(g);
    }
}

TEST(Blocks, Preconditions) {
  EXPECT_THROW(block_decomposition(Graph(1)), std::invalid_argument);
  EXPECT_THROW(block_decomposition(Graph::from_edges(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(path_graph(6)), 0);
  EXPECT_EQ(girth(star_graph(4)), 0);
  EXPECT_EQ(girth(cycle_graph(5)), 5);
  EXPECT_EQ(girth(petersen_graph()), 5);
  EXPECT_EQ(brute::girth(petersen_graph()), 5);
}

TEST(Girth, MatchesBruteForceAndCycleRank) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : enumerate_connected(n)) {
      EXPECT_EQ(girth(g), brute::girth(g)) << to_graph6(g);
      EXPECT_EQ(girth(g) == 0, g.size() == static_cast<std::size_t>(n - 1));
      if (girth(g) > 0) EXPECT_EQ(static_cast<int>(shortest_cycle(g).size()), girth(g));
    }
  // Forest with two components: acyclic and m = n - c.
  Graph forest = Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}});
  EXPECT_EQ(girth(forest), 0);
  EXPECT_EQ(static_cast<int>(forest.size()), 5 - static_cast<int>(components(forest).size()));
}

TEST(Connectivity, LocalExamples) {
  EXPECT_EQ(local_connectivity(cycle_graph(5), 0, 2).value, 2);
  EXPECT_EQ(local_connectivity(complete_graph(4), 0, 1).value, 3);
  EXPECT_EQ(brute::min_cut(complete_graph(4), 0, 1) + 1, 3);
  EXPECT_EQ(local_connectivity(star_graph(5), 1, 2).value, 1);
}

TEST(Connectivity, GlobalExamples) {
  for (int n = 3; n <= 9; ++n) {
    EXPECT_EQ(connectivity(cycle_graph(n)), 2);
    EXPECT_EQ(upper_connectivity(cycle_graph(n)), 2);
  }
  EXPECT_EQ(connectivity(complete_graph(4)), 3);
  EXPECT_EQ(upper_connectivity(complete_graph(4)), 3);
  EXPECT_EQ(connectivity(star_graph(5)), 1);
  EXPECT_EQ(upper_connectivity(star_graph(5)), 1);
}

TEST(Connectivity, MengerAgainstBruteForce) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : enumerate_connected(n)) {
      int lowest = g.order() - 1;
      bool complete = true;
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
          const int cut = brute::min_cut(g, x, y);
          ASSERT_EQ(disjoint_paths(g, x, y), cut) << to_graph6(g) << " pair " << x << ' ' << y;
          const int local = local_connectivity(g, x, y).value;
          EXPECT_EQ(local, cut + (g.adjacent(x, y) ? 1 : 0));
          if (!g.adjacent(x, y)) {
            complete = false;
            lowest = std::min(lowest, local);
          }
        }
      EXPECT_EQ(connectivity(g), complete ? n - 1 : lowest) << to_graph6(g);
      EXPECT_LE(connectivity(g), upper_connectivity(g)) << to_graph6(g);
    }
}

TEST(CommonNeighbors, Examples) {
  EXPECT_EQ(common_neighbors(complete_graph(4), 0, 1), (VertexSet{2, 3}));
  EXPECT_EQ(common_neighbors(cycle_graph(4), 0, 2), (VertexSet{1, 3}));
  EXPECT_TRUE(common_neighbors(cycle_graph(5), 0, 1).empty());
  EXPECT_THROW(common_neighbors(cycle_graph(5), 2, 2), std::invalid_argument);
}

TEST(Enumerate, KnownCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_connected(n).size(), expected[n - 1]) << n;
  EXPECT_EQ(enumerate_connected(1).front().order(), 1);
  EXPECT_THROW(enumerate_connected(8), std::invalid_argument);
}

TEST(Enumerate, LabeledDedupMatchesBruteForceClasses) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> codes;
    std::set<std::vector<bool>> keys;
    std::size_t labeled = 0;
    for_each_connected_labeled(n, [&](const Graph& g) {
      ++labeled;
      codes.insert(canonical_code(g));
      if (n <= 5) keys.insert(brute::class_key(g));
      return true;
    });
    EXPECT_EQ(codes.size(), enumerate_connected(n).size()) << n;
    if (n <= 5) EXPECT_EQ(keys.size(), codes.size()) << n;
    if (n == 4) EXPECT_EQ(labeled, 38u);
  }
}

TEST(Enumerate, CanonicalFormIsInvariant) {
  Graph p = petersen_graph();
  std::vector<Vertex> relabel{3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
  std::vector<Edge> moved;
  for (auto [u, v] : p.edges()) moved.emplace_back(relabel[u], relabel[v]);
  EXPECT_EQ(canonical_code(p), canonical_code(Graph::from_edges(10, moved)));
  for (const auto& g : enumerate_connected(6)) EXPECT_EQ(canonical_form(g), g);
}
