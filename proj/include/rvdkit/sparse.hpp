#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "rvdkit/coloring.hpp"
#include "rvdkit/errors.hpp"
#include "rvdkit/graph.hpp"
#include "rvdkit/structure.hpp"

namespace rvd {

/// A chordless cycle C with G - V(C) connected, for connected G with minimum
/// degree at least 3. Shortest such cycles are preferred, then the
/// lexicographically least vertex sequence.
inline VertexSet find_removable_cycle(const Graph& g) {
  if (g.order() < 4 || !connected(g) || g.min_degree() < 3)
    throw std::invalid_argument("removable cycle search needs a connected graph with minimum degree >= 3");
  VertexSet found;
  for (int len = 3; len <= g.order() && found.empty(); ++len) {
    for_each_cycle_of_length(g, len, [&](const VertexSet& cycle) {
      if (!is_chordless(g, cycle)) return false;
      if (!connected(delete_vertices(g, cycle).graph)) return false;
      found = cycle;
      return true;
    });
  }
  if (found.empty())
    throw InvariantViolation("no cycle leaves the rest connected although minimum degree >= 3");
  return found;
}

namespace detail {

/// Colors g with at most m - n + 2 colors, drawn from 1..m-n+2, by peeling
/// the structure back to a tree.
inline std::vector<int> sparse_color(const Graph& g) {
  const int n = g.order();
  const int k = static_cast<int>(g.size()) - n + 2;
  std::vector<int> colors(static_cast<std::size_t>(n), 1);
  if (k <= 1) return colors;  // tree

  if (g.min_degree() == 1) {
    // Strip pendant trees; they keep color 1.
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v)
      if ((deg[v] = g.degree(v)) == 1) leaves.push_back(v);
    VertexSet stripped;
    while (!leaves.empty()) {
      Vertex v = leaves.back();
      leaves.pop_back();
      if (gone[v]) continue;
      gone[v] = true;
      stripped.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!gone[w] && --deg[w] == 1) leaves.push_back(w);
    }
    auto rest = delete_vertices(g, stripped);
    auto inner = sparse_color(rest.graph);
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v]) colors[v] = inner[rest.old_to_new[v]];
    return colors;
  }

  if (g.min_degree() == 2) {
    const auto cuts = block_decomposition(g).cut_vertices;
    auto is_cut = [&](Vertex v) { return std::binary_search(cuts.begin(), cuts.end(), v); };

    for (Vertex u = 0; u < n; ++u) {
      if (g.degree(u) != 2 || is_cut(u)) continue;
      // Non-cut vertex of degree 2: drop uw, color the rest, then extend.
      const Vertex w = g.neighbors(u)[0];
      const Vertex w2 = g.neighbors(u)[1];
      colors = sparse_color(delete_edge(g, u, w));
      if (colors[w] != colors[w2]) {
        colors[u] = k;
      } else {
        colors[u] = k;
        colors[w] = k;
      }
      return colors;
    }

    // Every degree-2 vertex is a cut vertex: suppress them all, color the
    // remaining graph (minimum degree >= 3) and give them color 1.
    std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
    VertexSet suppressed;
    for (Vertex u = 0; u < n; ++u) {
      if (g.degree(u) != 2) continue;
      const Vertex a = *adj[u].begin();
      const Vertex b = *adj[u].rbegin();
      adj[a].erase(u);
      adj[b].erase(u);
      if (!adj[a].insert(b).second || !adj[b].insert(a).second)
        throw InvariantViolation("suppressing a degree-2 cut vertex created a parallel edge");
      adj[u].clear();
      suppressed.push_back(u);
    }
    std::vector<Vertex> old_to_new(static_cast<std::size_t>(n), -1);
    int kept = 0;
    for (Vertex v = 0; v < n; ++v)
      if (!std::binary_search(suppressed.begin(), suppressed.end(), v)) old_to_new[v] = kept++;
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : adj[v])
        if (v < w) edges.emplace_back(old_to_new[v], old_to_new[w]);
    Graph reduced = Graph::from_edges(kept, edges);
    if (reduced.min_degree() < 3)
      throw InvariantViolation("suppressing degree-2 cut vertices left a vertex of degree < 3");
    auto inner = sparse_color(reduced);
    for (Vertex v = 0; v < n; ++v) colors[v] = old_to_new[v] >= 0 ? inner[old_to_new[v]] : 1;
    return colors;
  }

  // Minimum degree >= 3: remove the edges of a removable cycle and give its
  // vertices fresh colors.
  const VertexSet cycle = find_removable_cycle(g);
  const int len = static_cast<int>(cycle.size());
  std::vector<Edge> cycle_edges;
  for (int i = 0; i < len; ++i) {
    Vertex a = cycle[i], b = cycle[(i + 1) % len];
    cycle_edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(cycle_edges.begin(), cycle_edges.end());
  std::vector<Edge> rest;
  for (auto e : g.edges())
    if (!std::binary_search(cycle_edges.begin(), cycle_edges.end(), e)) rest.push_back(e);
  Graph thinned = Graph::from_edges(n, rest);
  if (!connected(thinned))
    throw InvariantViolation("removing the edges of a removable cycle disconnected the graph");
  colors = sparse_color(thinned);
  for (int i = 0; i < len; ++i) colors[cycle[i]] = k - len + 1 + i;
  return colors;
}

}  // namespace detail

/// Rainbow vertex-disconnection coloring with at most m - n + 2 colors,
/// built constructively (no search).
inline VertexColoring sparse_coloring(const Graph& g) {
  if (g.order() < 1 || !connected(g)) throw std::invalid_argument("sparse coloring needs a connected graph");
  return VertexColoring(detail::sparse_color(g)).normalized();
}

}  // namespace rvd
