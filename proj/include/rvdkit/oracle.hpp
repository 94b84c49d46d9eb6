#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <vector>

#include "rvdkit/coloring.hpp"
#include "rvdkit/graph.hpp"

// Brute-force reference answers for the audit. Exponential in n; meant for
// graphs with at most a dozen vertices.
namespace rvd::oracle {

/// Is y unreachable from x once the edge xy and every vertex flagged in
/// `removed` are gone? Plain adjacency-matrix flood fill.
inline bool cuts(const Graph& g, Vertex x, Vertex y, const std::vector<bool>& removed) {
  const int n = g.order();
  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  std::vector<Vertex> todo{x};
  reached[x] = true;
  while (!todo.empty()) {
    Vertex u = todo.back();
    todo.pop_back();
    for (Vertex w = 0; w < n; ++w) {
      if (reached[w] || removed[w] || !g.adjacent(u, w)) continue;
      if (u == x && w == y) continue;
      reached[w] = true;
      todo.push_back(w);
    }
  }
  return !reached[y];
}

/// Smallest x-y vertex-cut of G - xy, by trying every subset of V \ {x, y}.
inline int min_vertex_cut(const Graph& g, Vertex x, Vertex y) {
  const int n = g.order();
  int best = n;
  std::vector<bool> removed(static_cast<std::size_t>(n));
  for (Mask s = 0; s < bit(n); ++s) {
    if (s & (bit(x) | bit(y))) continue;
    const int size = std::popcount(s);
    if (size >= best) continue;
    for (Vertex v = 0; v < n; ++v) removed[v] = (s >> v) & 1;
    if (cuts(g, x, y, removed)) best = size;
  }
  return best;
}

/// Size of a smallest rainbow x-y vertex-cut (with the extra rainbow
/// condition on S + x or S + y for adjacent pairs), or nothing.
inline std::optional<int> min_rainbow_cut(const Graph& g, const VertexColoring& c, Vertex x, Vertex y) {
  const int n = g.order();
  std::optional<int> best;
  std::vector<bool> removed(static_cast<std::size_t>(n));
  for (Mask s = 0; s < bit(n); ++s) {
    if (s & (bit(x) | bit(y))) continue;
    const int size = std::popcount(s);
    if (best && size >= *best) continue;
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      removed[v] = (s >> v) & 1;
      if (removed[v]) members.push_back(v);
    }
    auto rainbow_with = [&](std::optional<Vertex> extra) {
      std::vector<int> seen;
      for (Vertex v : members) seen.push_back(c[v]);
      if (extra) seen.push_back(c[*extra]);
      std::sort(seen.begin(), seen.end());
      return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    };
    bool ok = g.adjacent(x, y) ? (rainbow_with(x) || rainbow_with(y)) : rainbow_with(std::nullopt);
    if (ok && cuts(g, x, y, removed)) best = size;
  }
  return best;
}

/// Does every pair have a rainbow cut?
inline bool is_rvd_coloring(const Graph& g, const VertexColoring& c) {
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y)
      if (!min_rainbow_cut(g, c, x, y)) return false;
  return true;
}

}  // namespace rvd::oracle
