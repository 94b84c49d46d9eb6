#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvdkit/graph.hpp"
#include "rvdkit/structure.hpp"

namespace rvd {

/// Largest order handled by the built-in enumerator.
inline constexpr int kMaxEnumerationOrder = 7;

namespace detail {

/// Stable color refinement seeded by degree; classes are ranked by their
/// signature so the result does not depend on labels.
inline std::vector<int> refine(const Graph& g) {
  const int n = g.order();
  std::vector<int> col(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) col[v] = g.degree(v);
  int classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(col[v]);
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(col[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v)
      col[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (static_cast<int>(sorted.size()) == classes) return col;
    classes = static_cast<int>(sorted.size());
  }
}

/// Upper-triangle bits in graph6 column order, first pair most significant,
/// with new label i standing for old vertex perm[i].
inline std::uint64_t code_under(const Graph& g, const std::vector<Vertex>& perm) {
  std::uint64_t code = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
  return code;
}

/// Labeling (new -> old) maximizing code_under among those that list the
/// refinement classes in order.
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw std::invalid_argument("canonical codes support at most 11 vertices");
  const auto col = refine(g);
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) {
    return col[a] != col[b] ? col[a] < col[b] : a < b;
  });
  std::vector<std::pair<int, int>> cells;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && col[perm[j]] == col[perm[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::vector<Vertex> best = perm;
  std::uint64_t best_code = code_under(g, perm);
  std::function<void(std::size_t)> permute = [&](std::size_t cell) {
    if (cell == cells.size()) {
      auto code = code_under(g, perm);
      if (code > best_code) {
        best_code = code;
        best = perm;
      }
      return;
    }
    auto [b, e] = cells[cell];
    std::sort(perm.begin() + b, perm.begin() + e);
    do {
      permute(cell + 1);
    } while (std::next_permutation(perm.begin() + b, perm.begin() + e));
  };
  permute(0);
  return best;
}

}  // namespace detail

/// Isomorphism-invariant code of a graph with at most 11 vertices.
inline std::uint64_t canonical_code(const Graph& g) {
  return detail::code_under(g, detail::canonical_labeling(g));
}

/// The representative of g's isomorphism class.
inline Graph canonical_form(const Graph& g) {
  const auto perm = detail::canonical_labeling(g);
  std::vector<Vertex> inverse(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = static_cast<Vertex>(i);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(inverse[u], inverse[v]);
  return Graph::from_edges(g.order(), e);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

/// Calls fn on every connected labeled graph on vertices 0..n-1 (n <= 7);
/// stops early when fn returns false.
inline void for_each_connected_labeled(int n, const std::function<bool(const Graph&)>& fn) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("labeled enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> e;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (static_cast<int>(std::popcount(mask)) < n - 1) continue;
    e.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) e.push_back(pairs[i]);
    Graph g = Graph::from_edges(n, e);
    if (connected(g) && !fn(g)) return;
  }
}

/// One representative per isomorphism class of connected graphs of order n
/// (n <= 7), in canonical form, sorted by canonical code. Larger orders need
/// an external generator (for example nauty's geng) piped in as graph6.
inline std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("built-in enumeration supports 1 <= n <= " +
                                std::to_string(kMaxEnumerationOrder) +
                                "; pipe graph6 from an external generator for larger n");
  std::vector<Graph> layer{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    std::map<std::uint64_t, Graph> next;
    const int old = order - 1;
    for (const Graph& h : layer) {
      // Every connected graph has a non-cut vertex, so each class of order
      // `order` arises by attaching a vertex to some connected graph.
      const auto base = h.edges();
      for (Mask s = 1; s < bit(old); ++s) {
        std::vector<Edge> e(base.begin(), base.end());
        for (Mask t = s; t; t &= t - 1) e.emplace_back(std::countr_zero(t), old);
        Graph g = Graph::from_edges(order, e);
        auto code = canonical_code(g);
        if (!next.contains(code)) next.emplace(code, canonical_form(g));
      }
    }
    layer.clear();
    for (auto& [code, g] : next) layer.push_back(std::move(g));
  }
  return layer;
}

}  // namespace rvd
