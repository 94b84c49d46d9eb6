#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvdkit/coloring.hpp"
#include "rvdkit/graph.hpp"

namespace rvd {

namespace detail {

inline void check_nk(int n, int k, int min_n) {
  if (n < min_n) throw std::invalid_argument("needs n >= " + std::to_string(min_n));
  if (k < 1 || k > n) throw std::invalid_argument("needs 1 <= k <= n");
}

inline int binom2(int k) { return k * (k - 1) / 2; }

}  // namespace detail

/// Fewest edges of a connected order-n graph with rvd exactly k (n >= 4).
inline int min_size(int n, int k) {
  detail::check_nk(n, k, 4);
  if (k <= n - 1) return n + k - 2;
  return 2 * n - 4 + (n + 1) / 2;
}

struct MaxSizeBounds {
  int lower = 0;
  int upper = 0;
};

/// Bounds on the most edges of a connected order-n graph with rvd exactly k.
/// For k = 2, 3 both bounds equal the exact value.
inline MaxSizeBounds max_size_bounds(int n, int k) {
  if (k == 1) throw std::invalid_argument("rvd 1 means a tree, which has exactly n - 1 edges");
  detail::check_nk(n, k, 2);
  if (k <= 3) {
    const int v = (k + 1) * (n - 1) / 2;
    return {v, v};
  }
  const int c = detail::binom2(k);
  return {(k * (n - 1) + 1) / 2 - c, k * (n - 1) - c};
}

/// min_size together with the max_size bounds, for reports.
struct SizeBound {
  int n = 0;
  int k = 0;
  int min_size = 0;
  int max_lower = 0;
  int max_upper = 0;
};

inline SizeBound size_bound(int n, int k) {
  SizeBound b{n, k, min_size(n, k), n - 1, n - 1};
  if (k >= 2) {
    auto m = max_size_bounds(n, k);
    b.max_lower = m.lower;
    b.max_upper = m.upper;
  }
  return b;
}

struct ExtremalWitness {
  Graph graph;
  VertexColoring coloring;
};

/// Two hubs u = 0 and v = 1 joined through `middles` vertices 2..middles+1
/// (each adjacent to both hubs), with pendant vertices on u up to order n.
inline Graph double_hub_graph(int n, int middles) {
  if (middles < 0 || n < middles + 2) throw std::invalid_argument("double hub needs n >= middles + 2");
  std::vector<Edge> e;
  for (int i = 0; i < middles; ++i) {
    e.emplace_back(0, 2 + i);
    e.emplace_back(1, 2 + i);
  }
  for (Vertex p = middles + 2; p < n; ++p) e.emplace_back(0, p);
  return Graph::from_edges(n, e);
}

/// Sparsest graph of order n with rvd k (1 <= k <= n - 1, n >= 3):
/// k middles and n - k - 2 pendants, and for k = n - 1 the graph with n - 2
/// middles plus the edge uv. Has n + k - 2 edges.
inline ExtremalWitness gen_sparse_witness(int n, int k) {
  if (n < 3) throw std::invalid_argument("needs n >= 3");
  if (k < 1 || k > n - 1) throw std::invalid_argument("needs 1 <= k <= n - 1");
  ExtremalWitness w;
  std::vector<int> c(static_cast<std::size_t>(n), 2);
  if (k == 1) {
    w.graph = double_hub_graph(n, 1);
    w.coloring = VertexColoring::uniform(n);
    return w;
  }
  if (k <= n - 2) {
    w.graph = double_hub_graph(n, k);
    for (int i = 0; i < k; ++i) c[2 + i] = 1 + i;
    c[0] = 1;
  } else {
    const Edge uv{0, 1};
    w.graph = add_edges(double_hub_graph(n, n - 2), std::span<const Edge>(&uv, 1));
    for (int i = 0; i < n - 2; ++i) c[2 + i] = 1 + i;
    c[0] = 1;
    c[1] = n - 1;
  }
  w.coloring = VertexColoring(std::move(c));
  return w;
}

/// Sparsest graph of order n >= 4 with rvd n: the n - 1 variant of
/// gen_sparse_witness plus edges pairing up the middles (an odd leftover
/// joins the last pair into a path of length 2).
inline Graph gen_sparse_full(int n) {
  if (n < 4) throw std::invalid_argument("needs n >= 4");
  const int middles = n - 2;
  std::vector<Edge> e;
  for (int i = 0; i + 1 < middles; i += 2) e.emplace_back(2 + i, 3 + i);
  if (middles % 2 == 1) e.emplace_back(2 + middles - 2, 2 + middles - 1);
  e.emplace_back(0, 1);
  return add_edges(double_hub_graph(n, middles), e);
}

/// Triangles sharing cut vertices in a chain 0-1-2, 2-3-4, ..., with one
/// pendant edge when n is even. Has floor(3(n - 1) / 2) edges.
inline Graph gen_triangle_chain(int n) {
  if (n < 3) throw std::invalid_argument("needs n >= 3");
  std::vector<Edge> e;
  Vertex hub = 0;
  while (hub + 2 < n) {
    e.emplace_back(hub, hub + 1);
    e.emplace_back(hub, hub + 2);
    e.emplace_back(hub + 1, hub + 2);
    hub += 2;
  }
  if (hub + 1 < n) e.emplace_back(hub, hub + 1);
  return Graph::from_edges(n, e);
}

/// floor((n - 1) / (k - 1)) copies of K_k chained at cut vertices, then one
/// smaller clique on the remaining vertices (if any).
inline Graph gen_clique_chain(int n, int k) {
  if (k < 2 || n < k) throw std::invalid_argument("needs 2 <= k <= n");
  std::vector<Edge> e;
  auto clique_from = [&](Vertex first, int size) {
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) e.emplace_back(first + i, first + j);
  };
  Vertex start = 0;
  while (start + k <= n) {
    clique_from(start, k);
    start += k - 1;
  }
  if (start + 1 < n) clique_from(start, n - start);
  return Graph::from_edges(n, e);
}

}  // namespace rvd
