#pragma once

#include <algorithm>
#include <bit>
#include <initializer_list>
#include <iterator>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rvd {

using Vertex = int;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;
/// One bit per vertex; only available for graphs with at most 64 vertices.
using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;

inline constexpr Mask bit(Vertex v) { return Mask{1} << v; }
inline constexpr Mask low_bits(int n) {
  return n >= kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline VertexSet mask_to_set(Mask m) {
  VertexSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask set_to_mask(std::span<const Vertex> s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are sorted ascending, so every traversal built on top of
/// them visits vertices in a deterministic order.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(int n) : adjacency_(static_cast<std::size_t>(check_order(n))) {
    build_masks();
  }

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse; self-loops and out-of-range ids throw
  /// std::invalid_argument.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                                    std::to_string(v) +
                                    " has a vertex outside 0.." +
                                    std::to_string(n - 1));
      if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      g.adjacency_[u].push_back(v);
      g.adjacency_[v].push_back(u);
    }
    g.edge_count_ = 0;
    for (auto& nbrs : g.adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      g.edge_count_ += nbrs.size();
    }
    g.edge_count_ /= 2;
    g.build_masks();
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    if (has_masks()) return (masks_[u] >> v) & 1U;
    const auto& nu = adjacency_.at(u);
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  int min_degree() const {
    int d = order() > 0 ? degree(0) : 0;
    for (Vertex v = 1; v < order(); ++v) d = std::min(d, degree(v));
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
  }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool has_masks() const noexcept { return !masks_.empty(); }

  /// Neighborhood bitmask; requires order() <= 64.
  Mask neighbor_mask(Vertex v) const {
    if (!has_masks())
      throw std::logic_error("bitmask view needs a graph with at most 64 vertices");
    return masks_[v];
  }

  Mask vertex_mask() const noexcept { return low_bits(order()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  static int check_order(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    return n;
  }

  void build_masks() {
    masks_.clear();
    if (order() == 0 || order() > kMaskBits) return;
    masks_.assign(adjacency_.size(), 0);
    for (Vertex v = 0; v < order(); ++v)
      for (Vertex w : adjacency_[v]) masks_[v] |= bit(w);
  }

  std::vector<VertexSet> adjacency_;
  std::vector<Mask> masks_;
  std::size_t edge_count_ = 0;
};

/// Result of deleting vertices: the dense remainder plus the index maps
/// needed to translate answers back to the original ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> old_to_new;  // -1 for deleted vertices
  std::vector<Vertex> new_to_old;
};

inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Subgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : keep) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
    if (out.old_to_new[v] != -1) continue;
    out.old_to_new[v] = 0;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (out.old_to_new[v] == -1) continue;
    out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (out.old_to_new[u] >= 0 && out.old_to_new[v] >= 0)
      edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
  out.graph = Graph::from_edges(static_cast<int>(out.new_to_old.size()), edges);
  return out;
}

inline Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : removed) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
    gone[v] = true;
  }
  VertexSet keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

inline Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw std::invalid_argument("no edge " + std::to_string(u) + "-" +
                                std::to_string(v));
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (e != Edge{std::min(u, v), std::max(u, v)}) edges.push_back(e);
  return Graph::from_edges(g.order(), edges);
}

inline Graph add_edges(const Graph& g, std::span<const Edge> extra) {
  auto edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph::from_edges(g.order(), edges);
}

inline VertexSet common_neighbors(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("common_neighbors needs two distinct vertices");
  VertexSet out;
  const auto& nx = g.neighbors(x);
  const auto& ny = g.neighbors(y);
  std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(),
                        std::back_inserter(out));
  return out;
}

// Small named graphs used throughout tests, generators and the CLI.

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

/// Rim v_1..v_n is 0..n-1 in cyclic order; the hub is vertex n.
inline Graph wheel_graph(int rim) {
  if (rim < 3) throw std::invalid_argument("a wheel needs a rim of at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < rim; ++v) {
    e.emplace_back(v, (v + 1) % rim);
    e.emplace_back(v, rim);
  }
  return Graph::from_edges(rim + 1, e);
}

/// Parts are numbered consecutively in the given order.
inline Graph complete_multipartite_graph(std::span<const int> parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw std::invalid_argument("empty part");
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, e);
}

}  // namespace rvd
