#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "rvdkit/graph.hpp"

namespace rvd {

/// Connected components, each sorted, listed by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool connected(const Graph& g) { return components(g).size() <= 1; }

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) &&
         connected(g);
}

struct BlockDecomposition {
  /// Vertex sets of the blocks, each sorted; blocks ordered by smallest vertex
  /// (ties broken by the full sorted list).
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
};

/// Blocks and cut vertices by the lowpoint method.
inline BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("block decomposition needs at least 2 vertices");
  if (!connected(g))
    throw std::invalid_argument("block decomposition needs a connected graph; split components first");

  BlockDecomposition out;
  std::vector<int> disc(static_cast<std::size_t>(n), 0), low(static_cast<std::size_t>(n), 0);
  std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
  std::vector<Edge> edge_stack;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  const Vertex root = 0;
  disc[root] = low[root] = ++timer;
  stack.push_back({root, -1, 0});
  int root_children = 0;

  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& nbrs = g.neighbors(f.v);
    if (f.next < nbrs.size()) {
      Vertex w = nbrs[f.next++];
      if (disc[w] == 0) {
        edge_stack.emplace_back(f.v, w);
        disc[w] = low[w] = ++timer;
        if (f.v == root) ++root_children;
        stack.push_back({w, f.v, 0});
      } else if (w != f.parent && disc[w] < disc[f.v]) {
        edge_stack.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const Vertex child = f.v;
    const Vertex parent = f.parent;
    stack.pop_back();
    if (parent < 0) break;
    low[parent] = std::min(low[parent], low[child]);
    if (low[child] >= disc[parent]) {
      if (parent != root) is_cut[parent] = true;
      VertexSet block;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e.first);
        block.push_back(e.second);
        if (e == Edge{parent, child}) break;
      }
      std::sort(block.begin(), block.end());
      block.erase(std::unique(block.begin(), block.end()), block.end());
      out.blocks.push_back(std::move(block));
    }
  }
  if (root_children > 1) is_cut[root] = true;
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

/// Length of a shortest cycle, 0 for acyclic graphs.
inline int girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
  for (Vertex r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    parent[r] = -1;
    std::queue<Vertex> q;
    q.push(r);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

/// Calls `visit` on every cycle of exactly `length` vertices, each once, as
/// the vertex sequence that starts at its smallest vertex and continues
/// towards the smaller of that vertex's two cycle neighbors. Cycles arrive in
/// lexicographic order of these sequences. Stops early when `visit` returns
/// true; returns whether it stopped early.
inline bool for_each_cycle_of_length(
    const Graph& g, int length, const std::function<bool(const VertexSet&)>& visit) {
  if (length < 3) return false;
  const int n = g.order();
  VertexSet path;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);

  std::function<bool(Vertex)> extend = [&](Vertex start) -> bool {
    Vertex tail = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (g.adjacent(tail, start) && path[1] < tail) return visit(path);
      return false;
    }
    for (Vertex w : g.neighbors(tail)) {
      if (w <= start || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = true;
      bool stop = extend(start);
      on_path[w] = false;
      path.pop_back();
      if (stop) return true;
    }
    return false;
  };

  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = true;
    bool stop = extend(s);
    on_path[s] = false;
    if (stop) return true;
  }
  return false;
}

inline bool is_chordless(const Graph& g, const VertexSet& cycle) {
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.adjacent(cycle[i], cycle[j])) return false;
    }
  return true;
}

/// Lexicographically least shortest cycle (in the form produced by
/// for_each_cycle_of_length); empty when the graph is acyclic.
inline VertexSet shortest_cycle(const Graph& g) {
  const int len = girth(g);
  VertexSet found;
  if (len == 0) return found;
  for_each_cycle_of_length(g, len, [&](const VertexSet& c) {
    found = c;
    return true;
  });
  return found;
}

}  // namespace rvd
