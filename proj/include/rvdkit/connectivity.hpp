#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "rvdkit/graph.hpp"
#include "rvdkit/structure.hpp"

namespace rvd {

struct LocalConnectivity {
  Vertex x;
  Vertex y;
  int value;
};

namespace detail {

// Unit-capacity flow network on the vertex-split graph: v_in = 2v,
// v_out = 2v + 1. Only the split arcs of internal vertices are bounded.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, Vertex x, Vertex y, bool drop_xy)
      : head_(2 * static_cast<std::size_t>(g.order()), -1) {
    constexpr int kUnbounded = 1 << 29;
    for (Vertex v = 0; v < g.order(); ++v)
      add_arc(2 * v, 2 * v + 1, (v == x || v == y) ? kUnbounded : 1);
    for (auto [u, w] : g.edges()) {
      if (drop_xy && ((u == x && w == y) || (u == y && w == x))) continue;
      add_arc(2 * u + 1, 2 * w, kUnbounded);
      add_arc(2 * w + 1, 2 * u, kUnbounded);
    }
    source_ = 2 * x + 1;
    sink_ = 2 * y;
  }

  int max_flow() {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (true) {
      std::fill(via.begin(), via.end(), -2);
      via[source_] = -1;
      std::queue<int> q;
      q.push(source_);
      while (!q.empty() && via[sink_] == -2) {
        int u = q.front();
        q.pop();
        for (int a = head_[u]; a != -1; a = next_[a])
          if (cap_[a] > 0 && via[to_[a]] == -2) {
            via[to_[a]] = a;
            q.push(to_[a]);
          }
      }
      if (via[sink_] == -2) return flow;
      for (int v = sink_; v != source_; v = to_[via[v] ^ 1]) {
        --cap_[via[v]];
        ++cap_[via[v] ^ 1];
      }
      ++flow;
    }
  }

 private:
  void add_arc(int from, int to, int cap) {
    for (auto [a, b, c] : {std::tuple{from, to, cap}, std::tuple{to, from, 0}}) {
      to_.push_back(b);
      cap_.push_back(c);
      next_.push_back(head_[a]);
      head_[a] = static_cast<int>(to_.size()) - 1;
    }
  }

  std::vector<int> head_, to_, cap_, next_;
  int source_ = 0, sink_ = 0;
};

}  // namespace detail

/// Maximum number of internally disjoint x-y paths, with the edge xy (if
/// present) removed first.
inline int disjoint_paths(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("disjoint paths need two distinct vertices");
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw std::invalid_argument("vertex out of range");
  return detail::SplitFlow(g, x, y, true).max_flow();
}

/// kappa_G(x, y): the minimum x-y separator size for nonadjacent pairs, and
/// one more than the value in G - xy for adjacent pairs.
inline LocalConnectivity local_connectivity(const Graph& g, Vertex x, Vertex y) {
  int paths = disjoint_paths(g, x, y);
  return {x, y, paths + (g.adjacent(x, y) ? 1 : 0)};
}

/// kappa(G): fewest vertices whose removal disconnects G or leaves one vertex.
inline int connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("connectivity needs at least 2 vertices");
  if (!connected(g)) return 0;
  int best = n - 1;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (!g.adjacent(x, y)) best = std::min(best, disjoint_paths(g, x, y));
  return best;
}

/// kappa^+(G): the largest local connectivity over all vertex pairs.
inline int upper_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("upper connectivity needs at least 2 vertices");
  int best = 0;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      best = std::max(best, local_connectivity(g, x, y).value);
  return best;
}

}  // namespace rvd
