#pragma once

// Slow, obviously-correct reference implementations. They share nothing with
// the library except the Graph container's edge list.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "rvdkit/graph.hpp"

namespace brute {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const rvd::Graph& g) {
  Matrix a(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

/// Reachability from x to y in (G - xy) - {v : gone[v]}, by repeated
/// relaxation until nothing changes.
inline bool reaches(const Matrix& a, int x, int y, const std::vector<bool>& gone) {
  const int n = static_cast<int>(a.size());
  std::vector<bool> in(n, false);
  in[x] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (int u = 0; u < n; ++u) {
      if (!in[u]) continue;
      for (int w = 0; w < n; ++w) {
        if (!a[u][w] || in[w] || gone[w]) continue;
        if ((u == x && w == y) || (u == y && w == x)) continue;
        in[w] = true;
        grew = true;
      }
    }
  }
  return in[y];
}

inline std::vector<bool> flags(int n, std::uint32_t subset) {
  std::vector<bool> f(n);
  for (int v = 0; v < n; ++v) f[v] = (subset >> v) & 1u;
  return f;
}

inline bool distinct_colors(const std::vector<int>& colors, const std::vector<int>& members) {
  std::set<int> seen;
  for (int v : members)
    if (!seen.insert(colors[v]).second) return false;
  return true;
}

/// Size of a smallest rainbow x-y vertex-cut, or -1 when there is none.
inline int min_rainbow_cut(const rvd::Graph& g, const std::vector<int>& colors, int x, int y) {
  const int n = g.order();
  const Matrix a = matrix_of(g);
  int best = -1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if ((s >> x) & 1u || (s >> y) & 1u) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if ((s >> v) & 1u) members.push_back(v);
    if (best != -1 && static_cast<int>(members.size()) >= best) continue;
    bool rainbow;
    if (a[x][y]) {
      auto with_x = members, with_y = members;
      with_x.push_back(x);
      with_y.push_back(y);
      rainbow = distinct_colors(colors, with_x) || distinct_colors(colors, with_y);
    } else {
      rainbow = distinct_colors(colors, members);
    }
    if (rainbow && !reaches(a, x, y, flags(n, s))) best = static_cast<int>(members.size());
  }
  return best;
}

inline bool has_rainbow_cut(const rvd::Graph& g, const std::vector<int>& colors, int x, int y) {
  return min_rainbow_cut(g, colors, x, y) >= 0;
}

inline bool valid(const rvd::Graph& g, const std::vector<int>& colors) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (!has_rainbow_cut(g, colors, x, y)) return false;
  return true;
}

/// Smallest x-y vertex-cut of G - xy over all subsets.
inline int min_cut(const rvd::Graph& g, int x, int y) {
  const int n = g.order();
  const Matrix a = matrix_of(g);
  int best = n;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if ((s >> x) & 1u || (s >> y) & 1u) continue;
    if (!reaches(a, x, y, flags(n, s))) best = std::min(best, static_cast<int>(__builtin_popcount(s)));
  }
  return best;
}

/// Calls fn on every coloring of n vertices that uses colors 1..k in
/// first-appearance order (at most k classes). Stops when fn returns true.
inline bool each_canonical_coloring(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> c(n, 0);
  std::function<bool(int, int)> go = [&](int v, int top) {
    if (v == n) return fn(c);
    for (int col = 1; col <= std::min(top + 1, k); ++col) {
      c[v] = col;
      if (go(v + 1, std::max(top, col))) return true;
    }
    return false;
  };
  return go(0, 0);
}

/// Fewest colors of a valid coloring, trying k = 1, 2, ... in turn.
inline int rvd(const rvd::Graph& g) {
  for (int k = 1;; ++k)
    if (each_canonical_coloring(g.order(), k, [&](const std::vector<int>& c) { return valid(g, c); })) return k;
}

/// Isomorphism class key: lexicographically largest adjacency bit string
/// over all n! relabelings.
inline std::vector<bool> class_key(const rvd::Graph& g) {
  const int n = g.order();
  const Matrix a = matrix_of(g);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> bits;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) bits.push_back(a[p[i]][p[j]]);
    if (bits > best) best = bits;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// Length of a shortest cycle (0 if none) by trying all vertex sequences.
inline int girth(const rvd::Graph& g) {
  const int n = g.order();
  const Matrix a = matrix_of(g);
  for (int len = 3; len <= n; ++len) {
    std::function<bool(std::vector<int>&)> extend = [&](std::vector<int>& path) {
      if (static_cast<int>(path.size()) == len) return a[path.back()][path.front()];
      for (int v = 0; v < n; ++v) {
        if (std::find(path.begin(), path.end(), v) != path.end() || !a[path.back()][v]) continue;
        path.push_back(v);
        if (extend(path)) return true;
        path.pop_back();
      }
      return false;
    };
    for (int s = 0; s < n; ++s) {
      std::vector<int> path{s};
      if (extend(path)) return len;
    }
  }
  return 0;
}

}  // namespace brute
