#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rvdkit/coloring.hpp"
#include "rvdkit/connectivity.hpp"
#include "rvdkit/errors.hpp"
#include "rvdkit/graph.hpp"

namespace rvd {

/// A rainbow x-y vertex-cut. For adjacent pairs `witness` names the endpoint
/// e with S + e rainbow; it is empty for nonadjacent pairs.
struct CutCertificate {
  Vertex x = 0;
  Vertex y = 0;
  VertexSet cut;
  std::optional<Vertex> witness;

  friend bool operator==(const CutCertificate&, const CutCertificate&) = default;
};

namespace detail {

inline void check_pair(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("x and y must be distinct");
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw std::invalid_argument("vertex out of range");
}

inline void check_coloring(const Graph& g, const VertexColoring& c) {
  if (c.size() != static_cast<std::size_t>(g.order()))
    throw std::invalid_argument("coloring has " + std::to_string(c.size()) +
                                " entries for a graph of order " + std::to_string(g.order()));
}

inline void require_masks(const Graph& g) {
  if (!g.has_masks())
    throw std::invalid_argument("rainbow cut search supports graphs with at most 64 vertices");
}

/// True iff y is unreachable from x in (G - xy) - removed. `removed` must not
/// contain x or y.
inline bool separated(const Graph& g, Vertex x, Vertex y, Mask removed) {
  const Mask allowed = g.vertex_mask() & ~removed & ~bit(x) & ~bit(y);
  Mask frontier = g.neighbor_mask(x) & allowed;
  Mask visited = bit(x) | frontier;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= g.neighbor_mask(std::countr_zero(f));
    if (next & bit(y)) return false;
    next &= allowed & ~visited;
    visited |= next;
    frontier = next;
  }
  return true;
}

/// Same predicate over adjacency lists, for graphs of any order.
inline bool separated(const Graph& g, Vertex x, Vertex y, const std::vector<bool>& removed) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<Vertex> stack{x};
  seen[x] = true;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (u == x && w == y) continue;
      if (w == y) return false;
      if (seen[w] || removed[w]) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return true;
}

/// Vertices of V \ {x, y} grouped by color, as masks, in ascending color order.
inline std::vector<std::pair<int, Mask>> color_classes(const Graph& g, const VertexColoring& c,
                                                       Vertex x, Vertex y) {
  std::map<int, Mask> classes;
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != x && v != y) classes[c[v]] |= bit(v);
  return {classes.begin(), classes.end()};
}

/// Is there a set picking exactly one vertex from each class that separates
/// x from y? Supersets of a cut are cuts, so this decides whether any rainbow
/// set drawn from these classes is a cut.
inline bool transversal_separates(const Graph& g, Vertex x, Vertex y,
                                  const std::vector<Mask>& classes) {
  std::vector<Mask> rest(classes.size() + 1, 0);
  for (std::size_t i = classes.size(); i-- > 0;) rest[i] = rest[i + 1] | classes[i];
  std::function<bool(std::size_t, Mask)> pick = [&](std::size_t i, Mask chosen) {
    if (!separated(g, x, y, chosen | rest[i])) return false;
    if (i == classes.size()) return true;
    for (Mask m = classes[i]; m; m &= m - 1)
      if (pick(i + 1, chosen | (m & -m))) return true;
    return false;
  };
  return pick(0, 0);
}

}  // namespace detail

using detail::check_coloring;

/// Is S an x-y vertex-cut, i.e. are x and y in different components of
/// (G - xy) - S? The empty set qualifies when the edge xy is the only
/// connection.
inline bool is_vertex_cut(const Graph& g, Vertex x, Vertex y, std::span<const Vertex> s) {
  detail::check_pair(g, x, y);
  std::vector<bool> removed(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : s) {
    if (v == x || v == y) throw std::invalid_argument("a vertex-cut may not contain x or y");
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    removed[v] = true;
  }
  return detail::separated(g, x, y, removed);
}

/// Decides whether some x-y rainbow vertex-cut exists, without producing it.
inline bool rainbow_cut_exists(const Graph& g, const VertexColoring& c, Vertex x, Vertex y) {
  detail::check_pair(g, x, y);
  check_coloring(g, c);
  detail::require_masks(g);
  const auto classes = detail::color_classes(g, c, x, y);
  auto masks_without = [&](std::optional<int> banned) {
    std::vector<Mask> out;
    for (auto& [color, m] : classes)
      if (color != banned) out.push_back(m);
    return out;
  };
  if (!g.adjacent(x, y)) return detail::transversal_separates(g, x, y, masks_without(std::nullopt));
  if (detail::transversal_separates(g, x, y, masks_without(c[x]))) return true;
  return c[x] != c[y] && detail::transversal_separates(g, x, y, masks_without(c[y]));
}

/// The lexicographically least rainbow x-y vertex-cut among those of minimum
/// size, or nothing when no rainbow cut exists. Sizes are tried upwards from
/// the separator lower bound kappa_{G-xy}(x, y).
inline std::optional<CutCertificate> find_rainbow_cut(const Graph& g, const VertexColoring& c,
                                                      Vertex x, Vertex y) {
  if (!rainbow_cut_exists(g, c, x, y)) return std::nullopt;
  const bool adj = g.adjacent(x, y);
  const int n = g.order();

  // Dense color indices so "colors used" fits a vector<bool>.
  std::map<int, int> dense;
  for (int col : c.colors()) dense.try_emplace(col, static_cast<int>(dense.size()));
  const int cx = dense[c[x]], cy = dense[c[y]];

  VertexSet candidates;
  for (Vertex v = 0; v < n; ++v)
    if (v != x && v != y) candidates.push_back(v);

  std::vector<bool> used(dense.size(), false);
  VertexSet chosen;
  std::optional<CutCertificate> found;

  std::function<bool(std::size_t, int)> choose = [&](std::size_t from, int remaining) {
    if (remaining == 0) {
      if (!detail::separated(g, x, y, set_to_mask(chosen))) return false;
      CutCertificate cert{x, y, chosen, std::nullopt};
      if (adj) cert.witness = used[cx] ? y : x;
      found = std::move(cert);
      return true;
    }
    for (std::size_t i = from; i + remaining <= candidates.size(); ++i) {
      Vertex v = candidates[i];
      int col = dense[c[v]];
      if (used[col]) continue;
      used[col] = true;
      // Adjacent pairs: S must avoid the color of x or the color of y.
      bool ok = !adj || !used[cx] || !used[cy];
      chosen.push_back(v);
      if (ok && choose(i + 1, remaining - 1)) return true;
      chosen.pop_back();
      used[col] = false;
    }
    return false;
  };

  for (int size = disjoint_paths(g, x, y); size <= n - 2; ++size)
    if (choose(0, size)) return found;
  throw InvariantViolation("rainbow cut reported to exist but none found by size search");
}

struct Verification {
  bool valid = false;
  /// One certificate per unordered pair x < y, in lexicographic pair order.
  /// Filled only on success and only when certificates were requested.
  std::vector<CutCertificate> certificates;
  /// Lexicographically first pair without a rainbow cut.
  std::optional<std::pair<Vertex, Vertex>> violation;
};

/// Checks every vertex pair for a rainbow vertex-cut.
inline Verification verify_coloring(const Graph& g, const VertexColoring& c,
                                    bool with_certificates = true) {
  check_coloring(g, c);
  detail::require_masks(g);
  Verification out;
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y) {
      if (with_certificates) {
        auto cert = find_rainbow_cut(g, c, x, y);
        if (!cert) {
          out.certificates.clear();
          out.violation = std::pair{x, y};
          return out;
        }
        out.certificates.push_back(std::move(*cert));
      } else if (!rainbow_cut_exists(g, c, x, y)) {
        out.violation = std::pair{x, y};
        return out;
      }
    }
  out.valid = true;
  return out;
}

/// Fast yes/no form of verify_coloring.
inline bool is_rvd_coloring(const Graph& g, const VertexColoring& c) {
  return verify_coloring(g, c, false).valid;
}

/// Re-checks a certificate against its definition.
inline bool certificate_holds(const Graph& g, const VertexColoring& c, const CutCertificate& cert) {
  for (Vertex v : cert.cut)
    if (v == cert.x || v == cert.y) return false;
  if (!is_vertex_cut(g, cert.x, cert.y, cert.cut)) return false;
  if (!g.adjacent(cert.x, cert.y)) return !cert.witness && is_rainbow(c, cert.cut);
  if (!cert.witness || (*cert.witness != cert.x && *cert.witness != cert.y)) return false;
  VertexSet with = cert.cut;
  with.push_back(*cert.witness);
  return is_rainbow(c, with);
}

}  // namespace rvd
