#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvdkit/graph.hpp"

namespace rvd {

/// Total map vertex -> color id.
class VertexColoring {
 public:
  VertexColoring() = default;

  explicit VertexColoring(std::vector<int> colors) : colors_(std::move(colors)) {
    for (int c : colors_)
      if (c < 0) throw std::invalid_argument("color ids must be nonnegative");
  }

  VertexColoring(std::initializer_list<int> colors)
      : VertexColoring(std::vector<int>(colors)) {}

  /// Every vertex of an order-n graph gets color `c`.
  static VertexColoring uniform(int n, int c = 1) {
    return VertexColoring(std::vector<int>(static_cast<std::size_t>(n), c));
  }

  /// Vertex v gets color v + 1.
  static VertexColoring distinct(int n) {
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) c[v] = v + 1;
    return VertexColoring(std::move(c));
  }

  int operator[](Vertex v) const { return colors_.at(static_cast<std::size_t>(v)); }
  std::size_t size() const noexcept { return colors_.size(); }
  const std::vector<int>& colors() const noexcept { return colors_; }

  int palette_size() const {
    std::vector<int> c = colors_;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  int max_color() const {
    return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
  }

  /// Renames colors to 1..p in order of first appearance.
  VertexColoring normalized() const {
    std::map<int, int> rename;
    std::vector<int> out;
    out.reserve(colors_.size());
    for (int c : colors_) {
      auto [it, fresh] = rename.try_emplace(c, static_cast<int>(rename.size()) + 1);
      out.push_back(it->second);
    }
    return VertexColoring(std::move(out));
  }

  /// Colors of the listed vertices, in that order.
  VertexColoring restricted(std::span<const Vertex> vertices) const {
    std::vector<int> out;
    out.reserve(vertices.size());
    for (Vertex v : vertices) out.push_back((*this)[v]);
    return VertexColoring(std::move(out));
  }

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;

 private:
  std::vector<int> colors_;
};

/// True iff the vertices of `s` carry pairwise distinct colors.
inline bool is_rainbow(const VertexColoring& coloring, std::span<const Vertex> s) {
  std::vector<int> seen;
  seen.reserve(s.size());
  for (Vertex v : s) seen.push_back(coloring[v]);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace rvd
