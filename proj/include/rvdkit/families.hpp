#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rvdkit/coloring.hpp"
#include "rvdkit/errors.hpp"
#include "rvdkit/graph.hpp"
#include "rvdkit/io.hpp"
#include "rvdkit/solver.hpp"
#include "rvdkit/structure.hpp"

namespace rvd {

enum class FamilyKind { Tree, Cycle, Complete, Wheel, CompleteMultipartite, Cactus, TriangleFreeGirth };

inline const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Tree: return "tree";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Complete: return "complete";
    case FamilyKind::Wheel: return "wheel";
    case FamilyKind::CompleteMultipartite: return "kpartite";
    case FamilyKind::Cactus: return "cactus";
    case FamilyKind::TriangleFreeGirth: return "triangle-free";
  }
  return "?";
}

/// A named family member. `n` is the order, except for wheels where it is
/// the rim length (W_n has n + 1 vertices). Trees, cacti and triangle-free
/// graphs may carry their concrete graph in `structure`; a tree without one
/// is the path on n vertices.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Cycle;
  int n = 0;
  std::vector<int> parts;
  std::optional<Graph> structure;
};

/// Throws FamilyError naming the violated hypothesis.
inline void validate(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::Tree:
      if (s.structure) {
        if (s.structure->order() < 2 || !is_tree(*s.structure))
          throw FamilyError("tree: the given graph is not a tree on at least 2 vertices");
      } else if (s.n < 2) {
        throw FamilyError("tree: needs n >= 2");
      }
      return;
    case FamilyKind::Cycle:
      if (s.n < 3) throw FamilyError("cycle: C_n needs n >= 3");
      return;
    case FamilyKind::Complete:
      if (s.n < 2) throw FamilyError("complete: K_n needs n >= 2");
      return;
    case FamilyKind::Wheel:
      if (s.n == 3) throw FamilyError("wheel: W_3 is K_4; the wheel formula needs order n+1 >= 5, use complete:n=4");
      if (s.n < 4) throw FamilyError("wheel: W_n needs order n+1 >= 5");
      return;
    case FamilyKind::CompleteMultipartite: {
      const auto& p = s.parts;
      if (p.size() < 2) throw FamilyError("kpartite: needs k >= 2 parts");
      if (std::any_of(p.begin(), p.end(), [](int x) { return x < 1; }))
        throw FamilyError("kpartite: part sizes must be positive");
      if (!std::is_sorted(p.begin(), p.end()))
        throw FamilyError("kpartite: part sizes must be listed in ascending order n_1 <= ... <= n_k");
      if (p.back() < 2) throw FamilyError("kpartite: the largest part must have n_k >= 2");
      return;
    }
    case FamilyKind::Cactus: {
      if (!s.structure) throw FamilyError("cactus: a concrete graph is required");
      const Graph& g = *s.structure;
      if (g.order() < 2 || !connected(g)) throw FamilyError("cactus: needs a connected graph on at least 2 vertices");
      for (const auto& b : block_decomposition(g).blocks) {
        auto piece = induced_subgraph(g, b).graph;
        if (b.size() > 2 && piece.size() != b.size()) {
          std::string name;
          for (Vertex v : b) name += (name.empty() ? "" : ",") + std::to_string(v);
          throw FamilyError("cactus: block {" + name + "} is neither an edge nor a cycle");
        }
      }
      return;
    }
    case FamilyKind::TriangleFreeGirth: {
      if (!s.structure) throw FamilyError("triangle-free: a concrete graph is required");
      const Graph& g = *s.structure;
      if (g.order() < 2 || !connected(g)) throw FamilyError("triangle-free: needs a connected graph");
      if (girth(g) < 4) throw FamilyError("triangle-free: the girth bound needs a cycle and girth >= 4");
      return;
    }
  }
}

/// Parses CLI descriptors: "cycle:n=6", "wheel:n=8", "complete:n=5",
/// "kpartite:1,2,3", "tree:n=5" (a path), "star:n=8" (K_{1,7}), and
/// "cactus:file=PATH" / "triangle-free:file=PATH" with the structure
/// provided by `load` (given the path).
template <typename Loader>
FamilySpec parse_family(std::string_view descriptor, Loader&& load) {
  auto colon = descriptor.find(':');
  if (colon == std::string_view::npos) throw FamilyError("family descriptor needs the form kind:params");
  std::string_view kind = descriptor.substr(0, colon);
  std::string_view params = descriptor.substr(colon + 1);
  auto value_of = [&](std::string_view key) -> std::string_view {
    if (!params.starts_with(key) || params.size() <= key.size() || params[key.size()] != '=')
      throw FamilyError(std::string(kind) + ": expected " + std::string(key) + "=...");
    return params.substr(key.size() + 1);
  };
  auto int_of = [&](std::string_view key) {
    auto v = detail::to_int(value_of(key));
    if (!v || *v < 0 || *v > 10'000) throw FamilyError(std::string(kind) + ": bad " + std::string(key));
    return static_cast<int>(*v);
  };

  FamilySpec s;
  if (kind == "cycle") {
    s.kind = FamilyKind::Cycle;
    s.n = int_of("n");
  } else if (kind == "wheel") {
    s.kind = FamilyKind::Wheel;
    s.n = int_of("n");
  } else if (kind == "complete") {
    s.kind = FamilyKind::Complete;
    s.n = int_of("n");
  } else if (kind == "tree" || kind == "path") {
    s.kind = FamilyKind::Tree;
    s.n = int_of("n");
  } else if (kind == "star") {
    s.kind = FamilyKind::Tree;
    s.n = int_of("n");
    if (s.n < 2) throw FamilyError("star: needs n >= 2");
    s.structure = star_graph(s.n - 1);
  } else if (kind == "kpartite") {
    s.kind = FamilyKind::CompleteMultipartite;
    std::size_t pos = 0;
    while (pos <= params.size()) {
      auto comma = params.find(',', pos);
      if (comma == std::string_view::npos) comma = params.size();
      auto v = detail::to_int(params.substr(pos, comma - pos));
      if (!v || *v < 1 || *v > 1000) throw FamilyError("kpartite: part sizes must be positive integers");
      s.parts.push_back(static_cast<int>(*v));
      pos = comma + 1;
    }
  } else if (kind == "cactus" || kind == "triangle-free") {
    s.kind = kind == "cactus" ? FamilyKind::Cactus : FamilyKind::TriangleFreeGirth;
    s.structure = load(std::string(value_of("file")));
  } else {
    throw FamilyError("unknown family '" + std::string(kind) + "'");
  }
  if (s.structure) s.n = s.structure->order();
  if (s.kind == FamilyKind::CompleteMultipartite)
    for (int p : s.parts) s.n += p;
  validate(s);
  return s;
}

inline FamilySpec parse_family(std::string_view descriptor) {
  return parse_family(descriptor, [](const std::string&) -> Graph {
    throw FamilyError("this family needs a graph file");
  });
}

/// Closed-form rvd of a family member.
inline int family_value(const FamilySpec& s) {
  validate(s);
  switch (s.kind) {
    case FamilyKind::Tree: return 1;
    case FamilyKind::Cycle: return 2;
    case FamilyKind::Complete: return s.n <= 3 ? s.n - 1 : s.n;
    case FamilyKind::Wheel: return s.n % 4 == 0 ? 3 : 4;
    case FamilyKind::CompleteMultipartite: {
      const auto& p = s.parts;
      const int k = static_cast<int>(p.size());
      const int n = s.n;
      if (k >= 4 || (k == 3 && p[0] >= 2)) return n;
      if ((k == 3 && p[0] == 1) || (k == 2 && p[0] >= 2)) return n - p[k - 2];
      return 1;  // k == 2, n_1 == 1: a star
    }
    case FamilyKind::Cactus: {
      const Graph& g = *s.structure;
      return is_tree(g) ? 1 : 2;
    }
    case FamilyKind::TriangleFreeGirth:
      throw FamilyError("triangle-free: no closed form; only rvd <= n - girth + 2 is known");
  }
  return 0;
}

/// Shortest cycle v_1..v_g colored 1,1,2,...,2 and every other vertex a
/// color of its own (3, 4, ... by vertex id). Needs girth >= 4.
inline VertexColoring girth_based_coloring(const Graph& g) {
  if (g.order() < 2 || !connected(g)) throw std::invalid_argument("girth coloring needs a connected graph");
  const VertexSet cycle = shortest_cycle(g);
  if (cycle.size() < 4) throw std::invalid_argument("girth coloring needs a cycle and girth >= 4");
  std::vector<int> c(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) c[cycle[i]] = i < 2 ? 1 : 2;
  int next = 3;
  for (Vertex v = 0; v < g.order(); ++v)
    if (c[v] == 0) c[v] = next++;
  return VertexColoring(std::move(c));
}

/// The cycle pattern 1,1,2,...,2 on every cycle block, color 1 on bridges,
/// glued with compose_block_colorings.
inline VertexColoring cactus_coloring(const Graph& g) {
  FamilySpec spec{FamilyKind::Cactus, g.order(), {}, g};
  validate(spec);
  const auto bd = block_decomposition(g);
  std::vector<VertexColoring> per_block;
  for (const auto& b : bd.blocks) {
    if (b.size() == 2) {
      per_block.push_back(VertexColoring::uniform(2));
      continue;
    }
    // Walk the cycle from its smallest vertex towards its smaller neighbor.
    auto piece = induced_subgraph(g, b).graph;
    std::vector<Vertex> walk{0, piece.neighbors(0)[0]};
    while (walk.size() < b.size()) {
      const auto& nb = piece.neighbors(walk.back());
      walk.push_back(nb[0] == walk[walk.size() - 2] ? nb[1] : nb[0]);
    }
    std::vector<int> local(b.size(), 2);
    local[walk[0]] = local[walk[1]] = 1;
    per_block.emplace_back(std::move(local));
  }
  return compose_block_colorings(g, per_block);
}

struct FamilyInstance {
  Graph graph;
  VertexColoring coloring;
};

inline Graph family_graph(const FamilySpec& s) {
  validate(s);
  switch (s.kind) {
    case FamilyKind::Tree: return s.structure ? *s.structure : path_graph(s.n);
    case FamilyKind::Cycle: return cycle_graph(s.n);
    case FamilyKind::Complete: return complete_graph(s.n);
    case FamilyKind::Wheel: return wheel_graph(s.n);
    case FamilyKind::CompleteMultipartite: return complete_multipartite_graph(s.parts);
    case FamilyKind::Cactus:
    case FamilyKind::TriangleFreeGirth: return *s.structure;
  }
  return Graph();
}

/// The family graph in canonical numbering with its explicit coloring.
inline FamilyInstance family_coloring(const FamilySpec& s) {
  FamilyInstance out{family_graph(s), {}};
  const int order = out.graph.order();
  std::vector<int> c(static_cast<std::size_t>(order), 0);
  switch (s.kind) {
    case FamilyKind::Tree:
      out.coloring = VertexColoring::uniform(order);
      return out;
    case FamilyKind::Cycle:
      for (int i = 0; i < order; ++i) c[i] = i < 2 ? 1 : 2;
      break;
    case FamilyKind::Complete:
      if (order <= 3) {
        for (int i = 0; i < order; ++i) c[i] = i < 2 ? 1 : 2;
      } else {
        out.coloring = VertexColoring::distinct(order);
        return out;
      }
      break;
    case FamilyKind::Wheel: {
      const int rim = s.n;
      // Rim vertex v_i is index i - 1; the pattern 1,1,2,2 repeats with period 4.
      auto pattern = [](int i) { return (i % 4 == 1 || i % 4 == 2) ? 1 : 2; };
      if (rim % 4 == 0) {
        for (int i = 1; i <= rim; ++i) c[i - 1] = pattern(i);
        c[rim] = 3;
      } else {
        for (int i = 1; i <= rim - 2; ++i) c[i - 1] = pattern(i);
        c[rim - 2] = c[rim - 1] = 3;
        c[rim] = 4;
      }
      break;
    }
    case FamilyKind::CompleteMultipartite: {
      const auto& p = s.parts;
      const int k = static_cast<int>(p.size());
      std::vector<int> start(p.size() + 1, 0);
      for (int i = 0; i < k; ++i) start[i + 1] = start[i] + p[i];
      auto fill_part = [&](int part, int first_color) {
        for (int j = 0; j < p[part]; ++j) c[start[part] + j] = first_color + j;
      };
      if (k >= 4 || (k == 3 && p[0] >= 2)) {
        out.coloring = VertexColoring::distinct(order);
        return out;
      }
      if (k == 3) {  // n_1 == 1
        fill_part(2, 1);
        fill_part(1, 1);
        c[0] = p[2] + 1;
      } else if (p[0] >= 2) {
        fill_part(1, 1);
        fill_part(0, 1);
      } else {
        out.coloring = VertexColoring::uniform(order);
        return out;
      }
      break;
    }
    case FamilyKind::Cactus:
      out.coloring = cactus_coloring(out.graph);
      return out;
    case FamilyKind::TriangleFreeGirth:
      out.coloring = girth_based_coloring(out.graph);
      return out;
  }
  out.coloring = VertexColoring(std::move(c));
  return out;
}

}  // namespace rvd
