#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvdkit/coloring.hpp"
#include "rvdkit/connectivity.hpp"
#include "rvdkit/errors.hpp"
#include "rvdkit/graph.hpp"
#include "rvdkit/rainbow.hpp"
#include "rvdkit/structure.hpp"

namespace rvd {

/// Which argument produced a lower bound.
enum class BoundReason { UpperConnectivity, ConflictClique, Block, Trivial };

inline const char* to_string(BoundReason r) {
  switch (r) {
    case BoundReason::UpperConnectivity: return "upper-connectivity";
    case BoundReason::ConflictClique: return "conflict-clique";
    case BoundReason::Block: return "block";
    case BoundReason::Trivial: return "trivial";
  }
  return "?";
}

struct LowerBound {
  int value = 1;
  BoundReason reason = BoundReason::Trivial;
};

/// Pairs with at least two common neighbors; such pairs never share a color
/// in a rainbow vertex-disconnection coloring.
inline Graph conflict_graph(const Graph& g) {
  std::vector<Edge> e;
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y)
      if (common_neighbors(g, x, y).size() >= 2) e.emplace_back(x, y);
  return Graph::from_edges(g.order(), e);
}

/// Greedy maximal clique, grown from every start vertex in turn (candidates
/// by descending degree); the largest one wins.
inline VertexSet greedy_clique(const Graph& h) {
  VertexSet order(static_cast<std::size_t>(h.order()));
  for (Vertex v = 0; v < h.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
  VertexSet best;
  for (Vertex start : order) {
    VertexSet clique{start};
    for (Vertex v : order) {
      if (v == start) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return h.adjacent(u, v); }))
        clique.push_back(v);
    }
    if (clique.size() > best.size()) best = clique;
  }
  std::sort(best.begin(), best.end());
  return best;
}

/// max(kappa^+, greedy conflict clique, 1).
inline LowerBound lower_bound(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("lower bound needs a nontrivial graph");
  const int kplus = upper_connectivity(g);
  const int clique = static_cast<int>(greedy_clique(conflict_graph(g)).size());
  LowerBound lb;
  if (kplus >= clique && kplus > 1) lb = {kplus, BoundReason::UpperConnectivity};
  else if (clique > 1) lb = {clique, BoundReason::ConflictClique};
  return lb;
}

/// min(n, n - girth + 2 when girth >= 4, m - n + 2).
inline int upper_bound(const Graph& g) {
  const int n = g.order();
  int best = n;
  const int gi = girth(g);
  if (gi >= 4) best = std::min(best, n - gi + 2);
  const long long sparse = static_cast<long long>(g.size()) - n + 2;
  if (sparse >= 1) best = std::min<long long>(best, sparse);
  return best;
}

struct SolverOptions {
  /// Largest block the exhaustive search accepts.
  int cap = 9;
  /// Solve blocks separately and glue the colorings.
  bool decompose = true;
  /// Start at the lower bound and never merge conflict pairs. Disabling gives
  /// the plain search from one color upwards.
  bool use_bounds = true;
  /// Produce a certificate for every pair of the witness coloring.
  bool with_certificates = false;
};

struct RvdResult {
  int value = 0;
  VertexColoring witness;
  std::vector<CutCertificate> certificates;
  BoundReason lower_bound_reason = BoundReason::Trivial;
};

/// Calls `accept` on every coloring of 0..n-1 that is a restricted-growth
/// string with exactly `k` classes (colors 1..k), skipping those that put a
/// `conflicts` pair into one class. Colorings arrive in lexicographic order;
/// returns true as soon as `accept` does.
inline bool for_each_partition(int n, int k, std::span<const Mask> conflicts,
                               const std::function<bool(const VertexColoring&)>& accept) {
  if (k < 1 || k > n) return false;
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  std::vector<Mask> members(static_cast<std::size_t>(k) + 1, 0);
  VertexColoring scratch;
  std::function<bool(Vertex, int)> place = [&](Vertex v, int used) -> bool {
    if (v == n) {
      if (used != k) return false;
      scratch = VertexColoring(colors);
      return accept(scratch);
    }
    if (n - v < k - used) return false;
    const int top = std::min(used + 1, k);
    for (int col = 1; col <= top; ++col) {
      if (!conflicts.empty() && (members[col] & conflicts[v])) continue;
      colors[v] = col;
      members[col] |= bit(v);
      bool stop = place(v + 1, std::max(used, col));
      members[col] &= ~bit(v);
      if (stop) return true;
    }
    return false;
  };
  return place(0, 0);
}

namespace detail {

/// Fewest colors for a graph treated as a single piece.
inline VertexColoring search_single(const Graph& g, const SolverOptions& opt, int start) {
  const int n = g.order();
  if (n > opt.cap)
    throw CapExceeded("block of order " + std::to_string(n) + " exceeds the solver cap of " +
                      std::to_string(opt.cap) + " (raise it with --cap)");
  if (n > kMaskBits) throw CapExceeded("solver supports at most 64 vertices per block");
  std::vector<Mask> conflicts;
  if (opt.use_bounds) {
    Graph h = conflict_graph(g);
    for (Vertex v = 0; v < n; ++v) conflicts.push_back(h.neighbor_mask(v));
  }
  VertexColoring found;
  for (int k = start; k <= n; ++k) {
    bool hit = for_each_partition(n, k, conflicts, [&](const VertexColoring& c) {
      if (!is_rvd_coloring(g, c)) return false;
      found = c;
      return true;
    });
    if (hit) return found;
  }
  // All-distinct colors always work, so reaching here means a bound lied.
  throw InvariantViolation("no rainbow vertex-disconnection coloring with at most n colors");
}

}  // namespace detail

/// Glues per-block colorings (indexed like block_decomposition(g).blocks,
/// entries in ascending vertex order) into one coloring of g. Blocks are
/// attached in block order, each at its single vertex shared with what is
/// already placed; when the two colors of that vertex differ they are
/// transposed throughout the incoming block.
inline VertexColoring compose_block_colorings(const Graph& g,
                                              std::span<const VertexColoring> per_block) {
  const auto bd = block_decomposition(g);
  if (per_block.size() != bd.blocks.size())
    throw std::invalid_argument("expected " + std::to_string(bd.blocks.size()) +
                                " block colorings, got " + std::to_string(per_block.size()));
  for (std::size_t i = 0; i < bd.blocks.size(); ++i)
    if (per_block[i].size() != bd.blocks[i].size())
      throw std::invalid_argument("coloring of block " + std::to_string(i) +
                                  " does not cover the block");

  std::vector<int> out(static_cast<std::size_t>(g.order()), -1);
  std::vector<bool> placed(bd.blocks.size(), false);
  auto place = [&](std::size_t i, const VertexColoring& local) {
    for (std::size_t j = 0; j < bd.blocks[i].size(); ++j) out[bd.blocks[i][j]] = local[static_cast<Vertex>(j)];
    placed[i] = true;
  };
  place(0, per_block[0].normalized());
  for (std::size_t round = 1; round < bd.blocks.size(); ++round) {
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
      if (placed[i]) continue;
      const auto& verts = bd.blocks[i];
      auto shared = std::find_if(verts.begin(), verts.end(), [&](Vertex v) { return out[v] != -1; });
      if (shared == verts.end()) continue;
      std::vector<int> local = per_block[i].normalized().colors();
      const int have = out[*shared];
      const int mine = local[static_cast<std::size_t>(shared - verts.begin())];
      if (have != mine)
        for (int& col : local) {
          if (col == mine) col = have;
          else if (col == have) col = mine;
        }
      place(i, VertexColoring(std::move(local)));
      break;
    }
  }
  return VertexColoring(std::move(out));
}

/// Exact rvd by exhaustive search over canonical colorings.
inline RvdResult rvd_exact(const Graph& g, const SolverOptions& opt = {}) {
  if (g.order() < 2) throw std::invalid_argument("rvd is defined for graphs with at least 2 vertices");
  if (!connected(g)) throw std::invalid_argument("rvd needs a connected graph");

  RvdResult result;
  auto solve_piece = [&](const Graph& piece, BoundReason* reason) {
    int start = 1;
    if (opt.use_bounds) {
      auto lb = lower_bound(piece);
      start = lb.value;
      if (reason) *reason = lb.reason;
    }
    return detail::search_single(piece, opt, start);
  };

  const auto bd = block_decomposition(g);
  if (!opt.decompose || bd.blocks.size() == 1) {
    result.witness = solve_piece(g, &result.lower_bound_reason).normalized();
  } else {
    std::vector<VertexColoring> per_block;
    for (const auto& verts : bd.blocks) {
      Graph piece = induced_subgraph(g, verts).graph;
      per_block.push_back(piece.order() == 2 ? VertexColoring::uniform(2)
                                             : solve_piece(piece, nullptr));
    }
    result.witness = compose_block_colorings(g, per_block);
    result.lower_bound_reason = BoundReason::Block;
  }
  result.value = result.witness.palette_size();
  if (opt.with_certificates) result.certificates = verify_coloring(g, result.witness).certificates;
  return result;
}

}  // namespace rvd
