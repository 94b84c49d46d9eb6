#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "rvdkit/connectivity.hpp"
#include "rvdkit/enumerate.hpp"
#include "rvdkit/extremal.hpp"
#include "rvdkit/io.hpp"
#include "rvdkit/oracle.hpp"
#include "rvdkit/rainbow.hpp"
#include "rvdkit/solver.hpp"
#include "rvdkit/sparse.hpp"
#include "rvdkit/structure.hpp"

namespace rvd {

/// One solved graph of the audit catalog.
struct CatalogEntry {
  Graph graph;
  std::string graph6;
  std::uint64_t code = 0;
  int rvd = 0;
  VertexColoring witness;
  int lower = 0;
  int upper = 0;
  int kappa = 0;
  int kappa_plus = 0;
  int girth = 0;
  BlockDecomposition blocks;

  int order() const { return graph.order(); }
  int size() const { return static_cast<int>(graph.size()); }
};

struct Catalog {
  /// Entries grouped by order, each group in input order.
  std::map<int, std::vector<CatalogEntry>> by_order;
  /// Orders whose group holds every connected graph up to isomorphism.
  std::vector<int> exhaustive;
  SolverOptions solver;

  bool is_exhaustive(int n) const {
    return std::find(exhaustive.begin(), exhaustive.end(), n) != exhaustive.end();
  }
};

inline CatalogEntry solve_entry(const Graph& g, const SolverOptions& opt) {
  CatalogEntry e;
  e.graph = g;
  e.graph6 = to_graph6(g);
  e.code = g.order() <= 11 ? canonical_code(g) : 0;
  auto r = rvd_exact(g, opt);
  e.rvd = r.value;
  e.witness = r.witness;
  e.lower = lower_bound(g).value;
  e.upper = upper_bound(g);
  e.kappa = connectivity(g);
  e.kappa_plus = upper_connectivity(g);
  e.girth = girth(g);
  e.blocks = block_decomposition(g);
  return e;
}

/// Solves every graph on `jobs` worker threads. Graphs of order < 2 and
/// disconnected graphs are dropped.
inline Catalog build_catalog(const std::vector<Graph>& graphs, const SolverOptions& opt, int jobs) {
  std::vector<const Graph*> todo;
  for (const auto& g : graphs)
    if (g.order() >= 2 && connected(g)) todo.push_back(&g);
  std::vector<std::optional<CatalogEntry>> solved(todo.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&] {
    for (std::size_t i; (i = next++) < todo.size();) {
      try {
        solved[i] = solve_entry(*todo[i], opt);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
        next = todo.size();
      }
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  Catalog cat;
  cat.solver = opt;
  for (auto& e : solved) cat.by_order[e->order()].push_back(std::move(*e));
  return cat;
}

/// The catalog of all connected graphs of orders 2..n_max (up to isomorphism).
inline Catalog build_catalog(int n_max, const SolverOptions& opt, int jobs) {
  std::vector<Graph> graphs;
  for (int n = 2; n <= n_max; ++n) {
    auto layer = enumerate_connected(n);
    graphs.insert(graphs.end(), layer.begin(), layer.end());
  }
  Catalog cat = build_catalog(graphs, opt, jobs);
  for (int n = 2; n <= n_max; ++n) cat.exhaustive.push_back(n);
  return cat;
}

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  std::string description;
  CheckStatus status = CheckStatus::Pass;
  /// Graphs (or cells) examined before the verdict.
  int checked = 0;
  /// graph6 of a failing graph; set on every failure.
  std::string counterexample;
  std::string detail;
  double seconds = 0;
};

struct AuditReport {
  int n_min = 2;
  int n_max = 2;
  std::vector<CheckResult> checks;
  /// Number of graphs per (order, rvd).
  std::map<std::pair<int, int>, int> cells;
  double seconds = 0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::Pass; });
  }
  bool failed() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "audit n=" << n_min << ".." << n_max << '\n';
    for (const auto& c : checks) {
      os << to_string(c.status) << ' ' << c.name << " checked=" << c.checked;
      os.setf(std::ios::fixed);
      os.precision(3);
      os << " time=" << c.seconds << 's';
      if (!c.counterexample.empty()) os << " counterexample=" << c.counterexample;
      if (!c.detail.empty()) os << " # " << c.detail;
      os << '\n';
    }
    os << "cells";
    for (auto& [key, count] : cells) os << ' ' << key.first << ':' << key.second << '=' << count;
    os << '\n';
    const auto fails = std::count_if(checks.begin(), checks.end(),
                                     [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
    const auto skips = std::count_if(checks.begin(), checks.end(),
                                     [](const CheckResult& c) { return c.status == CheckStatus::Skipped; });
    os << "summary " << checks.size() - fails - skips << " pass, " << fails << " fail, " << skips << " skipped\n";
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["orders"] = {n_min, n_max};
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json e{{"name", c.name},
                       {"description", c.description},
                       {"status", to_string(c.status)},
                       {"checked", c.checked},
                       {"seconds", c.seconds}};
      if (!c.counterexample.empty()) e["counterexample"] = c.counterexample;
      if (!c.detail.empty()) e["detail"] = c.detail;
      j["checks"].push_back(std::move(e));
    }
    j["cells"] = nlohmann::json::array();
    for (auto& [key, count] : cells) j["cells"].push_back({{"n", key.first}, {"rvd", key.second}, {"count", count}});
    j["seconds"] = seconds;
    j["passed"] = passed();
    return j;
  }
};

struct AuditOptions {
  /// Check names to run; empty means all.
  std::vector<std::string> checks;
  /// Per-check wall-clock budget; a check that runs out is reported skipped.
  double budget_seconds = 600;
  /// Seed for sampled colorings.
  std::uint64_t seed = 20240521;
  /// Sampled colorings per graph in the oracle check.
  int samples = 100;
  /// Largest order for the expensive cross-checks (oracle, flat search,
  /// subgraph monotonicity).
  int cross_check_max_n = 6;
};

namespace detail {

using Clock = std::chrono::steady_clock;

class CheckRun {
 public:
  CheckRun(CheckResult& result, double budget)
      : result_(result), deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                      std::chrono::duration<double>(budget))) {}

  /// False once the check has failed or run out of time.
  bool live() {
    if (result_.status != CheckStatus::Pass) return false;
    if (Clock::now() > deadline_) {
      result_.status = CheckStatus::Skipped;
      result_.detail = "budget exhausted after " + std::to_string(result_.checked) + " items" +
                       (result_.detail.empty() ? "" : "; " + result_.detail);
      return false;
    }
    return true;
  }

  void fail(const std::string& graph6, const std::string& why) {
    result_.status = CheckStatus::Fail;
    result_.counterexample = graph6;
    result_.detail = why;
  }

  void count() { ++result_.checked; }
  void note(const std::string& s) {
    if (result_.status == CheckStatus::Pass) result_.detail = s;
  }

 private:
  CheckResult& result_;
  Clock::time_point deadline_;
};

/// Runs `check` on every entry of order <= max_n until one fails (returns a
/// reason) or time runs out.
inline void each_entry(const Catalog& cat, CheckRun& run, int max_n,
                       const std::function<std::optional<std::string>(const CatalogEntry&)>& check) {
  for (auto& [n, entries] : cat.by_order) {
    if (n > max_n) break;
    for (const auto& e : entries) {
      if (!run.live()) return;
      std::optional<std::string> why;
      try {
        why = check(e);
      } catch (const std::exception& ex) {
        why = std::string("exception: ") + ex.what();
      }
      if (why) {
        run.fail(e.graph6, *why);
        return;
      }
      run.count();
    }
  }
}

inline std::string pair_text(Vertex x, Vertex y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

inline int deficient_pairs(const Graph& g) {
  int count = 0;
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y)
      if (common_neighbors(g, x, y).size() < 2) ++count;
  return count;
}

inline bool is_cycle_block(const Graph& g, const VertexSet& block) {
  return block.size() >= 3 && induced_subgraph(g, block).graph.size() == block.size();
}

inline VertexColoring random_coloring(int n, std::mt19937_64& rng, int max_colors) {
  const int palette = std::uniform_int_distribution<int>(1, max_colors)(rng);
  std::uniform_int_distribution<int> pick(1, palette);
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int& v : c) v = pick(rng);
  return VertexColoring(std::move(c));
}

/// rvd of graphs outside the catalog, memoized by canonical code.
class RvdLookup {
 public:
  explicit RvdLookup(const Catalog& cat) : solver_(cat.solver) {
    for (auto& [n, entries] : cat.by_order)
      for (const auto& e : entries) known_[key(e.graph, e.code)] = e.rvd;
  }
  int operator()(const Graph& g) {
    const auto k = key(g, canonical_code(g));
    auto it = known_.find(k);
    if (it != known_.end()) return it->second;
    return known_[k] = rvd_exact(g, solver_).value;
  }

 private:
  static std::uint64_t key(const Graph& g, std::uint64_t code) {
    return code * 16 + static_cast<std::uint64_t>(g.order());
  }
  SolverOptions solver_;
  std::unordered_map<std::uint64_t, int> known_;
};

struct CheckDef {
  const char* name;
  const char* description;
  std::function<void(const Catalog&, const AuditOptions&, CheckRun&)> run;
};

inline std::vector<CheckDef> check_registry() {
  const int all = 1 << 20;
  std::vector<CheckDef> defs;

  defs.push_back({"kappa", "connectivity never exceeds upper connectivity",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, all, [](const CatalogEntry& e) -> std::optional<std::string> {
                      if (e.kappa > e.kappa_plus)
                        return "kappa " + std::to_string(e.kappa) + " > kappa+ " + std::to_string(e.kappa_plus);
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"menger", "disjoint path count equals the brute-force minimum vertex cut",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, 7, [](const CatalogEntry& e) -> std::optional<std::string> {
                      const Graph& g = e.graph;
                      for (Vertex x = 0; x < g.order(); ++x)
                        for (Vertex y = x + 1; y < g.order(); ++y) {
                          int paths = disjoint_paths(g, x, y);
                          int cut = oracle::min_vertex_cut(g, x, y);
                          if (paths != cut)
                            return "pair " + pair_text(x, y) + ": " + std::to_string(paths) + " paths, min cut " +
                                   std::to_string(cut);
                        }
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"blocks", "blocks partition the edges and stay connected after deleting any vertex",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, all, [](const CatalogEntry& e) -> std::optional<std::string> {
                      const Graph& g = e.graph;
                      for (auto [u, v] : g.edges()) {
                        int owners = 0;
                        for (const auto& b : e.blocks.blocks)
                          owners += std::binary_search(b.begin(), b.end(), u) &&
                                    std::binary_search(b.begin(), b.end(), v);
                        if (owners != 1)
                          return "edge " + pair_text(u, v) + " lies in " + std::to_string(owners) + " blocks";
                      }
                      for (const auto& b : e.blocks.blocks) {
                        if (b.size() < 3) continue;
                        for (Vertex v : b) {
                          VertexSet rest;
                          for (Vertex w : b)
                            if (w != v) rest.push_back(w);
                          if (!connected(induced_subgraph(g, rest).graph))
                            return "block minus vertex " + std::to_string(v) + " is disconnected";
                        }
                      }
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"girth-zero", "girth 0 exactly for trees",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, all, [](const CatalogEntry& e) -> std::optional<std::string> {
                      if ((e.girth == 0) != (e.size() == e.order() - 1))
                        return "girth " + std::to_string(e.girth) + " with " + std::to_string(e.size()) + " edges";
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"soundness", "every certificate of the witness re-checks independently",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, all, [](const CatalogEntry& e) -> std::optional<std::string> {
                      auto ver = verify_coloring(e.graph, e.witness, true);
                      if (!ver.valid) return "witness rejected by the verifier";
                      for (const auto& cert : ver.certificates)
                        if (!certificate_holds(e.graph, e.witness, cert))
                          return "certificate for " + pair_text(cert.x, cert.y) + " does not hold";
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"oracle", "rainbow cut search agrees with the all-subsets oracle on sampled colorings",
                  [=](const Catalog& cat, const AuditOptions& opt, CheckRun& run) {
                    std::mt19937_64 rng(opt.seed);
                    each_entry(cat, run, opt.cross_check_max_n, [&](const CatalogEntry& e) -> std::optional<std::string> {
                      const Graph& g = e.graph;
                      for (int s = 0; s < opt.samples; ++s) {
                        auto c = random_coloring(g.order(), rng, 3);
                        for (Vertex x = 0; x < g.order(); ++x)
                          for (Vertex y = x + 1; y < g.order(); ++y) {
                            auto want = oracle::min_rainbow_cut(g, c, x, y);
                            auto got = find_rainbow_cut(g, c, x, y);
                            bool agree = want.has_value() == got.has_value() &&
                                         rainbow_cut_exists(g, c, x, y) == want.has_value() &&
                                         (!got || (static_cast<int>(got->cut.size()) == *want &&
                                                   certificate_holds(g, c, *got)));
                            if (!agree) {
                              std::string colors;
                              for (int col : c.colors()) colors += std::to_string(col) + ' ';
                              return "pair " + pair_text(x, y) + " under coloring " + colors;
                            }
                          }
                      }
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"rename", "renaming colors bijectively keeps the verdict",
                  [=](const Catalog& cat, const AuditOptions& opt, CheckRun& run) {
                    std::mt19937_64 rng(opt.seed + 1);
                    each_entry(cat, run, all, [&](const CatalogEntry& e) -> std::optional<std::string> {
                      for (const auto& c : {e.witness, random_coloring(e.order(), rng, 3)}) {
                        std::vector<int> image(static_cast<std::size_t>(c.max_color()) + 1);
                        for (std::size_t i = 0; i < image.size(); ++i) image[i] = static_cast<int>(i) + 7;
                        std::shuffle(image.begin(), image.end(), rng);
                        std::vector<int> renamed;
                        for (int col : c.colors()) renamed.push_back(image[col]);
                        if (is_rvd_coloring(e.graph, c) != is_rvd_coloring(e.graph, VertexColoring(renamed)))
                          return std::string("verdict changed under renaming");
                      }
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"bounds", "kappa <= kappa+ <= rvd <= n and lower_bound <= rvd <= upper_bound",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, all, [](const CatalogEntry& e) -> std::optional<std::string> {
                      if (!(e.kappa <= e.kappa_plus && e.kappa_plus <= e.rvd && e.rvd <= e.order()))
                        return "kappa=" + std::to_string(e.kappa) + " kappa+=" + std::to_string(e.kappa_plus) +
                               " rvd=" + std::to_string(e.rvd);
                      if (!(e.lower <= e.rvd && e.rvd <= e.upper))
                        return "bounds [" + std::to_string(e.lower) + "," + std::to_string(e.upper) +
                               "] miss rvd=" + std::to_string(e.rvd);
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"rvd1", "rvd = 1 exactly for trees",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    std::map<int, std::pair<int, int>> tally;
                    each_entry(cat, run, all, [&](const CatalogEntry& e) -> std::optional<std::string> {
                      const bool tree = e.size() == e.order() - 1;
                      auto& t = tally[e.order()];
                      t.first += tree;
                      ++t.second;
                      if ((e.rvd == 1) != tree) return "rvd " + std::to_string(e.rvd) + (tree ? " on a tree" : "");
                      return std::nullopt;
                    });
                    std::string s;
                    for (auto& [n, t] : tally)
                      s += (s.empty() ? "" : ", ") + ("n=" + std::to_string(n) + ": " + std::to_string(t.first) +
                                                      " trees among " + std::to_string(t.second) + " graphs");
                    run.note(s);
                  }});

  defs.push_back({"rvd2", "rvd = 2 exactly when every block is an edge or a cycle and some block is a cycle",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, all, [](const CatalogEntry& e) -> std::optional<std::string> {
                      bool all_ok = true, any_cycle = false;
                      for (const auto& b : e.blocks.blocks) {
                        bool cyc = is_cycle_block(e.graph, b);
                        any_cycle |= cyc;
                        all_ok &= cyc || b.size() == 2;
                      }
                      if ((e.rvd == 2) != (all_ok && any_cycle))
                        return "rvd " + std::to_string(e.rvd) + " against block structure";
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"rvdn", "rvd = n exactly when every pair has two common neighbors",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, all, [](const CatalogEntry& e) -> std::optional<std::string> {
                      if ((e.rvd == e.order()) != (deficient_pairs(e.graph) == 0))
                        return "rvd " + std::to_string(e.rvd) + " with " +
                               std::to_string(deficient_pairs(e.graph)) + " deficient pairs";
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"rvdn1", "exactly one pair with fewer than two common neighbors forces rvd = n - 1",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, all, [](const CatalogEntry& e) -> std::optional<std::string> {
                      if (deficient_pairs(e.graph) == 1 && e.rvd != e.order() - 1)
                        return "one deficient pair but rvd " + std::to_string(e.rvd);
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"girth", "girth g >= 4 gives rvd <= n - g + 2; triangle-free n >= 3 gives rvd <= n - 2",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, all, [](const CatalogEntry& e) -> std::optional<std::string> {
                      const int n = e.order();
                      if (e.girth >= 4 && e.rvd > n - e.girth + 2)
                        return "girth " + std::to_string(e.girth) + " but rvd " + std::to_string(e.rvd);
                      if (e.girth != 3 && n >= 3 && e.rvd > n - 2)
                        return "triangle-free but rvd " + std::to_string(e.rvd);
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"conflict", "witness colorings separate every pair with two common neighbors",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, all, [](const CatalogEntry& e) -> std::optional<std::string> {
                      for (auto [x, y] : conflict_graph(e.graph).edges())
                        if (e.witness[x] == e.witness[y]) return "pair " + pair_text(x, y) + " shares a color";
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"distinct", "all-distinct colors verify when every pair has two common neighbors",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, all, [](const CatalogEntry& e) -> std::optional<std::string> {
                      if (deficient_pairs(e.graph) == 0 && !is_rvd_coloring(e.graph, VertexColoring::distinct(e.order())))
                        return std::string("all-distinct coloring rejected");
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"block-law", "decomposed search equals flat search and the block maximum",
                  [=](const Catalog& cat, const AuditOptions& opt, CheckRun& run) {
                    SolverOptions flat = cat.solver;
                    flat.decompose = false;
                    flat.use_bounds = false;
                    each_entry(cat, run, opt.cross_check_max_n, [&](const CatalogEntry& e) -> std::optional<std::string> {
                      const int plain = rvd_exact(e.graph, flat).value;
                      int block_max = 0;
                      for (const auto& b : e.blocks.blocks)
                        block_max = std::max(block_max, rvd_exact(induced_subgraph(e.graph, b).graph, flat).value);
                      if (plain != e.rvd || block_max != e.rvd)
                        return "decomposed " + std::to_string(e.rvd) + ", flat " + std::to_string(plain) +
                               ", block max " + std::to_string(block_max);
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"monotone", "connected subgraphs never need more colors",
                  [=](const Catalog& cat, const AuditOptions& opt, CheckRun& run) {
                    RvdLookup lookup(cat);
                    // Single edge and vertex deletions generate every connected
                    // spanning or induced subgraph through connected steps.
                    each_entry(cat, run, opt.cross_check_max_n, [&](const CatalogEntry& e) -> std::optional<std::string> {
                      const Graph& g = e.graph;
                      for (auto [u, v] : g.edges()) {
                        Graph h = delete_edge(g, u, v);
                        if (connected(h) && lookup(h) > e.rvd)
                          return "deleting edge " + pair_text(u, v) + " raises rvd";
                      }
                      if (g.order() > 2)
                        for (Vertex v = 0; v < g.order(); ++v) {
                          const Vertex gone[] = {v};
                          Graph h = delete_vertices(g, gone).graph;
                          if (connected(h) && lookup(h) > e.rvd)
                            return "deleting vertex " + std::to_string(v) + " raises rvd";
                        }
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"sparse", "constructive coloring verifies with at most m - n + 2 colors",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, all, [](const CatalogEntry& e) -> std::optional<std::string> {
                      auto c = sparse_coloring(e.graph);
                      if (c.palette_size() > e.size() - e.order() + 2)
                        return "uses " + std::to_string(c.palette_size()) + " colors";
                      if (!is_rvd_coloring(e.graph, c)) return std::string("constructive coloring rejected");
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"removable-cycle", "minimum degree 3 graphs have a chordless cycle leaving the rest connected",
                  [=](const Catalog& cat, const AuditOptions&, CheckRun& run) {
                    each_entry(cat, run, all, [](const CatalogEntry& e) -> std::optional<std::string> {
                      if (e.order() < 4 || e.graph.min_degree() < 3) return std::nullopt;
                      try {
                        auto c = find_removable_cycle(e.graph);
                        if (!is_chordless(e.graph, c) || !connected(delete_vertices(e.graph, c).graph))
                          return std::string("returned cycle is not removable");
                      } catch (const InvariantViolation&) {
                        return std::string("no removable cycle");
                      }
                      return std::nullopt;
                    });
                  }});

  defs.push_back({"compose", "glued block colorings verify and use the block maximum",
                  [=](const Catalog& cat, const AuditOptions& opt, CheckRun& run) {
                    std::mt19937_64 rng(opt.seed + 2);
                    SolverOptions flat = cat.solver;
                    flat.decompose = false;
                    each_entry(cat, run, all, [&](const CatalogEntry& e) -> std::optional<std::string> {
                      if (e.blocks.blocks.size() < 2) return std::nullopt;
                      // Exact block colorings, then permuted all-distinct ones.
                      for (int round = 0; round < 2; ++round) {
                        std::vector<VertexColoring> parts;
                        int widest = 0;
                        for (const auto& b : e.blocks.blocks) {
                          Graph piece = induced_subgraph(e.graph, b).graph;
                          VertexColoring c;
                          if (round == 0) {
                            c = rvd_exact(piece, flat).witness;
                          } else {
                            std::vector<int> cols = VertexColoring::distinct(piece.order()).colors();
                            std::shuffle(cols.begin(), cols.end(), rng);
                            c = VertexColoring(cols);
                          }
                          widest = std::max(widest, c.palette_size());
                          parts.push_back(c);
                        }
                        auto glued = compose_block_colorings(e.graph, parts);
                        if (!is_rvd_coloring(e.graph, glued)) return std::string("glued coloring rejected");
                        if (glued.palette_size() != widest)
                          return "glued coloring uses " + std::to_string(glued.palette_size()) + " colors, expected " +
                                 std::to_string(widest);
                      }
                      return std::nullopt;
                    });
                  }});

  // Extremal checks work on (order, rvd) cells of exhaustive orders n >= 4.
  auto extremal = [](bool want_min) {
    return [want_min](const Catalog& cat, const AuditOptions&, CheckRun& run) {
      std::vector<std::string> failures;
      std::string first_graph;
      std::string data;
      for (auto& [n, entries] : cat.by_order) {
        if (n < 4) continue;
        if (!cat.is_exhaustive(n)) {
          run.note("order " + std::to_string(n) + " is not exhaustive; extremal cells skipped");
          continue;
        }
        for (int k = 1; k <= n; ++k) {
          if (!run.live()) return;
          const CatalogEntry* lo = nullptr;
          const CatalogEntry* hi = nullptr;
          for (const auto& e : entries) {
            if (e.rvd != k) continue;
            if (!lo || e.size() < lo->size()) lo = &e;
            if (!hi || e.size() > hi->size()) hi = &e;
          }
          run.count();
          const std::string cell = "n=" + std::to_string(n) + " k=" + std::to_string(k);
          if (!lo) {
            failures.push_back(cell + ": no graph");
            if (first_graph.empty()) first_graph = cell;
            continue;
          }
          if (want_min) {
            if (lo->size() != min_size(n, k)) {
              failures.push_back(cell + ": fewest edges " + std::to_string(lo->size()) + ", formula " +
                                 std::to_string(min_size(n, k)));
              if (first_graph.empty()) first_graph = lo->graph6;
            }
            continue;
          }
          if (k == 1) continue;
          auto b = max_size_bounds(n, k);
          const bool ok = k <= 3 ? hi->size() == b.upper : (b.lower <= hi->size() && hi->size() <= b.upper);
          if (k >= 4) data += (data.empty() ? "" : ", ") + cell + ": " + std::to_string(hi->size());
          if (!ok) {
            failures.push_back(cell + ": most edges " + std::to_string(hi->size()) + ", formula " +
                               (k <= 3 ? std::to_string(b.upper)
                                       : "[" + std::to_string(b.lower) + "," + std::to_string(b.upper) + "]"));
            if (first_graph.empty()) first_graph = hi->graph6;
          }
        }
      }
      if (!failures.empty()) {
        std::string why;
        for (const auto& f : failures) why += (why.empty() ? "" : "; ") + f;
        run.fail(first_graph, why);
      } else if (!data.empty()) {
        run.note("empirical max for k >= 4: " + data);
      }
    };
  };
  defs.push_back({"min-size", "fewest edges per (n, rvd) cell match n + k - 2, or 2n - 4 + ceil(n/2) at k = n",
                  extremal(true)});
  defs.push_back({"max-size",
                  "most edges per (n, rvd) cell: floor((k+1)(n-1)/2) for k = 2, 3, inside the interval for k >= 4",
                  extremal(false)});
  return defs;
}

}  // namespace detail

/// Names of all audit checks, in report order.
inline std::vector<std::string> audit_check_names() {
  std::vector<std::string> out;
  for (const auto& d : detail::check_registry()) out.emplace_back(d.name);
  return out;
}

/// Runs the selected checks over a solved catalog.
inline AuditReport audit(const Catalog& cat, const AuditOptions& opt = {}) {
  const auto start = detail::Clock::now();
  auto defs = detail::check_registry();
  for (const auto& want : opt.checks)
    if (std::none_of(defs.begin(), defs.end(), [&](const detail::CheckDef& d) { return want == d.name; }))
      throw std::invalid_argument("unknown audit check '" + want + "'");

  AuditReport report;
  if (!cat.by_order.empty()) {
    report.n_min = cat.by_order.begin()->first;
    report.n_max = cat.by_order.rbegin()->first;
  }
  for (auto& [n, entries] : cat.by_order)
    for (const auto& e : entries) ++report.cells[{n, e.rvd}];

  for (const auto& d : defs) {
    if (!opt.checks.empty() && std::find(opt.checks.begin(), opt.checks.end(), d.name) == opt.checks.end())
      continue;
    CheckResult result;
    result.name = d.name;
    result.description = d.description;
    const auto t0 = detail::Clock::now();
    {
      detail::CheckRun run(result, opt.budget_seconds);
      try {
        d.run(cat, opt, run);
      } catch (const std::exception& ex) {
        run.fail("n/a", std::string("exception: ") + ex.what());
      }
    }
    result.seconds = std::chrono::duration<double>(detail::Clock::now() - t0).count();
    report.checks.push_back(std::move(result));
  }
  report.seconds = std::chrono::duration<double>(detail::Clock::now() - start).count();
  return report;
}

/// Enumerates orders 2..n_max, solves them and audits.
inline AuditReport audit(int n_max, const AuditOptions& opt = {}, const SolverOptions& solver = {}, int jobs = 1) {
  if (n_max < 2 || n_max > kMaxEnumerationOrder)
    throw std::invalid_argument("audit supports 2 <= n_max <= " + std::to_string(kMaxEnumerationOrder) +
                                "; feed larger graphs as graph6");
  return audit(build_catalog(n_max, solver, jobs), opt);
}

}  // namespace rvd
