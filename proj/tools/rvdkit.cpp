// rvdkit command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rvdkit/rvdkit.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

rvd::GraphFormat format_of(const std::string& name) {
  if (name == "edges") return rvd::GraphFormat::EdgeList;
  if (name == "graph6") return rvd::GraphFormat::Graph6;
  return rvd::GraphFormat::Auto;
}

std::string render(const rvd::Graph& g, const std::string& format) {
  return format == "graph6" ? rvd::to_graph6(g) + "\n" : rvd::to_edge_list(g);
}

std::string set_text(const rvd::VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string colors_inline(const rvd::VertexColoring& c) {
  std::string out;
  for (std::size_t v = 0; v < c.size(); ++v) out += (v ? " " : "") + std::to_string(c.colors()[v]);
  return out;
}

json cert_json(const rvd::CutCertificate& c) {
  json j{{"x", c.x}, {"y", c.y}, {"cut", c.cut}};
  if (c.witness) j["witness"] = *c.witness;
  return j;
}

std::string cert_text(const rvd::CutCertificate& c) {
  std::string out = std::to_string(c.x) + " " + std::to_string(c.y) + " cut=" + set_text(c.cut);
  if (c.witness) out += " witness=" + std::to_string(*c.witness);
  return out;
}

struct Common {
  bool json = false;
  std::string format = "auto";
};

int cmd_rvd(const std::string& path, const Common& common, int cap, bool certificates, bool flat,
            const std::string& coloring_out) {
  auto graphs = rvd::parse_graphs(read_text(path), format_of(common.format));
  rvd::SolverOptions opt;
  opt.cap = cap;
  opt.decompose = !flat;
  opt.with_certificates = certificates;
  json all = json::array();
  std::ostringstream text;
  std::string colorings;
  for (const auto& g : graphs) {
    auto r = rvd::rvd_exact(g, opt);
    if (!coloring_out.empty()) colorings += rvd::to_coloring_text(r.witness);
    if (common.json) {
      json j{{"graph6", rvd::to_graph6(g)},
             {"rvd", r.value},
             {"coloring", r.witness.colors()},
             {"lower_bound", rvd::lower_bound(g).value},
             {"upper_bound", rvd::upper_bound(g)},
             {"bound_reason", rvd::to_string(r.lower_bound_reason)}};
      if (certificates) {
        j["certificates"] = json::array();
        for (const auto& c : r.certificates) j["certificates"].push_back(cert_json(c));
      }
      all.push_back(std::move(j));
      continue;
    }
    if (graphs.size() > 1) {
      text << rvd::to_graph6(g) << " rvd = " << r.value << " coloring " << colors_inline(r.witness) << '\n';
      continue;
    }
    text << "rvd = " << r.value << '\n';
    text << "bounds = [" << rvd::lower_bound(g).value << ", " << rvd::upper_bound(g) << "]\n";
    text << "coloring\n" << rvd::to_coloring_text(r.witness);
    if (certificates) {
      text << "certificates\n";
      for (const auto& c : r.certificates) text << cert_text(c) << '\n';
    }
  }
  if (!coloring_out.empty()) write_text(coloring_out, colorings);
  if (common.json) std::cout << (graphs.size() == 1 ? all[0] : all).dump(2) << '\n';
  else std::cout << text.str();
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, const Common& common,
               bool certificates) {
  auto g = rvd::parse_graph(read_text(graph_path), format_of(common.format));
  auto c = rvd::parse_coloring(read_text(coloring_path), g.order());
  auto v = rvd::verify_coloring(g, c, certificates);
  if (common.json) {
    json j{{"valid", v.valid}, {"colors", c.palette_size()}};
    if (v.violation) j["violation"] = {v.violation->first, v.violation->second};
    if (certificates && v.valid) {
      j["certificates"] = json::array();
      for (const auto& cert : v.certificates) j["certificates"].push_back(cert_json(cert));
    }
    std::cout << j.dump(2) << '\n';
  } else if (v.valid) {
    std::cout << "valid (" << c.palette_size() << " colors)\n";
    for (const auto& cert : v.certificates) std::cout << cert_text(cert) << '\n';
  } else {
    std::cout << "invalid: no rainbow vertex-cut for pair " << v.violation->first << ' ' << v.violation->second
              << '\n';
  }
  return v.valid ? kOk : kInvalid;
}

int cmd_cut(const std::string& graph_path, const std::string& coloring_path, int x, int y, const Common& common) {
  auto g = rvd::parse_graph(read_text(graph_path), format_of(common.format));
  auto c = rvd::parse_coloring(read_text(coloring_path), g.order());
  auto cert = rvd::find_rainbow_cut(g, c, x, y);
  if (common.json) std::cout << (cert ? cert_json(*cert) : json(nullptr)).dump(2) << '\n';
  else std::cout << (cert ? cert_text(*cert) : std::string("none")) << '\n';
  return cert ? kOk : kInvalid;
}

int cmd_family(const std::string& descriptor, const Common& common, const std::string& out_format,
               const std::string& coloring_out) {
  auto spec = rvd::parse_family(descriptor, [&](const std::string& path) {
    return rvd::parse_graph(read_text(path), format_of(common.format));
  });
  auto inst = rvd::family_coloring(spec);
  std::optional<int> value;
  if (spec.kind != rvd::FamilyKind::TriangleFreeGirth) value = rvd::family_value(spec);
  const bool valid = rvd::is_rvd_coloring(inst.graph, inst.coloring);
  if (!coloring_out.empty()) write_text(coloring_out, rvd::to_coloring_text(inst.coloring));
  if (common.json) {
    json j{{"family", rvd::to_string(spec.kind)},
           {"order", inst.graph.order()},
           {"coloring", inst.coloring.colors()},
           {"colors", inst.coloring.palette_size()},
           {"verified", valid},
           {"graph6", rvd::to_graph6(inst.graph)}};
    if (value) j["rvd"] = *value;
    else j["upper_bound"] = inst.coloring.palette_size();
    std::cout << j.dump(2) << '\n';
  } else {
    if (value) std::cout << "rvd = " << *value << '\n';
    else std::cout << "rvd <= " << inst.coloring.palette_size() << '\n';
    std::cout << "coloring\n" << rvd::to_coloring_text(inst.coloring);
    std::cout << "graph\n" << render(inst.graph, out_format);
  }
  if (!valid) {
    std::cerr << "error: family coloring failed verification\n";
    return kInvalid;
  }
  return kOk;
}

int cmd_audit(int n_max, const std::string& graphs_path, const Common& common, int cap, int jobs, double budget,
              const std::vector<std::string>& checks, int samples) {
  rvd::AuditOptions opt;
  opt.checks = checks;
  opt.budget_seconds = budget;
  opt.samples = samples;
  if (const char* seed = std::getenv("RVDKIT_SEED")) opt.seed = std::stoull(seed);
  rvd::SolverOptions solver;
  solver.cap = cap;
  rvd::AuditReport report;
  if (!graphs_path.empty()) {
    auto graphs = rvd::parse_graphs(read_text(graphs_path), format_of(common.format));
    report = rvd::audit(rvd::build_catalog(graphs, solver, jobs), opt);
  } else {
    report = rvd::audit(n_max, opt, solver, jobs);
  }
  if (common.json) std::cout << report.to_json().dump(2) << '\n';
  else std::cout << report.to_text();
  return report.failed() ? kInvalid : kOk;
}

int cmd_enumerate(int n, bool labeled, const std::string& out_format) {
  std::ostringstream out;
  auto emit = [&](const rvd::Graph& g) {
    if (out_format == "edges") out << rvd::to_edge_list(g) << '\n';
    else out << rvd::to_graph6(g) << '\n';
  };
  if (labeled) {
    rvd::for_each_connected_labeled(n, [&](const rvd::Graph& g) {
      emit(g);
      return true;
    });
  } else {
    for (const auto& g : rvd::enumerate_connected(n)) emit(g);
  }
  std::cout << out.str();
  return kOk;
}

void emit_witness(const rvd::Graph& g, const rvd::VertexColoring* c, const Common& common,
                  const std::string& out_format, const std::string& out_path, const std::string& coloring_out) {
  if (common.json) {
    json j{{"graph6", rvd::to_graph6(g)}, {"order", g.order()}, {"size", g.size()}};
    if (c) j["coloring"] = c->colors();
    std::cout << j.dump(2) << '\n';
  } else {
    write_text(out_path, render(g, out_format));
  }
  if (c && !coloring_out.empty()) write_text(coloring_out, rvd::to_coloring_text(*c));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow vertex-disconnection toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Machine-readable output");
  app.add_option("--format", common.format, "Input graph format")
      ->check(CLI::IsMember({"auto", "edges", "graph6"}));
  int cap = 9;
  app.add_option("--cap", cap, "Largest block the exact solver accepts")->check(CLI::Range(1, 64));

  std::string graph_path, coloring_path, coloring_out, out_path, out_format = "edges";
  bool certificates = false, flat = false;

  auto* rvd_cmd = app.add_subcommand("rvd", "Exact rvd with a witness coloring");
  rvd_cmd->add_option("graph", graph_path, "Edge list or graph6 file ('-' for stdin)")->required();
  rvd_cmd->add_flag("--certificates", certificates, "Print a rainbow cut for every pair");
  rvd_cmd->add_flag("--flat", flat, "Search the whole graph without block decomposition");
  rvd_cmd->add_option("--coloring-out", coloring_out, "Write the witness coloring here");

  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring");
  verify_cmd->add_option("graph", graph_path)->required();
  verify_cmd->add_option("coloring", coloring_path)->required();
  verify_cmd->add_flag("--certificates", certificates, "Print a rainbow cut for every pair");

  int x = 0, y = 0;
  auto* cut_cmd = app.add_subcommand("cut", "Smallest rainbow vertex-cut for one pair");
  cut_cmd->add_option("graph", graph_path)->required();
  cut_cmd->add_option("coloring", coloring_path)->required();
  cut_cmd->add_option("x", x)->required();
  cut_cmd->add_option("y", y)->required();

  std::string descriptor;
  auto* family_cmd = app.add_subcommand("family", "Closed-form value and coloring of a named family");
  family_cmd->add_option("spec", descriptor,
                         "cycle:n=N, complete:n=N, wheel:n=N, kpartite:A,B,..., tree:n=N, star:n=N, "
                         "cactus:file=PATH, triangle-free:file=PATH")
      ->required();
  family_cmd->add_option("--out-format", out_format)->check(CLI::IsMember({"edges", "graph6"}));
  family_cmd->add_option("--coloring-out", coloring_out);

  auto* ext_cmd = app.add_subcommand("extremal", "Size formulas and extremal constructions");
  ext_cmd->require_subcommand(1);
  int en = 0, ek = 0;
  auto* min_cmd = ext_cmd->add_subcommand("min-size", "Fewest edges for order n and rvd k");
  min_cmd->add_option("n", en)->required();
  min_cmd->add_option("k", ek)->required();
  auto* max_cmd = ext_cmd->add_subcommand("max-size", "Bounds on the most edges for order n and rvd k");
  max_cmd->add_option("n", en)->required();
  max_cmd->add_option("k", ek)->required();
  auto add_gen = [&](const char* name, const char* help, bool needs_k) {
    auto* cmd = ext_cmd->add_subcommand(name, help);
    cmd->add_option("n", en)->required();
    if (needs_k) cmd->add_option("k", ek)->required();
    cmd->add_option("--out", out_path, "Write the graph here instead of stdout");
    cmd->add_option("--out-format", out_format)->check(CLI::IsMember({"edges", "graph6"}));
    cmd->add_option("--coloring-out", coloring_out);
    return cmd;
  };
  auto* sparse_cmd = add_gen("sparse", "Sparsest graph with rvd k (k < n)", true);
  auto* full_cmd = add_gen("full", "Sparsest graph with rvd n", false);
  auto* tri_cmd = add_gen("triangles", "Chain of triangles (most edges at rvd 2)", false);
  auto* clique_cmd = add_gen("cliques", "Chain of k-cliques", true);

  int an = 6, jobs = 1, samples = 100;
  double budget = 600;
  std::vector<std::string> checks;
  std::string graphs_path;
  auto* audit_cmd = app.add_subcommand("audit", "Check structural laws over all connected graphs up to order N");
  audit_cmd->add_option("n", an, "Largest order (2..7)");
  audit_cmd->add_option("--graphs", graphs_path, "Audit these graphs instead of the built-in enumeration");
  audit_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  audit_cmd->add_option("--budget", budget, "Seconds per check before it is marked skipped");
  audit_cmd->add_option("--checks", checks, "Comma-separated check names (default: all)")->delimiter(',');
  audit_cmd->add_option("--samples", samples, "Sampled colorings per graph for the oracle check");
  bool list_checks = false;
  audit_cmd->add_flag("--list", list_checks, "List the check names");

  int nn = 0;
  bool labeled = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "Connected graphs of order N as graph6");
  enum_cmd->add_option("n", nn)->required()->check(CLI::Range(1, 7));
  enum_cmd->add_flag("--labeled", labeled, "Every labeled graph instead of one per isomorphism class");
  std::string enum_format = "graph6";
  enum_cmd->add_option("--out-format", enum_format)->check(CLI::IsMember({"edges", "graph6"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rvd_cmd) return cmd_rvd(graph_path, common, cap, certificates, flat, coloring_out);
    if (*verify_cmd) return cmd_verify(graph_path, coloring_path, common, certificates);
    if (*cut_cmd) return cmd_cut(graph_path, coloring_path, x, y, common);
    if (*family_cmd) return cmd_family(descriptor, common, out_format, coloring_out);
    if (*audit_cmd) {
      if (list_checks) {
        for (const auto& name : rvd::audit_check_names()) std::cout << name << '\n';
        return kOk;
      }
      return cmd_audit(an, graphs_path, common, cap, jobs, budget, checks, samples);
    }
    if (*enum_cmd) return cmd_enumerate(nn, labeled, enum_format);
    if (*min_cmd) {
      int v = rvd::min_size(en, ek);
      if (common.json) std::cout << json{{"n", en}, {"k", ek}, {"min_size", v}}.dump(2) << '\n';
      else std::cout << "min size = " << v << '\n';
      return kOk;
    }
    if (*max_cmd) {
      auto b = rvd::max_size_bounds(en, ek);
      if (common.json) {
        std::cout << json{{"n", en}, {"k", ek}, {"lower", b.lower}, {"upper", b.upper}}.dump(2) << '\n';
      } else if (b.lower == b.upper) {
        std::cout << "max size = " << b.upper << '\n';
      } else {
        std::cout << "max size in [" << b.lower << ", " << b.upper << "]\n";
      }
      return kOk;
    }
    if (*sparse_cmd) {
      auto w = rvd::gen_sparse_witness(en, ek);
      emit_witness(w.graph, &w.coloring, common, out_format, out_path, coloring_out);
      return kOk;
    }
    if (*full_cmd) {
      auto g = rvd::gen_sparse_full(en);
      auto c = rvd::VertexColoring::distinct(g.order());
      emit_witness(g, &c, common, out_format, out_path, coloring_out);
      return kOk;
    }
    if (*tri_cmd) {
      emit_witness(rvd::gen_triangle_chain(en), nullptr, common, out_format, out_path, coloring_out);
      return kOk;
    }
    if (*clique_cmd) {
      emit_witness(rvd::gen_clique_chain(en, ek), nullptr, common, out_format, out_path, coloring_out);
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
