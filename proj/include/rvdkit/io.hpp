#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rvdkit/coloring.hpp"
#include "rvdkit/errors.hpp"
#include "rvdkit/graph.hpp"

namespace rvd {

enum class GraphFormat { Auto, EdgeList, Graph6 };

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<long long> to_int(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

inline std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace detail

/// Edge-list text: "u v" lines with 0-based ids, '#' comments, blank lines,
/// and an optional "n <count>" header that fixes the order (and so permits
/// isolated vertices). Without a header the order is max id + 1.
inline Graph parse_edge_list(std::string_view text) {
  std::optional<long long> declared;
  std::vector<std::pair<Edge, std::size_t>> edges;  // with line numbers
  long long max_id = -1;
  auto lines = detail::lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    auto body = detail::strip_comment(lines[i]);
    if (body.empty()) continue;
    auto tok = detail::split_ws(body);
    if (tok.size() != 2)
      throw ParseError("expected \"u v\" or \"n <count>\"", ParseError::Unit::Line, line_no);
    if (tok[0] == "n") {
      if (declared) throw ParseError("duplicate order header", ParseError::Unit::Line, line_no);
      auto count = detail::to_int(tok[1]);
      if (!count || *count < 1 || *count > 1'000'000)
        throw ParseError("bad vertex count", ParseError::Unit::Line, line_no);
      declared = count;
      continue;
    }
    auto u = detail::to_int(tok[0]);
    auto v = detail::to_int(tok[1]);
    if (!u || !v || *u < 0 || *v < 0 || *u > 1'000'000 || *v > 1'000'000)
      throw ParseError("vertex ids must be nonnegative integers", ParseError::Unit::Line, line_no);
    if (*u == *v)
      throw ParseError("self-loop at vertex " + std::to_string(*u), ParseError::Unit::Line, line_no);
    max_id = std::max({max_id, *u, *v});
    edges.push_back({{static_cast<Vertex>(*u), static_cast<Vertex>(*v)}, line_no});
  }
  long long n = declared ? *declared : max_id + 1;
  if (n < 1) throw ParseError("no vertices", ParseError::Unit::Line, lines.size());
  std::vector<Edge> plain;
  for (auto& [e, line_no] : edges) {
    if (e.first >= n || e.second >= n)
      throw ParseError("vertex id out of range 0.." + std::to_string(n - 1),
                       ParseError::Unit::Line, line_no);
    plain.push_back(e);
  }
  return Graph::from_edges(static_cast<int>(n), plain);
}

/// Decodes one graph6 string (short form, n <= 62). Error offsets are
/// reported relative to `base_offset`.
inline Graph parse_graph6(std::string_view text, std::size_t base_offset = 0) {
  std::size_t offset = 0;
  if (text.starts_with(">>graph6<<")) offset = 10;
  text = text.substr(0, text.find_last_not_of("\r\n") + 1);
  if (offset >= text.size())
    throw ParseError("empty graph6 string", ParseError::Unit::Byte, base_offset + offset);
  auto byte_at = [&](std::size_t i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("invalid graph6 byte", ParseError::Unit::Byte, base_offset + i);
    return static_cast<int>(c - 63);
  };
  const int n = byte_at(offset);
  if (n == 63)
    throw ParseError("long-form graph6 (n > 62) is not supported", ParseError::Unit::Byte, base_offset + offset);
  if (n == 0)
    throw ParseError("graph6 graph has no vertices", ParseError::Unit::Byte, base_offset + offset);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - offset - 1 != body)
    throw ParseError("graph6 length does not match order " + std::to_string(n),
                     ParseError::Unit::Byte,
                     base_offset + std::min(text.size(), offset + 1 + body));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::size_t pos = offset + 1 + k / 6;
      if ((byte_at(pos) >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  // Padding bits must be zero.
  for (; k < body * 6; ++k) {
    std::size_t pos = offset + 1 + k / 6;
    if ((byte_at(pos) >> (5 - k % 6)) & 1)
      throw ParseError("nonzero graph6 padding", ParseError::Unit::Byte, base_offset + pos);
  }
  return Graph::from_edges(n, edges);
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n < 1 || n > 62) throw std::invalid_argument("graph6 short form needs 1 <= n <= 62");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, used = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

/// Guesses the format from the first content line: edge lists always have
/// two whitespace-separated fields, graph6 lines have none.
inline GraphFormat detect_format(std::string_view text) {
  for (auto line : detail::lines_of(text)) {
    auto body = detail::strip_comment(line);
    if (body.empty()) continue;
    return detail::split_ws(body).size() == 1 ? GraphFormat::Graph6 : GraphFormat::EdgeList;
  }
  return GraphFormat::EdgeList;
}

/// All graphs in a text: one per non-empty graph6 line, or a single edge list.
inline std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format = GraphFormat::Auto) {
  if (format == GraphFormat::Auto) format = detect_format(text);
  if (format == GraphFormat::EdgeList) return {parse_edge_list(text)};
  std::vector<Graph> out;
  std::size_t offset = 0;
  for (auto line : detail::lines_of(text)) {
    auto body = detail::trim(line);
    if (!body.empty() && !body.starts_with('#'))
      out.push_back(parse_graph6(body, offset + static_cast<std::size_t>(body.data() - line.data())));
    offset += line.size() + 1;
  }
  if (out.empty()) throw ParseError("no graph6 strings", ParseError::Unit::Byte, 0);
  return out;
}

inline Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto) {
  auto graphs = parse_graphs(text, format);
  if (graphs.size() != 1)
    throw ParseError("expected exactly one graph, found " + std::to_string(graphs.size()),
                     ParseError::Unit::Line, 1);
  return graphs.front();
}

/// Coloring text: "vertex color" lines, both nonnegative integers, every
/// vertex 0..n-1 exactly once. '#' comments and blank lines are skipped.
inline VertexColoring parse_coloring(std::string_view text, int n) {
  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  auto lines = detail::lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    auto body = detail::strip_comment(lines[i]);
    if (body.empty()) continue;
    auto tok = detail::split_ws(body);
    if (tok.size() != 2) throw ParseError("expected \"vertex color\"", ParseError::Unit::Line, line_no);
    auto v = detail::to_int(tok[0]);
    auto c = detail::to_int(tok[1]);
    if (!v || !c || *v < 0 || *c < 0 || *c > 1'000'000'000)
      throw ParseError("vertex and color must be nonnegative integers", ParseError::Unit::Line, line_no);
    if (*v >= n)
      throw ParseError("vertex " + std::to_string(*v) + " out of range 0.." + std::to_string(n - 1),
                       ParseError::Unit::Line, line_no);
    if (colors[*v] != -1)
      throw ParseError("vertex " + std::to_string(*v) + " colored twice", ParseError::Unit::Line, line_no);
    colors[*v] = static_cast<int>(*c);
  }
  for (Vertex v = 0; v < n; ++v)
    if (colors[v] == -1)
      throw ParseError("vertex " + std::to_string(v) + " has no color", ParseError::Unit::Line, lines.size());
  return VertexColoring(std::move(colors));
}

inline std::string to_coloring_text(const VertexColoring& c) {
  std::ostringstream os;
  for (std::size_t v = 0; v < c.size(); ++v) os << v << ' ' << c.colors()[v] << '\n';
  return os.str();
}

}  // namespace rvd
