#include "ordo/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ordo::io {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream fields(raw);
    Line line{number, {}};
    for (std::string tok; fields >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens.front().starts_with('#')) continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line.number) + ": " + what);
}

std::size_t parse_count(const Line& line, const std::string& tok) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    fail(line, "expected a number, got '" + tok + "'");
  }
  if (pos != tok.size() || tok.starts_with('-')) fail(line, "expected a number, got '" + tok + "'");
  return static_cast<std::size_t>(value);
}

Vertex parse_vertex(const Line& line, const std::string& tok, std::size_t n) {
  const std::size_t label = parse_count(line, tok);
  if (label < 1 || label > n) {
    fail(line, "vertex " + tok + " outside 1.." + std::to_string(n));
  }
  return label - 1;
}

std::string default_label(Vertex v) { return std::to_string(v + 1); }

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

SimpleGraph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::Parse, "empty graph file");
  const Line& header = lines.front();
  if (header.tokens.size() != 2 || header.tokens[0] != "n") fail(header, "expected 'n <vertex_count>'");
  const std::size_t n = parse_count(header, header.tokens[1]);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) fail(line, "expected 'u v'");
    const Vertex u = parse_vertex(line, line.tokens[0], n);
    const Vertex v = parse_vertex(line, line.tokens[1], n);
    if (u == v) fail(line, "loops are not allowed in a simple graph");
    edges.emplace_back(u, v);
  }
  return SimpleGraph(n, edges);
}

std::string write_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

Digraph parse_digraph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::Parse, "empty digraph file");
  const Line& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0] != "digraph" || header.tokens[1] != "n") {
    fail(header, "expected 'digraph n <vertex_count>'");
  }
  const std::size_t n = parse_count(header, header.tokens[2]);
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 3 || line.tokens[1] != "->") fail(line, "expected 'u -> v'");
    arcs.push_back({parse_vertex(line, line.tokens[0], n), parse_vertex(line, line.tokens[2], n)});
  }
  return Digraph(n, arcs);
}

std::string write_digraph(const Digraph& g) {
  std::ostringstream out;
  out << "digraph n " << g.vertex_count() << '\n';
  for (const Arc& a : g.arcs()) out << a.from + 1 << " -> " << a.to + 1 << '\n';
  return out.str();
}

EdgeColoring parse_coloring(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::Parse, "empty colouring file");
  const Line& header = lines.front();
  if (header.tokens.size() != 4 || header.tokens[0] != "n" || header.tokens[2] != "c") {
    fail(header, "expected 'n <vertices> c <colors>'");
  }
  const std::size_t n = parse_count(header, header.tokens[1]);
  const std::size_t c = parse_count(header, header.tokens[3]);
  if (c == 0 || c > 255) fail(header, "colour count must be in [1, 255]");
  std::vector<int> colors(choose2(n), -1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 3) fail(line, "expected 'u v color'");
    const Vertex u = parse_vertex(line, line.tokens[0], n);
    const Vertex v = parse_vertex(line, line.tokens[1], n);
    if (u == v) fail(line, "a pair needs two distinct vertices");
    const std::size_t color = parse_count(line, line.tokens[2]);
    if (color >= c) fail(line, "colour " + line.tokens[2] + " outside 0.." + std::to_string(c - 1));
    int& slot = colors[EdgeColoring::pair_index(n, u, v)];
    if (slot >= 0) fail(line, "pair coloured twice");
    slot = static_cast<int>(color);
  }
  if (std::find(colors.begin(), colors.end(), -1) != colors.end()) {
    throw Error(ErrorCode::Parse, "colouring leaves some pair uncoloured");
  }
  return EdgeColoring(n, c, std::vector<std::uint8_t>(colors.begin(), colors.end()));
}

std::string write_coloring(const EdgeColoring& coloring) {
  std::ostringstream out;
  const std::size_t n = coloring.vertex_count();
  out << "n " << n << " c " << coloring.color_count() << '\n';
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) out << u + 1 << ' ' << v + 1 << ' ' << coloring.color(u, v) << '\n';
  return out.str();
}

std::string to_dot(const SimpleGraph& g, const DotOptions& options) {
  const auto label = options.label ? options.label : default_label;
  std::ostringstream out;
  out << "graph " << quoted(options.name) << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << quoted(label(v)) << ";\n";
  for (const Edge& e : g.edges()) {
    const bool hot = std::find(options.highlighted_edges.begin(), options.highlighted_edges.end(), e) !=
                     options.highlighted_edges.end();
    out << "  " << quoted(label(e.u)) << " -- " << quoted(label(e.v));
    if (hot) out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Digraph& g, const DotOptions& options) {
  const auto label = options.label ? options.label : default_label;
  std::ostringstream out;
  out << "digraph " << quoted(options.name) << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << quoted(label(v)) << ";\n";
  for (const Arc& a : g.arcs()) {
    const bool hot = std::find(options.highlighted_arcs.begin(), options.highlighted_arcs.end(), a) !=
                     options.highlighted_arcs.end();
    out << "  " << quoted(label(a.from)) << " -> " << quoted(label(a.to));
    if (hot) out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const EdgeColoring& coloring, const std::vector<std::string>& palette,
                   const DotOptions& options) {
  const auto label = options.label ? options.label : default_label;
  std::ostringstream out;
  out << "graph " << quoted(options.name) << " {\n";
  const std::size_t n = coloring.vertex_count();
  for (Vertex v = 0; v < n; ++v) out << "  " << quoted(label(v)) << ";\n";
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t c = coloring.color(u, v);
      out << "  " << quoted(label(u)) << " -- " << quoted(label(v)) << " [color="
          << (c < palette.size() ? palette[c] : "black") << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ordo::io
