#include "ctgraph/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "ctgraph/errors.hpp"

namespace ctgraph {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> data_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::istringstream ss(text);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens.front().starts_with("#")) continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

long parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  const auto lines = data_lines(in);
  if (lines.empty()) throw ParseError(0, "empty edge list");
  const Line& head = lines.front();
  if (head.tokens.size() != 2) throw ParseError(head.number, "header must be \"n m\"");
  const long n = parse_int(head.tokens[0], head.number);
  const long m = parse_int(head.tokens[1], head.number);
  if (n < 0 || m < 0) throw ParseError(head.number, "negative count in header");
  if (static_cast<long>(lines.size()) - 1 != m)
    throw ParseError(head.number, "header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, "edge line must be \"u v\"");
    const long u = parse_int(l.tokens[0], l.number), v = parse_int(l.tokens[1], l.number);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(l.number, "vertex id out of range 0.." + std::to_string(n - 1));
    if (u == v) throw ParseError(l.number, "self-loop at vertex " + std::to_string(u));
    if (seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) throw ParseError(l.number, "repeated edge");
    seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_adjacency_matrix(std::istream& in) {
  const auto lines = data_lines(in);
  const std::size_t n = lines.size();
  std::vector<std::vector<int>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != n)
      throw ParseError(l.number, "row has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(n));
    for (const auto& tok : l.tokens) {
      if (tok != "0" && tok != "1") throw ParseError(l.number, "matrix entries must be 0 or 1, got '" + tok + "'");
      a[i].push_back(tok == "1");
    }
    if (a[i][i]) throw ParseError(l.number, "nonzero diagonal entry");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (a[i][j] != a[j][i]) throw ParseError(lines[i].number, "matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (a[i][j]) edges.emplace_back(static_cast<int>(j), static_cast<int>(i));
    }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_graph(std::istream& in, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return parse_edge_list(in);
  if (format == GraphFormat::AdjacencyMatrix) return parse_adjacency_matrix(in);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream probe(text);
  const auto lines = data_lines(probe);
  bool matrix = !lines.empty() && lines.front().tokens.size() == lines.size();
  if (matrix)
    for (const auto& tok : lines.front().tokens) matrix = matrix && (tok == "0" || tok == "1");
  std::istringstream again(text);
  return matrix ? parse_adjacency_matrix(again) : parse_edge_list(again);
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_graph(in, format);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto vs = g.vertices();
  bool identity = true;
  for (std::size_t i = 0; i < vs.size(); ++i) identity = identity && vs[i] == static_cast<int>(i);
  if (!identity) {
    out << "# ids";
    for (int v : vs) out << ' ' << v;
    out << '\n';
  }
  const Graph c = compacted(g);
  out << c.order() << ' ' << c.size() << '\n';
  for (Edge e : c.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_adjacency_matrix(std::ostream& out, const Graph& g) {
  const auto vs = g.vertices();
  for (int u : vs) {
    for (std::size_t j = 0; j < vs.size(); ++j) out << (j ? " " : "") << (g.has_edge(u, vs[j]) ? 1 : 0);
    out << '\n';
  }
}

}  // namespace ctgraph
