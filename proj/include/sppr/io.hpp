#pragma once

// Plain-text formats:
//   graph <directed|undirected> <n>
//   e <u> <v> <p>/<q>
// weight map:   w <u> <v> <p>/<q>   (one line per edge of the reference graph)
// path system:  path <s> <t> <v0> <v1> ... <vk>
// '#' starts a comment; blank lines are ignored. Writers emit canonical edge
// order and lowest-terms rationals.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sppr/graph.hpp"
#include "sppr/path_system.hpp"

namespace sppr {

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

inline std::size_t parse_index(const Line& line, const std::string& tok) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line.number, "expected a vertex index, got '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    throw ParseError(line.number, "vertex index out of range: '" + tok + "'");
  }
}

inline Rational parse_weight(const Line& line, const std::string& tok) {
  try {
    return Rational::parse(tok);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line.number, e.what());
  }
}

}  // namespace detail

inline WeightedGraph read_graph(std::istream& in) {
  auto lines = detail::tokenize(in);
  if (lines.empty()) throw ParseError(0, "missing 'graph' header");
  const auto& head = lines.front();
  if (head.tokens.size() != 3 || head.tokens[0] != "graph" ||
      (head.tokens[1] != "directed" && head.tokens[1] != "undirected"))
    throw ParseError(head.number, "expected 'graph <directed|undirected> <n>'");
  bool directed = head.tokens[1] == "directed";
  std::size_t n = detail::parse_index(head, head.tokens[2]);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 4 || l.tokens[0] != "e")
      throw ParseError(l.number, "expected 'e <u> <v> <p>/<q>'");
    Edge e{detail::parse_index(l, l.tokens[1]), detail::parse_index(l, l.tokens[2]),
           detail::parse_weight(l, l.tokens[3])};
    if (e.tail >= n || e.head >= n) throw ParseError(l.number, "vertex index out of range");
    if (e.tail == e.head) throw ParseError(l.number, "self-loop");
    if (!e.weight.is_positive()) throw ParseError(l.number, "weight must be positive");
    edges.push_back(std::move(e));
  }
  try {
    return WeightedGraph(directed, n, std::move(edges));
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

inline void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << "graph " << (g.directed() ? "directed" : "undirected") << ' ' << g.vertex_count()
      << '\n';
  for (const auto& e : g.edges())
    out << "e " << e.tail << ' ' << e.head << ' ' << e.weight.str() << '\n';
}

inline WeightMap read_weights(std::istream& in, const WeightedGraph& g) {
  std::vector<std::optional<Rational>> slots(g.edge_count());
  for (const auto& l : detail::tokenize(in)) {
    if (l.tokens.size() != 4 || l.tokens[0] != "w")
      throw ParseError(l.number, "expected 'w <u> <v> <p>/<q>'");
    Vertex u = detail::parse_index(l, l.tokens[1]);
    Vertex v = detail::parse_index(l, l.tokens[2]);
    auto id = g.find_edge(u, v);
    if (!id) throw ParseError(l.number, "not an edge of the reference graph");
    if (slots[*id]) throw ParseError(l.number, "edge listed twice");
    Rational w = detail::parse_weight(l, l.tokens[3]);
    if (!w.is_positive()) throw ParseError(l.number, "weight must be positive");
    slots[*id] = std::move(w);
  }
  std::vector<Rational> weights;
  weights.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      const auto& e = g.edge(i);
      throw ParseError(0, "missing weight for edge (" + std::to_string(e.tail) + "," +
                              std::to_string(e.head) + ")");
    }
    weights.push_back(std::move(*slots[i]));
  }
  return WeightMap(std::move(weights));
}

inline void write_weights(std::ostream& out, const WeightedGraph& g, const WeightMap& w) {
  w.require_aligned(g);
  for (EdgeId i = 0; i < g.edge_count(); ++i)
    out << "w " << g.edge(i).tail << ' ' << g.edge(i).head << ' ' << w[i].str() << '\n';
}

inline PathSystem read_paths(std::istream& in, const WeightedGraph& g) {
  PathSystem ps;
  for (const auto& l : detail::tokenize(in)) {
    if (l.tokens.size() < 4 || l.tokens[0] != "path")
      throw ParseError(l.number, "expected 'path <s> <t> <v0> ... <vk>'");
    Vertex s = detail::parse_index(l, l.tokens[1]);
    Vertex t = detail::parse_index(l, l.tokens[2]);
    Path p;
    for (std::size_t i = 3; i < l.tokens.size(); ++i)
      p.vertices.push_back(detail::parse_index(l, l.tokens[i]));
    if (p.source() != s || p.target() != t)
      throw ParseError(l.number, "path endpoints do not match the declared pair");
    if (!is_valid_path(g, p)) throw ParseError(l.number, "not a path of the graph");
    if (ps.find(s, t)) throw ParseError(l.number, "pair listed twice");
    ps.add(std::move(p));
  }
  return ps;
}

inline void write_paths(std::ostream& out, const PathSystem& ps) {
  for (const auto& [k, e] : ps.entries()) {
    out << "path " << k.first << ' ' << k.second;
    for (Vertex v : e.path.vertices) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace sppr
