#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kdep/graph.hpp"
#include "kdep/matching.hpp"

namespace kdep {

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

inline void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  serialize_edge_list(g, out);
}

// Solution file: one vertex id per line, ascending.
inline void write_solution(const VertexSet& s, std::ostream& out) {
  for (Vertex v : s) out << v << '\n';
}

inline VertexSet read_solution(std::istream& in) {
  VertexSet s;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!detail::data_line(line)) continue;
    std::istringstream iss(line);
    std::string tok, extra;
    iss >> tok;
    if (iss >> extra)
      throw ParseError("line " + std::to_string(line_no) + ": expected one id per line");
    s.push_back(static_cast<Vertex>(detail::parse_int(tok, line_no)));
  }
  normalize_vertex_set(s);
  return s;
}

// Scripted-matchings sidecar: a `k` header line, then k blocks, each a
// `size` line followed by that many `u v` lines.
inline void write_matchings(const std::vector<Matching>& ms, std::ostream& out) {
  out << ms.size() << '\n';
  for (const Matching& m : ms) {
    out << m.pairs.size() << '\n';
    for (const Edge& e : m.pairs) out << e.u << ' ' << e.v << '\n';
  }
}

inline std::vector<EdgeList> read_matchings(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!detail::data_line(line)) continue;
    std::istringstream iss(line);
    for (std::string tok; iss >> tok;) tokens.push_back(tok);
  }
  std::size_t pos = 0;
  auto next = [&]() -> long long {
    if (pos >= tokens.size()) throw ParseError("matchings file truncated");
    return detail::parse_int(tokens[pos++], 0);
  };
  long long k = next();
  if (k < 0) throw ParseError("negative matching count");
  std::vector<EdgeList> blocks;
  blocks.reserve(static_cast<std::size_t>(k));
  for (long long j = 0; j < k; ++j) {
    long long size = next();
    if (size < 0) throw ParseError("negative matching size");
    EdgeList pairs;
    pairs.reserve(static_cast<std::size_t>(size));
    for (long long i = 0; i < size; ++i) {
      Vertex u = static_cast<Vertex>(next());
      Vertex v = static_cast<Vertex>(next());
      pairs.push_back(make_edge(u, v));
    }
    blocks.push_back(std::move(pairs));
  }
  if (pos != tokens.size()) throw ParseError("trailing data in matchings file");
  return blocks;
}

inline std::vector<EdgeList> load_matchings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_matchings(in);
}

}  // namespace kdep
