#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "kdep/errors.hpp"

namespace kdep {

using Vertex = int;

enum class Side : unsigned char { Left, Right };

// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

using EdgeList = std::vector<Edge>;

// Sorted vector of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

inline std::uint64_t edge_key(const Edge& e) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
         static_cast<std::uint32_t>(e.v);
}

using EdgeKeySet = std::unordered_set<std::uint64_t>;

inline EdgeKeySet make_edge_key_set(const EdgeList& edges) {
  EdgeKeySet keys;
  keys.reserve(edges.size() * 2);
  for (const Edge& e : edges) keys.insert(edge_key(e));
  return keys;
}

inline void normalize_vertex_set(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool vertex_set_contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

// Bipartite graph: vertices 0..n-1, simple undirected edges, and a
// two-coloring with every edge joining a Left vertex to a Right vertex.
// Immutable after construction; safe to share across threads.
class Graph {
 public:
  // The empty graph on zero vertices.
  Graph() = default;

  // Validates simplicity (range, no self-loops, no duplicates), then
  // 2-colors each connected component by BFS, assigning Left to the
  // lowest-id vertex of the component. Isolated vertices end up Left.
  // Throws Error on a malformed edge list, NotBipartiteError (with a
  // witness odd cycle) if no 2-coloring exists.
  static Graph from_edges(int n, EdgeList edges) {
    std::vector<Side> side = two_color(n, edges);
    return with_sides(n, std::move(edges), std::move(side));
  }

  // Builds a graph with caller-supplied side labels (used to keep the
  // bipartition stable under edge removal). Every edge must cross.
  static Graph with_sides(int n, EdgeList edges, std::vector<Side> side) {
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    normalize_and_validate(n, g.edges_);
    if (static_cast<int>(side.size()) != n)
      throw Error("side label vector has wrong length");
    g.side_ = std::move(side);
    for (const Edge& e : g.edges_)
      if (g.side_[e.u] == g.side_[e.v])
        throw Error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    "} does not cross the bipartition");
    g.adj_.assign(n, {});
    for (const Edge& e : g.edges_) {
      g.adj_[e.u].push_back(e.v);
      g.adj_[e.v].push_back(e.u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Sorted, normalized (u < v) edge list.
  const EdgeList& edges() const { return edges_; }

  // Neighbors of v in ascending id order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  Side side(Vertex v) const { return side_[v]; }
  const std::vector<Side>& sides() const { return side_; }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  VertexSet vertices_on(Side s) const {
    VertexSet out;
    for (Vertex v = 0; v < n_; ++v)
      if (side_[v] == s) out.push_back(v);
    return out;
  }

 private:
  static void normalize_and_validate(int n, EdgeList& edges) {
    if (n < 0) throw Error("negative vertex count");
    for (Edge& e : edges) {
      if (e.u == e.v)
        throw Error("self-loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw Error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    "} out of range for n=" + std::to_string(n));
      e = make_edge(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
      throw Error("duplicate edge {" + std::to_string(dup->u) + "," +
                  std::to_string(dup->v) + "}");
  }

  // BFS 2-coloring; throws NotBipartiteError with a witness odd cycle.
  static std::vector<Side> two_color(int n, const EdgeList& edges) {
    std::vector<std::vector<Vertex>> adj(std::max(n, 0));
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
        throw Error("edge out of range or self-loop");
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());

    std::vector<Side> side(n, Side::Left);
    std::vector<int> color(n, -1);    // -1 unvisited, else 0/1
    std::vector<Vertex> parent(n, -1);
    std::vector<int> depth(n, 0);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex root = 0; root < n; ++root) {
      if (color[root] != -1) continue;
      color[root] = 0;
      queue.clear();
      queue.push_back(root);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        for (Vertex y : adj[x]) {
          if (color[y] == -1) {
            color[y] = 1 - color[x];
            parent[y] = x;
            depth[y] = depth[x] + 1;
            queue.push_back(y);
          } else if (color[y] == color[x]) {
            throw NotBipartiteError("graph is not bipartite",
                                    witness_cycle(x, y, parent, depth));
          }
        }
      }
    }
    for (Vertex v = 0; v < n; ++v)
      side[v] = color[v] == 1 ? Side::Right : Side::Left;
    return side;
  }

  // x and y are same-colored endpoints of an edge found during BFS; the
  // two tree paths to their lowest common ancestor plus the edge {x,y}
  // close an odd cycle.
  static std::vector<int> witness_cycle(Vertex x, Vertex y,
                                        const std::vector<Vertex>& parent,
                                        const std::vector<int>& depth) {
    std::vector<int> up_x{x}, up_y{y};
    Vertex a = x, b = y;
    while (depth[a] > depth[b]) up_x.push_back(a = parent[a]);
    while (depth[b] > depth[a]) up_y.push_back(b = parent[b]);
    while (a != b) {
      up_x.push_back(a = parent[a]);
      up_y.push_back(b = parent[b]);
    }
    // up_x ends at the LCA; append the y-side path in reverse, excluding
    // the LCA itself. Both tree paths have equal depth parity, so the
    // closed walk has odd length.
    std::vector<int> cycle(up_x.begin(), up_x.end());
    for (std::size_t i = up_y.size() - 1; i-- > 0;) cycle.push_back(up_y[i]);
    return cycle;
  }

  int n_ = 0;
  EdgeList edges_;
  std::vector<Side> side_;
  std::vector<std::vector<Vertex>> adj_;
};

// --- edge-list text format ---------------------------------------------
//
//   # comment lines allowed anywhere
//   n m
//   u v        (exactly m lines, 0 <= u,v < n, u != v)

namespace detail {

inline bool data_line(const std::string& line) {
  for (char c : line) {
    if (c == '#') return false;
    if (!std::isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;  // blank
}

inline long long parse_int(const std::string& tok, int line_no) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": trailing characters in '" + tok + "'");
  return value;
}

}  // namespace detail

inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  EdgeList edges;
  EdgeKeySet seen;
  auto fields = [&](const std::string& l) {
    std::istringstream iss(l);
    std::vector<std::string> out;
    for (std::string tok; iss >> tok;) out.push_back(tok);
    return out;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!detail::data_line(line)) continue;
    auto toks = fields(line);
    if (n < 0) {
      if (toks.size() != 2)
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'n m'");
      n = detail::parse_int(toks[0], line_no);
      m = detail::parse_int(toks[1], line_no);
      if (n < 0 || m < 0)
        throw ParseError("line " + std::to_string(line_no) + ": negative n or m");
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError("line " + std::to_string(line_no) + ": more than m=" +
                       std::to_string(m) + " edge lines");
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected edge 'u v'");
    long long u = detail::parse_int(toks[0], line_no);
    long long v = detail::parse_int(toks[1], line_no);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range [0," +
                       std::to_string(n) + ")");
    if (u == v)
      throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                       std::to_string(u));
    Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(edge_key(e)).second)
      throw ParseError("line " + std::to_string(line_no) + ": duplicate edge {" +
                       std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    edges.push_back(e);
  }
  if (n < 0) throw ParseError("missing 'n m' header line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("expected m=" + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  try {
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
  } catch (const NotBipartiteError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream iss(text);
  return parse_edge_list(iss);
}

inline void serialize_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream oss;
  serialize_edge_list(g, oss);
  return oss.str();
}

// --- operations ----------------------------------------------------------

// Returns a graph with the same vertices and bipartition and with the
// given edges deleted. `removed` has set semantics (duplicates collapse).
inline Graph remove_edges(const Graph& g, const EdgeList& removed) {
  EdgeKeySet keys;
  keys.reserve(removed.size() * 2);
  for (const Edge& e : removed) {
    Edge norm = make_edge(e.u, e.v);
    if (!g.has_edge(norm.u, norm.v))
      throw EdgeNotPresentError("edge {" + std::to_string(norm.u) + "," +
                                std::to_string(norm.v) + "} not present");
    keys.insert(edge_key(norm));
  }
  EdgeList kept;
  kept.reserve(g.edges().size() - keys.size());
  for (const Edge& e : g.edges())
    if (!keys.count(edge_key(e))) kept.push_back(e);
  return Graph::with_sides(g.vertex_count(), std::move(kept),
                           std::vector<Side>(g.sides()));
}

namespace detail {

inline std::vector<char> membership(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.vertex_count())
      throw Error("vertex id " + std::to_string(v) + " invalid for this graph");
    in[v] = 1;
  }
  return in;
}

}  // namespace detail

// Number of neighbors inside s, for each member of s, measured in g.
inline std::map<Vertex, int> induced_degrees(const Graph& g, const VertexSet& s) {
  std::vector<char> in = detail::membership(g, s);
  std::map<Vertex, int> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in[v]) continue;
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += in[w];
    out[v] = d;
  }
  return out;
}

// True iff every member of s has at most k neighbors inside s.
inline bool is_k_dependent(const Graph& g, const VertexSet& s, int k) {
  if (k < 0) throw InvalidKError("k must be >= 0");
  std::vector<char> in = detail::membership(g, s);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in[v]) continue;
    int d = 0;
    for (Vertex w : g.neighbors(v)) {
      d += in[w];
      if (d > k) return false;
    }
  }
  return true;
}

// V \ s for the vertex universe of g; s must be sorted.
inline VertexSet complement(const Graph& g, const VertexSet& s) {
  VertexSet out;
  out.reserve(g.vertex_count() - s.size());
  std::size_t i = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (i < s.size() && s[i] == v) {
      ++i;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace kdep
