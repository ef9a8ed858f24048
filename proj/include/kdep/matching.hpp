#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "kdep/graph.hpp"

namespace kdep {

// Set of pairwise vertex-disjoint edges with O(1) partner lookup.
struct Matching {
  EdgeList pairs;                // sorted, normalized
  std::vector<Vertex> partner;   // size n; -1 means unmatched

  int size() const { return static_cast<int>(pairs.size()); }
  bool matched(Vertex v) const { return partner[v] >= 0; }

  static Matching empty(int n) {
    Matching m;
    m.partner.assign(n, -1);
    return m;
  }

  // Validates range and vertex-disjointness; throws Error otherwise.
  static Matching from_pairs(int n, EdgeList raw) {
    Matching m = empty(n);
    for (Edge& e : raw) {
      e = make_edge(e.u, e.v);
      if (e.u < 0 || e.v >= n || e.u == e.v)
        throw Error("matching pair {" + std::to_string(e.u) + "," +
                    std::to_string(e.v) + "} out of range");
      if (m.partner[e.u] != -1 || m.partner[e.v] != -1)
        throw Error("matching pairs share vertex " +
                    std::to_string(m.partner[e.u] != -1 ? e.u : e.v));
      m.partner[e.u] = e.v;
      m.partner[e.v] = e.u;
    }
    std::sort(raw.begin(), raw.end());
    m.pairs = std::move(raw);
    return m;
  }
};

// True iff all pairs are edges of g and pairwise vertex-disjoint.
inline bool verify_matching(const Graph& g, const EdgeList& pairs) {
  std::vector<char> used(g.vertex_count(), 0);
  for (const Edge& raw : pairs) {
    Edge e = make_edge(raw.u, raw.v);
    if (!g.has_edge(e.u, e.v)) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

inline bool verify_matching(const Graph& g, const Matching& m) {
  return verify_matching(g, m.pairs);
}

// True iff every edge of g has at least one endpoint in c.
inline bool verify_cover(const Graph& g, const VertexSet& c) {
  std::vector<char> in = detail::membership(g, c);
  for (const Edge& e : g.edges())
    if (!in[e.u] && !in[e.v]) return false;
  return true;
}

namespace detail {

// Hopcroft-Karp state. Deterministic: free Left vertices are processed in
// ascending id and adjacency lists are scanned in ascending neighbor id,
// so a given graph always yields the same matching.
class HopcroftKarp {
 public:
  explicit HopcroftKarp(const Graph& g)
      : g_(g), partner_(g.vertex_count(), -1), dist_(g.vertex_count(), kInf) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.side(v) == Side::Left) left_.push_back(v);
  }

  Matching run() {
    while (bfs()) {
      for (Vertex u : left_)
        if (partner_[u] == -1) dfs(u);
    }
    Matching m = Matching::empty(g_.vertex_count());
    m.partner = partner_;
    for (Vertex u : left_)
      if (partner_[u] != -1) m.pairs.push_back(make_edge(u, partner_[u]));
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  // Layered BFS from free Left vertices; true if some free Right vertex
  // is reachable (an augmenting path exists).
  bool bfs() {
    queue_.clear();
    for (Vertex u : left_) dist_[u] = kInf;
    for (Vertex u : left_)
      if (partner_[u] == -1) {
        dist_[u] = 0;
        queue_.push_back(u);
      }
    bool found = false;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex u = queue_[head];
      for (Vertex v : g_.neighbors(u)) {
        Vertex u2 = partner_[v];
        if (u2 == -1) {
          found = true;
        } else if (dist_[u2] == kInf) {
          dist_[u2] = dist_[u] + 1;
          queue_.push_back(u2);
        }
      }
    }
    return found;
  }

  bool dfs(Vertex u) {
    for (Vertex v : g_.neighbors(u)) {
      Vertex u2 = partner_[v];
      if (u2 == -1 || (dist_[u2] == dist_[u] + 1 && dfs(u2))) {
        partner_[u] = v;
        partner_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> left_;
  std::vector<Vertex> partner_;
  std::vector<int> dist_;
  std::vector<Vertex> queue_;
};

}  // namespace detail

// Maximum-cardinality matching of a bipartite graph in O(m sqrt n).
inline Matching max_matching(const Graph& g) {
  return detail::HopcroftKarp(g).run();
}

// Minimum vertex cover from a maximum matching, by alternating
// reachability: with Z the set of vertices reachable from free Left
// vertices along alternating paths, C = (Left \ Z) u (Right n Z).
// Throws NotMaximumMatchingError if an augmenting path turns up, which
// means m was not maximum.
inline VertexSet konig_cover(const Graph& g, const Matching& m) {
  const int n = g.vertex_count();
  if (static_cast<int>(m.partner.size()) != n)
    throw Error("matching built for a different vertex count");
  for (const Edge& e : m.pairs)
    if (!g.has_edge(e.u, e.v))
      throw Error("matching edge {" + std::to_string(e.u) + "," +
                  std::to_string(e.v) + "} not in graph");
  for (Vertex v = 0; v < n; ++v) {
    Vertex p = m.partner[v];
    if (p != -1 && (p < 0 || p >= n || m.partner[p] != v))
      throw Error("matching partner map is not an involution");
  }

  std::vector<char> in_z(n, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v)
    if (g.side(v) == Side::Left && m.partner[v] == -1) {
      in_z[v] = 1;
      queue.push_back(v);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];  // always a Left vertex
    for (Vertex v : g.neighbors(u)) {
      if (v == m.partner[u] || in_z[v]) continue;  // Left->Right only via non-matching edges
      in_z[v] = 1;
      Vertex u2 = m.partner[v];
      if (u2 == -1)
        throw NotMaximumMatchingError(
            "augmenting path found; matching is not maximum");
      if (!in_z[u2]) {
        in_z[u2] = 1;
        queue.push_back(u2);
      }
    }
  }

  VertexSet cover;
  for (Vertex v = 0; v < n; ++v) {
    bool left = g.side(v) == Side::Left;
    if ((left && !in_z[v]) || (!left && in_z[v])) cover.push_back(v);
  }
  if (static_cast<int>(cover.size()) != m.size())
    throw NotMaximumMatchingError("cover size " + std::to_string(cover.size()) +
                                  " != matching size " + std::to_string(m.size()));
  return cover;
}

// Maximum independent set of the bipartite graph:
// V minus a Konig cover of a maximum matching; size n - nu(g) = alpha(g).
inline VertexSet max_independent_set(const Graph& g, const Matching& max_m) {
  return complement(g, konig_cover(g, max_m));
}

inline VertexSet max_independent_set(const Graph& g) {
  return max_independent_set(g, max_matching(g));
}

}  // namespace kdep
