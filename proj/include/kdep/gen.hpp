#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "kdep/graph.hpp"
#include "kdep/oracle.hpp"

namespace kdep {

// Uniform draw in [0,1) from the top 53 bits; keeps generated instances
// byte-identical across platforms (mt19937_64 output is fully specified).
inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Bipartite Erdos-Renyi: parts of size ceil(n/2) and floor(n/2), each
// cross pair kept independently with probability p. Deterministic for a
// given seed (pairs scanned in ascending order).
inline Graph random_bipartite(int n, double p, std::uint64_t seed) {
  if (n < 0) throw Error("negative vertex count");
  if (p < 0.0 || p > 1.0) throw Error("edge probability must be in [0,1]");
  const int left = (n + 1) / 2;
  std::mt19937_64 rng(seed);
  EdgeList edges;
  for (Vertex u = 0; u < left; ++u)
    for (Vertex v = left; v < n; ++v)
      if (unit_draw(rng) < p) edges.push_back(Edge{u, v});
  return Graph::from_edges(n, std::move(edges));
}

// General Erdos-Renyi over all vertex pairs; may be non-bipartite.
inline GeneralGraph random_general(int n, double p, std::uint64_t seed) {
  if (n < 0) throw Error("negative vertex count");
  if (p < 0.0 || p > 1.0) throw Error("edge probability must be in [0,1]");
  std::mt19937_64 rng(seed);
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit_draw(rng) < p) edges.push_back(Edge{u, v});
  return GeneralGraph::from_edges(n, std::move(edges));
}

// Bipartite graph with an exact edge count, sampled by rejection; suits
// large sparse instances where per-pair scanning is too slow.
inline Graph random_bipartite_edges(int left, int right, long long m,
                                    std::uint64_t seed) {
  if (left < 0 || right < 0) throw Error("negative part size");
  long long possible = static_cast<long long>(left) * right;
  if (m < 0 || m > possible)
    throw Error("edge count " + std::to_string(m) + " impossible for parts " +
                std::to_string(left) + "x" + std::to_string(right));
  std::mt19937_64 rng(seed);
  EdgeKeySet seen;
  seen.reserve(static_cast<std::size_t>(m) * 2);
  EdgeList edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (static_cast<long long>(edges.size()) < m) {
    Vertex u = static_cast<Vertex>(rng() % left);
    Vertex v = static_cast<Vertex>(left + rng() % right);
    Edge e = make_edge(u, v);
    if (seen.insert(edge_key(e)).second) edges.push_back(e);
  }
  return Graph::from_edges(left + right, std::move(edges));
}

}  // namespace kdep
