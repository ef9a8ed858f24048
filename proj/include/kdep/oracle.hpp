#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kdep/approx.hpp"
#include "kdep/graph.hpp"
#include "kdep/matching.hpp"

namespace kdep {

// Desk-scale brute-force thresholds; configuration, not logic.
inline constexpr int kDependentOracleLimit = 22;
inline constexpr int kMatchingOracleLimit = 14;

// Adjacency container without the bipartite constraint. The exact solvers
// work on this so the Konig-Egervary experiments can feed non-bipartite
// graphs; a Graph converts losslessly.
struct GeneralGraph {
  int n = 0;
  EdgeList edges;                         // sorted, normalized
  std::vector<std::vector<Vertex>> adj;   // ascending per vertex

  static GeneralGraph from_edges(int n, EdgeList es) {
    if (n < 0) throw Error("negative vertex count");
    for (Edge& e : es) {
      if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
      e = make_edge(e.u, e.v);
      if (e.u < 0 || e.v >= n)
        throw Error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    "} out of range");
    }
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
      throw Error("duplicate edge");
    GeneralGraph g;
    g.n = n;
    g.edges = std::move(es);
    g.adj.assign(n, {});
    for (const Edge& e : g.edges) {
      g.adj[e.u].push_back(e.v);
      g.adj[e.v].push_back(e.u);
    }
    return g;
  }

  static GeneralGraph from_graph(const Graph& g) {
    return from_edges(g.vertex_count(), g.edges());
  }

  GeneralGraph without_edges(const EdgeList& removed) const {
    EdgeKeySet keys;
    for (const Edge& raw : removed) {
      Edge e = make_edge(raw.u, raw.v);
      keys.insert(edge_key(e));
    }
    EdgeList kept;
    for (const Edge& e : edges)
      if (!keys.count(edge_key(e))) kept.push_back(e);
    if (kept.size() + keys.size() != edges.size())
      throw EdgeNotPresentError("removal set contains an absent edge");
    return from_edges(n, std::move(kept));
  }
};

namespace detail {

// Bit masks only go up to 63 vertices; thresholds keep us far below that.
inline std::vector<std::uint64_t> adjacency_masks(const GeneralGraph& g) {
  if (g.n > 63) throw TooLargeError("bitmask oracle supports at most 63 vertices");
  std::vector<std::uint64_t> mask(g.n, 0);
  for (const Edge& e : g.edges) {
    mask[e.u] |= 1ULL << e.v;
    mask[e.v] |= 1ULL << e.u;
  }
  return mask;
}

inline VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet out;
  while (mask) {
    int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace detail

// One certified exact optimum with search-effort accounting.
struct OracleResult {
  VertexSet optimum;
  int size = 0;
  long long nodes_explored = 0;
  bool certified = false;
};

namespace detail {

// Exhaustive scan over all 2^n subsets, ascending mask order; first
// strict improvement wins, so the result is deterministic.
inline OracleResult exhaustive_max_k_dependent(const GeneralGraph& g, int k,
                                               const std::vector<std::uint64_t>& adj) {
  OracleResult result;
  std::uint64_t best_mask = 0;
  int best = 0;
  const std::uint64_t total = 1ULL << g.n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ++result.nodes_explored;
    if (std::popcount(mask) <= best) continue;
    bool ok = true;
    for (std::uint64_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (std::popcount(adj[v] & mask) > k) {
        ok = false;
        break;
      }
    }
    if (ok) {
      best = std::popcount(mask);
      best_mask = mask;
    }
  }
  result.optimum = mask_to_set(best_mask);
  result.size = best;
  result.certified = true;
  return result;
}

class KDependentBranchAndBound {
 public:
  KDependentBranchAndBound(const GeneralGraph& g, int k)
      : k_(k), n_(g.n), adj_(adjacency_masks(g)) {}

  OracleResult run() {
    seed_greedy();
    std::uint64_t all = n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
    recurse(0, all);
    OracleResult result;
    result.optimum = mask_to_set(best_mask_);
    result.size = std::popcount(best_mask_);
    result.nodes_explored = nodes_;
    result.certified = true;
    return result;
  }

 private:
  // Ascending-id greedy seed: add a vertex whenever the chosen set stays
  // k-dependent. Gives the bound a strong start.
  void seed_greedy() {
    std::uint64_t chosen = 0;
    for (int v = 0; v < n_; ++v) {
      std::uint64_t with = chosen | (1ULL << v);
      if (feasible_after_add(chosen, v)) chosen = with;
    }
    best_mask_ = chosen;
  }

  bool feasible_after_add(std::uint64_t chosen, int v) const {
    std::uint64_t with = chosen | (1ULL << v);
    if (std::popcount(adj_[v] & with) > k_) return false;
    for (std::uint64_t nb = adj_[v] & chosen; nb;) {
      int y = std::countr_zero(nb);
      nb &= nb - 1;
      if (std::popcount(adj_[y] & with) > k_) return false;
    }
    return true;
  }

  // in_mask: vertices committed to the solution; cand_mask: committed plus
  // undecided. Branches on the undecided vertex tied to the worst degree
  // violation; every branch shrinks the undecided set, so the search
  // terminates and covers all k-dependent subsets of cand_mask.
  void recurse(std::uint64_t in_mask, std::uint64_t cand_mask) {
    ++nodes_;
    if (std::popcount(cand_mask) <= std::popcount(best_mask_)) return;

    int worst = -1, worst_deg = k_;
    for (std::uint64_t rest = cand_mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int d = std::popcount(adj_[v] & cand_mask);
      if (d > worst_deg) {
        worst_deg = d;
        worst = v;
      }
    }
    if (worst == -1) {
      best_mask_ = cand_mask;  // whole candidate is k-dependent
      return;
    }

    int branch_vertex = worst;
    if (in_mask & (1ULL << worst)) {
      // The violator is committed; decide one of its undecided neighbors.
      std::uint64_t undecided_nb = adj_[worst] & cand_mask & ~in_mask;
      branch_vertex = std::countr_zero(undecided_nb);
    }
    std::uint64_t bit = 1ULL << branch_vertex;
    recurse(in_mask, cand_mask & ~bit);
    if (feasible_after_add(in_mask, branch_vertex))
      recurse(in_mask | bit, cand_mask);
  }

  int k_;
  int n_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t best_mask_ = 0;
  long long nodes_ = 0;
};

}  // namespace detail

// Certified maximum k-dependent set. Exhaustive subset scan for n <= 16,
// branch-and-bound above that.
inline OracleResult exact_max_k_dependent(const GeneralGraph& g, int k,
                                          int limit_n = kDependentOracleLimit) {
  if (k < 0) throw InvalidKError("k must be >= 0");
  if (g.n > limit_n)
    throw TooLargeError("n=" + std::to_string(g.n) + " exceeds oracle limit " +
                        std::to_string(limit_n));
  auto adj = detail::adjacency_masks(g);
  if (g.n <= 16) return detail::exhaustive_max_k_dependent(g, k, adj);
  return detail::KDependentBranchAndBound(g, k).run();
}

inline OracleResult exact_max_k_dependent(const Graph& g, int k,
                                          int limit_n = kDependentOracleLimit) {
  return exact_max_k_dependent(GeneralGraph::from_graph(g), k, limit_n);
}

namespace detail {

// Subset DP for maximum matching: f(mask) considers the lowest vertex in
// mask either unmatched or matched to one of its neighbors in mask.
class MatchingDP {
 public:
  explicit MatchingDP(const GeneralGraph& g) : adj_(adjacency_masks(g)), n_(g.n) {
    if (n_ > 24) throw TooLargeError("matching oracle hard cap is 24 vertices");
    memo_.assign(std::size_t{1} << n_, -1);
  }

  int size(std::uint64_t mask) {
    if (mask == 0) return 0;
    auto& slot = memo_[mask];
    if (slot >= 0) return slot;
    int v = std::countr_zero(mask);
    std::uint64_t rest = mask & ~(1ULL << v);
    int best = size(rest);
    for (std::uint64_t nb = adj_[v] & rest; nb;) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      best = std::max(best, 1 + size(rest & ~(1ULL << u)));
    }
    slot = static_cast<std::int8_t>(best);
    return best;
  }

  EdgeList reconstruct() {
    EdgeList pairs;
    std::uint64_t mask = n_ == 0 ? 0 : (n_ == 64 ? ~0ULL : (1ULL << n_) - 1);
    while (mask) {
      int v = std::countr_zero(mask);
      std::uint64_t rest = mask & ~(1ULL << v);
      if (size(mask) == size(rest)) {
        mask = rest;  // v stays unmatched
        continue;
      }
      for (std::uint64_t nb = adj_[v] & rest; nb;) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (1 + size(rest & ~(1ULL << u)) == size(mask)) {
          pairs.push_back(make_edge(v, u));
          mask = rest & ~(1ULL << u);
          break;
        }
      }
    }
    return pairs;
  }

 private:
  std::vector<std::uint64_t> adj_;
  int n_;
  std::vector<std::int8_t> memo_;
};

}  // namespace detail

// Certified maximum matching on an arbitrary (not necessarily bipartite)
// graph via subset DP.
inline Matching exact_max_matching(const GeneralGraph& g,
                                   int limit_n = kMatchingOracleLimit) {
  if (g.n > limit_n)
    throw TooLargeError("n=" + std::to_string(g.n) + " exceeds matching oracle limit " +
                        std::to_string(limit_n));
  detail::MatchingDP dp(g);
  return Matching::from_pairs(g.n, dp.reconstruct());
}

inline Matching exact_max_matching(const Graph& g,
                                   int limit_n = kMatchingOracleLimit) {
  return exact_max_matching(GeneralGraph::from_graph(g), limit_n);
}

namespace detail {

class VertexCoverSearch {
 public:
  explicit VertexCoverSearch(const GeneralGraph& g) : g_(g) {}

  VertexSet run() {
    best_count_ = g_.n;
    best_mask_ = g_.n == 64 ? ~0ULL : (1ULL << g_.n) - 1;
    recurse(0, 0);
    return mask_to_set(best_mask_);
  }

 private:
  // Greedy matching on the still-uncovered edges; any matching size is a
  // lower bound on the cover vertices yet to be paid.
  int matching_lower_bound(std::uint64_t cover) const {
    std::uint64_t used = 0;
    int lb = 0;
    for (const Edge& e : g_.edges) {
      std::uint64_t bu = 1ULL << e.u, bv = 1ULL << e.v;
      if ((cover & (bu | bv)) || (used & (bu | bv))) continue;
      used |= bu | bv;
      ++lb;
    }
    return lb;
  }

  void recurse(std::uint64_t cover, int count) {
    if (count + matching_lower_bound(cover) >= best_count_) return;
    const Edge* open = nullptr;
    for (const Edge& e : g_.edges) {
      if (!(cover & (1ULL << e.u)) && !(cover & (1ULL << e.v))) {
        open = &e;
        break;
      }
    }
    if (!open) {
      best_count_ = count;
      best_mask_ = cover;
      return;
    }
    recurse(cover | (1ULL << open->u), count + 1);
    recurse(cover | (1ULL << open->v), count + 1);
  }

  const GeneralGraph& g_;
  int best_count_ = 0;
  std::uint64_t best_mask_ = 0;
};

}  // namespace detail

// Certified minimum vertex cover by branching on an uncovered edge, with
// a greedy-matching lower bound for pruning.
inline VertexSet exact_min_vertex_cover(const GeneralGraph& g,
                                        int limit_n = kMatchingOracleLimit) {
  if (g.n > limit_n)
    throw TooLargeError("n=" + std::to_string(g.n) + " exceeds cover oracle limit " +
                        std::to_string(limit_n));
  if (g.n > 63) throw TooLargeError("cover oracle hard cap is 63 vertices");
  return detail::VertexCoverSearch(g).run();
}

inline VertexSet exact_min_vertex_cover(const Graph& g,
                                        int limit_n = kMatchingOracleLimit) {
  return exact_min_vertex_cover(GeneralGraph::from_graph(g), limit_n);
}

// nu(g) == tau(g)? Bipartite graphs always qualify; some non-bipartite
// graphs do as well.
inline bool is_konig_egervary(const GeneralGraph& g,
                              int limit_n = kMatchingOracleLimit) {
  return exact_max_matching(g, limit_n).size() ==
         static_cast<int>(exact_min_vertex_cover(g, limit_n).size());
}

inline bool is_konig_egervary(const Graph& g, int limit_n = kMatchingOracleLimit) {
  return is_konig_egervary(GeneralGraph::from_graph(g), limit_n);
}

struct KEExperimentReport {
  int k = 0;
  int alg_size = 0;
  int opt_size = 0;
  bool ratio_ok = false;
  std::vector<int> matching_sizes;   // per round
  std::vector<bool> residual_ke;     // KE status after each removal
  VertexSet solution;
  VertexSet optimum;
};

// Runs the k-round removal on a KE graph with exact maximum matchings and
// a brute-force independent set at the end, then compares against the
// exact optimum. "Residual stopped being KE" is reported, never an error.
inline KEExperimentReport ke_experiment(const GeneralGraph& g, int k,
                                        int limit_n = kMatchingOracleLimit) {
  if (k < 1) throw InvalidKError("ke_experiment requires k >= 1");
  if (g.n > limit_n)
    throw TooLargeError("n=" + std::to_string(g.n) + " exceeds oracle limit " +
                        std::to_string(limit_n));
  if (!is_konig_egervary(g, limit_n))
    throw NotKEError("input graph is not Konig-Egervary");

  KEExperimentReport report;
  report.k = k;
  GeneralGraph residual = g;
  for (int i = 1; i <= k; ++i) {
    Matching m = exact_max_matching(residual, limit_n);
    report.matching_sizes.push_back(m.size());
    residual = residual.without_edges(m.pairs);
    report.residual_ke.push_back(is_konig_egervary(residual, limit_n));
  }
  // alpha = n - tau in every graph: complement a minimum vertex cover.
  VertexSet cover = exact_min_vertex_cover(residual, limit_n);
  std::vector<char> in_cover(g.n, 0);
  for (Vertex v : cover) in_cover[v] = 1;
  for (Vertex v = 0; v < g.n; ++v)
    if (!in_cover[v]) report.solution.push_back(v);
  report.alg_size = static_cast<int>(report.solution.size());

  OracleResult opt = exact_max_k_dependent(g, k, std::max(limit_n, g.n));
  report.optimum = opt.optimum;
  report.opt_size = opt.size;
  report.ratio_ok = check_ratio(report.alg_size, report.opt_size, k);
  return report;
}

inline KEExperimentReport ke_experiment(const Graph& g, int k,
                                        int limit_n = kMatchingOracleLimit) {
  return ke_experiment(GeneralGraph::from_graph(g), k, limit_n);
}

}  // namespace kdep
