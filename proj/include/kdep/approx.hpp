#pragma once

#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "kdep/graph.hpp"
#include "kdep/matching.hpp"

namespace kdep {

// Exact rational, normalized to lowest terms with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long n, long long d) {
    if (d == 0) throw Error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Rational{n, d};
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

// The approximation guarantee 1 + k/(k+2) = 2(k+1)/(k+2), in lowest terms.
inline Rational ratio_bound(int k) {
  if (k < 1) throw InvalidKError("ratio_bound requires k >= 1");
  return Rational::of(2LL * (k + 1), k + 2);
}

// OPT/ALG <= 2(k+1)/(k+2), cross-multiplied so there is no rounding.
inline bool check_ratio(long long solution_size, long long optimal_size, int k) {
  return (k + 2) * optimal_size <= 2LL * (k + 1) * solution_size;
}

struct IterationRecord {
  Matching matching;               // the matching removed at this iteration
  long long residual_edges_after;  // |E(G_i)|
};

// Full record of one run of the k-round matching-removal algorithm.
struct RunTrace {
  int n = 0;
  long long m = 0;
  int k = 0;
  std::vector<IterationRecord> iterations;
  EdgeList removed_edges;          // accumulated removals after round k
  VertexSet final_cover;           // Konig cover of the final residual
  VertexSet solution;              // complement of final_cover
  std::vector<Graph> residuals;    // G_1..G_k, kept only in verbose runs

  long long removed_count() const {
    return static_cast<long long>(removed_edges.size());
  }
};

// Strategy yielding a maximum matching of each residual graph. Untrusted
// providers are re-validated by solve against the actual residual.
struct MatchingProvider {
  std::function<Matching(const Graph& residual, int iteration)> next;
  bool trusted = false;
  std::string name;
};

inline MatchingProvider default_provider() {
  MatchingProvider p;
  p.next = [](const Graph& residual, int) { return max_matching(residual); };
  p.trusted = true;
  p.name = "hopcroft-karp";
  return p;
}

// Plays back a fixed list of matchings, one per iteration. Intended for a
// single solve; iteration i consumes the i-th entry.
inline MatchingProvider scripted_provider(std::vector<Matching> matchings) {
  auto store = std::make_shared<std::vector<Matching>>(std::move(matchings));
  MatchingProvider p;
  p.next = [store](const Graph&, int iteration) {
    if (iteration < 1 || iteration > static_cast<int>(store->size()))
      throw InvalidProviderError("scripted provider has no matching for iteration " +
                                 std::to_string(iteration));
    return (*store)[iteration - 1];
  };
  p.trusted = false;
  p.name = "scripted";
  return p;
}

inline MatchingProvider scripted_provider(int n, const std::vector<EdgeList>& blocks) {
  std::vector<Matching> ms;
  ms.reserve(blocks.size());
  for (const EdgeList& pairs : blocks) {
    try {
      ms.push_back(Matching::from_pairs(n, pairs));
    } catch (const Error& e) {
      throw InvalidProviderError(std::string("scripted matching invalid: ") + e.what());
    }
  }
  return scripted_provider(std::move(ms));
}

struct SolveOptions {
  bool keep_residuals = false;  // retain G_1..G_k for deep checks
};

// k rounds of maximum-matching removal, then a maximum independent set of
// the residual via the Konig construction. Returns the solution and the
// full trace. The output is k-dependent in the original graph: a solution
// vertex can be incident to at most one removed edge per round inside the
// induced subgraph.
inline std::pair<VertexSet, RunTrace> solve(const Graph& g, int k,
                                            const MatchingProvider& provider = default_provider(),
                                            const SolveOptions& options = {}) {
  if (k < 1) throw InvalidKError("solve requires k >= 1");
  RunTrace trace;
  trace.n = g.vertex_count();
  trace.m = g.edge_count();
  trace.k = k;

  Graph residual = g;
  EdgeList removed;
  for (int i = 1; i <= k; ++i) {
    Matching m = provider.next(residual, i);
    if (!provider.trusted) {
      if (!verify_matching(residual, m.pairs))
        throw InvalidProviderError("iteration " + std::to_string(i) +
                                   ": not a matching of the residual graph");
      int max_size = max_matching(residual).size();
      if (m.size() != max_size)
        throw InvalidProviderError("iteration " + std::to_string(i) + ": matching size " +
                                   std::to_string(m.size()) + " < maximum " +
                                   std::to_string(max_size));
    }
    residual = remove_edges(residual, m.pairs);
    removed.insert(removed.end(), m.pairs.begin(), m.pairs.end());
    trace.iterations.push_back({std::move(m), residual.edge_count()});
    if (options.keep_residuals) trace.residuals.push_back(residual);
  }

  Matching final_matching = max_matching(residual);
  trace.final_cover = konig_cover(residual, final_matching);
  trace.solution = complement(residual, trace.final_cover);
  std::sort(removed.begin(), removed.end());
  trace.removed_edges = std::move(removed);
  return {trace.solution, trace};
}

// Solution-size floor from the removed matchings:
// |S| >= n - removed/k, compared as k|S| >= kn - removed.
inline bool check_removal_bound(const RunTrace& trace) {
  long long k = trace.k;
  long long sol = static_cast<long long>(trace.solution.size());
  return k * sol >= k * trace.n - trace.removed_count();
}

struct MissedEdgesReport {
  long long induced_opt_edges = 0;   // edges with both endpoints in the optimum
  long long missed_opt_edges = 0;    // of those, never removed by any round
  long long removed_opt_edges = 0;   // of those, removed by some round
  long long non_opt_vertices = 0;    // n - |optimum|
  bool holds = false;
};

// Bound tying the output to the optimum through the induced optimum edges
// the rounds failed to remove: |S| >= |OPT|/2 + missed/k, compared as
// 2k|S| >= k|OPT| + 2*missed. `optimal` must be a maximum k-dependent set
// (from the oracle); only its feasibility can be checked here.
inline std::pair<bool, MissedEdgesReport> check_missed_edges_bound(const Graph& g, int k,
                                                  const RunTrace& trace,
                                                  const VertexSet& optimal) {
  if (k < 1) throw InvalidKError("check_missed_edges_bound requires k >= 1");
  if (!is_k_dependent(g, optimal, k))
    throw NotOptimalError("claimed optimum is not even k-dependent");

  std::vector<char> in = detail::membership(g, optimal);
  EdgeKeySet removed = make_edge_key_set(trace.removed_edges);
  MissedEdgesReport report;
  for (const Edge& e : g.edges()) {
    if (!in[e.u] || !in[e.v]) continue;
    ++report.induced_opt_edges;
    if (removed.count(edge_key(e)))
      ++report.removed_opt_edges;
    else
      ++report.missed_opt_edges;
  }
  report.non_opt_vertices = g.vertex_count() - static_cast<long long>(optimal.size());
  long long sol = static_cast<long long>(trace.solution.size());
  long long opt = static_cast<long long>(optimal.size());
  report.holds = 2LL * k * sol >= k * opt + 2LL * report.missed_opt_edges;
  return {report.holds, report};
}

}  // namespace kdep
