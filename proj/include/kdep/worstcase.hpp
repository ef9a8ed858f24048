#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "kdep/approx.hpp"
#include "kdep/graph.hpp"
#include "kdep/matching.hpp"
#include "kdep/oracle.hpp"

namespace kdep {

// The tight family: parts A u {u} and B u {w} with |A| = |B| = k+1.
// A u B is the unique optimum (size 2(k+1)); the scripted matchings steer
// the algorithm to an output of exactly k+2 vertices.
//
// Vertex ids: a_i -> i-1, b_i -> k+i (indices 1..k+1), u -> 2k+2,
// w -> 2k+3. The 1-based construction indices stay out of the emitted ids.
struct WorstCaseInstance {
  int k = 0;
  Graph graph;
  std::vector<Vertex> a_ids;            // a_ids[i-1] is a_i
  std::vector<Vertex> b_ids;            // b_ids[i-1] is b_i
  Vertex u_id = -1;
  Vertex w_id = -1;
  std::vector<Matching> scripted;       // one matching per round, in order
  int expected_opt = 0;                 // 2(k+1)
  int expected_alg = 0;                 // k+2
  EdgeList expected_residual_ab;        // the k surviving A-B edges
  std::array<Vertex, 4> expected_path;  // the isolated 4-vertex residual path

  VertexSet optimal_set() const {
    VertexSet s(a_ids.begin(), a_ids.end());
    s.insert(s.end(), b_ids.begin(), b_ids.end());
    normalize_vertex_set(s);
    return s;
  }
};

namespace detail {

struct WorstCaseIds {
  int k;
  Vertex a(int i) const { return i - 1; }                    // i in 1..k+1
  Vertex b(int i) const {                                    // wraps mod k+1
    int idx = (i - 1) % (k + 1) + 1;
    return k + idx;
  }
  Vertex u() const { return 2 * k + 2; }
  Vertex w() const { return 2 * k + 3; }
};

// Matching removed at iteration j. For even k every iteration uses the
// shifted pairing {a_i, b_(i+j)} minus its i=j term, patched with
// {a_j, w} and {b_(2j), u}. For odd k the second half of the iterations
// shifts the patch by one (exclude i=j+1, use {a_(j+1), w}, {b_(2j+1), u})
// so that the surviving A-B edges stay pairwise disjoint.
inline EdgeList scripted_matching_pairs(const WorstCaseIds& ids, int j) {
  const int k = ids.k;
  const bool shifted = (k % 2 == 1) && j >= (k + 3) / 2;
  const int excluded_i = shifted ? j + 1 : j;
  EdgeList pairs;
  pairs.reserve(k + 2);
  for (int i = 1; i <= k + 1; ++i) {
    if (i == excluded_i) continue;
    pairs.push_back(make_edge(ids.a(i), ids.b(i + j)));
  }
  pairs.push_back(make_edge(ids.a(excluded_i), ids.w()));
  pairs.push_back(make_edge(ids.b(shifted ? 2 * j + 1 : 2 * j), ids.u()));
  return pairs;
}

inline EdgeList expected_residual_ab_edges(const WorstCaseIds& ids) {
  const int k = ids.k;
  EdgeList out;
  for (int j = 1; j <= k; ++j) {
    const bool shifted = (k % 2 == 1) && j >= (k + 3) / 2;
    if (shifted)
      out.push_back(make_edge(ids.a(j + 1), ids.b(2 * j + 1)));
    else
      out.push_back(make_edge(ids.a(j), ids.b(2 * j)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Builds the instance together with its scripted matchings. The scripted
// matchings are validated to be perfect and pairwise edge-disjoint;
// failure indicates a transcription bug and raises ConstructionFailure.
inline WorstCaseInstance generate_worst_case(int k) {
  if (k < 1) throw InvalidKError("worst-case family requires k >= 1");
  detail::WorstCaseIds ids{k};
  const int n = 2 * (k + 2);

  EdgeList edges;
  edges.push_back(make_edge(ids.u(), ids.w()));
  for (int i = 1; i <= k + 1; ++i)
    for (int j = 1; j <= k + 1; ++j)
      if (i != j) edges.push_back(make_edge(ids.a(i), ids.b(j)));
  for (int i = 1; i <= k + 1; ++i) {
    edges.push_back(make_edge(ids.a(i), ids.w()));
    edges.push_back(make_edge(ids.b(i), ids.u()));
  }

  WorstCaseInstance inst;
  inst.k = k;
  inst.graph = Graph::from_edges(n, std::move(edges));
  for (int i = 1; i <= k + 1; ++i) {
    inst.a_ids.push_back(ids.a(i));
    inst.b_ids.push_back(ids.b(i));
  }
  inst.u_id = ids.u();
  inst.w_id = ids.w();
  inst.expected_opt = 2 * (k + 1);
  inst.expected_alg = k + 2;
  inst.expected_residual_ab = detail::expected_residual_ab_edges(ids);
  if (k % 2 == 0)
    inst.expected_path = {ids.a(k + 1), ids.w(), ids.u(), ids.b(k + 1)};
  else
    inst.expected_path = {ids.a((k + 3) / 2), ids.w(), ids.u(), ids.b(1)};

  EdgeKeySet seen;
  for (int j = 1; j <= k; ++j) {
    EdgeList pairs = detail::scripted_matching_pairs(ids, j);
    if (static_cast<int>(pairs.size()) != k + 2 ||
        !verify_matching(inst.graph, pairs))
      throw ConstructionFailureError("round-" + std::to_string(j) + " matching" +
                                     " is not a perfect matching of the instance");
    for (const Edge& e : pairs)
      if (!seen.insert(edge_key(e)).second)
        throw ConstructionFailureError("round-" + std::to_string(j) + " matching" +
                                       " reuses an edge of an earlier matching");
    inst.scripted.push_back(Matching::from_pairs(n, std::move(pairs)));
  }
  return inst;
}

// Validated scripted matchings of the instance, first round first.
inline const std::vector<Matching>& scripted_matchings(const WorstCaseInstance& inst) {
  if (static_cast<int>(inst.scripted.size()) != inst.k)
    throw ConstructionFailureError("instance carries wrong number of matchings");
  return inst.scripted;
}

struct TightnessReport {
  int k = 0;
  int n = 0;
  long long m = 0;
  int alg_size = 0;
  int opt_size = 0;
  bool opt_certified = false;  // oracle-confirmed vs feasibility-checked
  Rational achieved;           // opt/alg as an exact rational
  Rational bound;              // 2(k+1)/(k+2)
  bool equals_bound = false;
  std::vector<int> matching_sizes;
  VertexSet solution;
};

// Runs the scripted adversarial matchings on the generated instance and
// checks that the output has exactly k+2 vertices against an optimum of
// 2(k+1), i.e. the ratio bound is met with equality. The optimum is
// oracle-certified up to oracle_max_k; beyond that A u B is checked for
// feasibility and its optimality is taken from the family's construction.
inline TightnessReport demonstrate_tightness(int k, int oracle_max_k = 8,
                                             int oracle_limit = kDependentOracleLimit) {
  WorstCaseInstance inst = generate_worst_case(k);
  auto [solution, trace] = solve(inst.graph, k, scripted_provider(inst.scripted));

  TightnessReport report;
  report.k = k;
  report.n = inst.graph.vertex_count();
  report.m = inst.graph.edge_count();
  report.alg_size = static_cast<int>(solution.size());
  report.solution = solution;
  for (const auto& it : trace.iterations)
    report.matching_sizes.push_back(it.matching.size());

  auto fail = [&](const std::string& what) {
    std::string msg = "k=" + std::to_string(k) + ": " + what + " (alg=" +
                      std::to_string(report.alg_size) + ", matchings=";
    for (std::size_t i = 0; i < report.matching_sizes.size(); ++i)
      msg += (i ? "," : "") + std::to_string(report.matching_sizes[i]);
    msg += ")";
    throw TightnessViolationError(msg);
  };

  if (report.alg_size != inst.expected_alg)
    fail("output size != k+2 = " + std::to_string(inst.expected_alg));
  if (!is_k_dependent(inst.graph, solution, k)) fail("output is not k-dependent");

  // The residual must be exactly the k surviving A-B edges plus the
  // isolated 4-vertex path through w and u.
  Graph final_residual = remove_edges(inst.graph, trace.removed_edges);
  EdgeList expected = inst.expected_residual_ab;
  expected.push_back(make_edge(inst.expected_path[0], inst.expected_path[1]));
  expected.push_back(make_edge(inst.expected_path[1], inst.expected_path[2]));
  expected.push_back(make_edge(inst.expected_path[2], inst.expected_path[3]));
  std::sort(expected.begin(), expected.end());
  if (final_residual.edges() != expected) fail("residual structure mismatch");

  VertexSet opt_set = inst.optimal_set();
  if (!is_k_dependent(inst.graph, opt_set, k)) fail("A u B is not k-dependent");
  if (k <= oracle_max_k) {
    OracleResult oracle = exact_max_k_dependent(inst.graph, k, oracle_limit);
    report.opt_size = oracle.size;
    report.opt_certified = true;
  } else {
    report.opt_size = inst.expected_opt;
    report.opt_certified = false;
  }
  if (report.opt_size != inst.expected_opt)
    fail("optimum " + std::to_string(report.opt_size) + " != 2(k+1) = " +
         std::to_string(inst.expected_opt));

  report.achieved = Rational::of(report.opt_size, report.alg_size);
  report.bound = ratio_bound(k);
  report.equals_bound = report.achieved == report.bound;
  if (!report.equals_bound)
    fail("achieved ratio " + report.achieved.str() + " != bound " + report.bound.str());
  return report;
}

}  // namespace kdep
