#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "kdep/gen.hpp"
#include "kdep/oracle.hpp"
#include "kdep/worstcase.hpp"

using namespace kdep;

namespace {

GeneralGraph triangle() {
  return GeneralGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
}

GeneralGraph triangle_with_pendant() {
  return GeneralGraph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
}

bool k_dependent_in(const GeneralGraph& g, const VertexSet& s, int k) {
  std::vector<char> in(g.n, 0);
  for (Vertex v : s) in[v] = 1;
  for (Vertex v : s) {
    int d = 0;
    for (Vertex w : g.adj[v]) d += in[w];
    if (d > k) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("exact_max_k_dependent basics") {
  Graph empty = parse_edge_list("6 0\n");
  OracleResult r = exact_max_k_dependent(empty, 0);
  CHECK(r.size == 6);
  CHECK(r.certified);

  Graph single = parse_edge_list("2 1\n0 1\n");
  CHECK(exact_max_k_dependent(single, 0).size == 1);
  CHECK(exact_max_k_dependent(single, 1).size == 2);

  Graph demo12 = fixtures::demo12_graph();
  OracleResult opt = exact_max_k_dependent(demo12, 1);
  CHECK(opt.size == 9);
  CHECK(is_k_dependent(demo12, opt.optimum, 1));

  CHECK_THROWS_AS(exact_max_k_dependent(demo12, -1), InvalidKError);
  CHECK_THROWS_AS(exact_max_k_dependent(demo12, 1, 10), TooLargeError);
}

TEST_CASE("exact_max_k_dependent certifies the worst-case optima") {
  for (int k : {1, 2, 3}) {
    WorstCaseInstance inst = generate_worst_case(k);
    OracleResult r = exact_max_k_dependent(inst.graph, k);
    CHECK(r.size == 2 * (k + 1));
    CHECK(is_k_dependent(inst.graph, r.optimum, k));
  }
}

TEST_CASE("branch-and-bound agrees with the exhaustive scan") {
  // Same graph, both routes.
  std::mt19937_64 seeds(777);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 8 + static_cast<int>(seeds() % 7);  // 8..14
    double p = 0.2 + (seeds() % 4) * 0.1;
    std::uint64_t seed = seeds();
    int k = static_cast<int>(seeds() % 3);
    GeneralGraph g = random_general(n, p, seed);

    auto adj = detail::adjacency_masks(g);
    OracleResult via_scan = detail::exhaustive_max_k_dependent(g, k, adj);
    OracleResult via_bnb = detail::KDependentBranchAndBound(g, k).run();
    CHECK(via_bnb.size == via_scan.size);
    CHECK(k_dependent_in(g, via_bnb.optimum, k));
  }

  // n > 16 routes through branch-and-bound in the public entry point;
  // isolated padding shifts the optimum by exactly the pad size.
  for (int trial = 0; trial < 10; ++trial) {
    int n = 10 + static_cast<int>(seeds() % 5);
    GeneralGraph small = random_general(n, 0.3, seeds());
    int k = static_cast<int>(seeds() % 3);
    OracleResult via_scan = exact_max_k_dependent(small, k);
    GeneralGraph padded = GeneralGraph::from_edges(n + 7, small.edges);
    OracleResult via_bnb = exact_max_k_dependent(padded, k);
    CHECK(via_bnb.size == via_scan.size + 7);
    CHECK(via_bnb.certified);
  }
}

TEST_CASE("exact_max_k_dependent size is monotone in k") {
  std::mt19937_64 seeds(31);
  for (int trial = 0; trial < 10; ++trial) {
    GeneralGraph g = random_general(9, 0.4, seeds());
    int prev = 0;
    for (int k = 0; k <= 3; ++k) {
      int size = exact_max_k_dependent(g, k).size;
      CHECK(size >= prev);
      prev = size;
    }
  }
}

TEST_CASE("exact_max_matching") {
  CHECK(exact_max_matching(GeneralGraph::from_edges(0, {})).size() == 0);
  CHECK(exact_max_matching(triangle()).size() == 1);
  CHECK(exact_max_matching(fixtures::demo12_graph()).size() == 6);
  CHECK_THROWS_AS(exact_max_matching(fixtures::demo12_graph(), 10), TooLargeError);
}

TEST_CASE("exact_min_vertex_cover") {
  CHECK(exact_min_vertex_cover(GeneralGraph::from_edges(3, {})).empty());
  CHECK(exact_min_vertex_cover(triangle()).size() == 2);

  Graph residual =
      remove_edges(fixtures::demo12_graph(), fixtures::demo12_matching());
  VertexSet cover = exact_min_vertex_cover(residual);
  CHECK(cover.size() == 4);
  CHECK(verify_cover(residual, cover));
}

TEST_CASE("is_konig_egervary") {
  CHECK(is_konig_egervary(fixtures::demo12_graph()));  // bipartite
  CHECK_FALSE(is_konig_egervary(triangle()));        // nu=1, tau=2

  // Triangle plus pendant edge: both invariants computed by the oracle
  // itself; nu = tau = 2 ({1-2, 0-3} matches, {0,1} covers), so KE.
  GeneralGraph g = triangle_with_pendant();
  int nu = exact_max_matching(g).size();
  int tau = static_cast<int>(exact_min_vertex_cover(g).size());
  CHECK(nu == 2);
  CHECK(tau == 2);
  CHECK(is_konig_egervary(g) == (nu == tau));
}

TEST_CASE("oracle self-consistency on bipartite graphs") {
  std::mt19937_64 seeds(404);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(seeds() % 11);
    Graph g = random_bipartite(n, 0.35, seeds());
    int nu = exact_max_matching(g).size();
    int tau = static_cast<int>(exact_min_vertex_cover(g).size());
    CHECK(nu == tau);  // Konig equality, brute-force both sides
    CHECK(exact_max_k_dependent(g, 0).size == n - nu);  // alpha = n - nu
  }
}

TEST_CASE("ke_experiment") {
  SECTION("requires a KE graph") {
    CHECK_THROWS_AS(ke_experiment(triangle(), 1), NotKEError);
  }

  SECTION("bipartite instances satisfy the bound") {
    std::mt19937_64 seeds(2024);
    for (int trial = 0; trial < 10; ++trial) {
      Graph g = random_bipartite(8, 0.4, seeds());
      for (int k : {1, 2}) {
        KEExperimentReport r = ke_experiment(g, k);
        CHECK(r.ratio_ok);
        CHECK(r.alg_size <= r.opt_size);
        CHECK(static_cast<int>(r.matching_sizes.size()) == k);
      }
    }
  }

  SECTION("edgeless graph: ALG == OPT == n") {
    Graph g = parse_edge_list("5 0\n");
    KEExperimentReport r = ke_experiment(g, 2);
    CHECK(r.alg_size == 5);
    CHECK(r.opt_size == 5);
    CHECK(r.ratio_ok);
  }

  SECTION("non-bipartite KE graphs found by search satisfy the bound") {
    std::mt19937_64 seeds(606);
    int found = 0;
    for (int trial = 0; trial < 120 && found < 8; ++trial) {
      GeneralGraph g = random_general(3 + static_cast<int>(seeds() % 7), 0.4, seeds());
      bool bip = true;
      try {
        Graph::from_edges(g.n, g.edges);
      } catch (const NotBipartiteError&) {
        bip = false;
      }
      if (bip || !is_konig_egervary(g)) continue;
      ++found;
      for (int k : {1, 2}) CHECK(ke_experiment(g, k).ratio_ok);
    }
    INFO("non-bipartite KE instances exercised: " << found);
    CHECK(found > 0);
  }
}

TEST_CASE("oracle determinism") {
  GeneralGraph g = random_general(12, 0.3, 99);
  OracleResult a = exact_max_k_dependent(g, 1);
  OracleResult b = exact_max_k_dependent(g, 1);
  CHECK(a.optimum == b.optimum);
  CHECK(a.nodes_explored == b.nodes_explored);
}
