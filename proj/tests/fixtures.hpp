#pragma once

#include <string>

#include "kdep/graph.hpp"
#include "kdep/matching.hpp"

namespace fixtures {

// Hand-verified 12-vertex bipartite instance used throughout the tests.
// Its maximum 1-dependent set has 9 vertices; removing the perfect
// matching below leaves a residual whose maximum independent set has 8.
inline kdep::Graph demo12_graph() {
  kdep::EdgeList edges = {
      {0, 1}, {0, 11}, {1, 4}, {1, 10}, {2, 3},  {2, 11},
      {4, 5}, {5, 10}, {6, 7}, {6, 11}, {8, 9},  {9, 10},
  };
  return kdep::Graph::from_edges(12, std::move(edges));
}

// A perfect matching of the demo instance.
inline kdep::EdgeList demo12_matching() {
  return {{0, 11}, {1, 4}, {2, 3}, {5, 10}, {6, 7}, {8, 9}};
}

// One maximum 1-dependent set of the demo instance.
inline kdep::VertexSet demo12_max_1_dependent() {
  return {0, 1, 2, 3, 5, 6, 7, 8, 9};
}

// A minimum vertex cover of the residual left by demo12_matching().
inline kdep::VertexSet demo12_cover() {
  return {1, 4, 10, 11};
}

inline std::string demo12_edge_list_text() {
  return kdep::serialize_edge_list(demo12_graph());
}

}  // namespace fixtures
