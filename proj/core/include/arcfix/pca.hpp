#pragma once

#include "arcfix/graph.hpp"
#include "arcfix/representation.hpp"
#include "arcfix/solve_result.hpp"

namespace arcfix {

/// Bipartite, no F1/F2/F3 and no hole of length six or more. The witness is
/// F1, F2, F3 or a Cycle (odd cycle, or even hole).
Recognition is_bipartite_permutation(const Graph& g);

/// At most k vertex deletions to a bipartite permutation graph.
SolveResult bpvd(const Graph& g, int k);

/// Proper circular-arc membership with a forbidden-subgraph witness on rejection.
Recognition recognize_pca(const Graph& g);

/// At most k vertex deletions to a proper circular-arc graph.
SolveResult pca_vd(const Graph& g, int k);

/// Vertex set whose removal leaves a proper circular-arc graph.
VertexSet pca_approx9(const Graph& g);

/// Deletion set leaving a bipartite permutation graph; greedy, no ratio promised.
VertexSet bp_greedy(const Graph& g);

}  // namespace arcfix
