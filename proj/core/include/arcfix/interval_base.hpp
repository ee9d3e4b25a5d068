#pragma once

#include "arcfix/graph.hpp"
#include "arcfix/solve_result.hpp"

namespace arcfix {

/// Vertex deletion budget k1 and edge deletion budget k2.
struct Budget {
  int k1 = 0;
  int k2 = 0;
};

/// At most k vertex deletions to a proper interval graph.
SolveResult pivd(const Graph& g, int k);
/// At most k edge deletions to a proper interval graph.
SolveResult pied(const Graph& g, int k);
/// At most b.k1 vertex and b.k2 edge deletions to a proper interval graph.
SolveResult pi_mixed(const Graph& g, Budget b);
/// Vertex set whose removal leaves a proper interval graph, within 6 * opt.
VertexSet pi_approx6(const Graph& g);

/// Minimum vertex set killing every hole of a graph whose components are all
/// proper Helly circular-arc (one clique intersection per holed component).
VertexSet hole_cover(const Graph& g);

}  // namespace arcfix
