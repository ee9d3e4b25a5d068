#pragma once

#include "arcfix/graph.hpp"

namespace arcfix {

/// Vertex deletions, edge deletions and edge additions, in input ids.
struct Modification {
  VertexSet deleted_vertices;
  EdgeSet deleted_edges;
  EdgeSet added_edges;

  int cost() const {
    return static_cast<int>(deleted_vertices.size() + deleted_edges.size() + added_edges.size());
  }
};

/// Applies m; deleted vertices are dropped and the rest renumbered in order.
Graph apply(const Graph& g, const Modification& m);

struct SolveStats {
  long long nodes = 0;
  int max_depth = 0;
};

struct SolveResult {
  bool answer = false;
  Modification solution;
  SolveStats stats;
};

}  // namespace arcfix
