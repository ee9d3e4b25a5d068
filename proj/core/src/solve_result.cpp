#include "arcfix/solve_result.hpp"

namespace arcfix {

Graph apply(const Graph& g, const Modification& m) {
  Graph h = g;
  for (const auto& e : m.deleted_edges) h.remove_edge(e.u, e.v);
  for (const auto& e : m.added_edges) h.add_edge(e.u, e.v);
  return remove_vertices(h, m.deleted_vertices).graph;
}

}  // namespace arcfix
