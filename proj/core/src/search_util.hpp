#pragma once

// Shared plumbing for the branching solvers.

#include <algorithm>
#include <span>

#include "arcfix/patterns.hpp"
#include "arcfix/representation.hpp"
#include "arcfix/solve_result.hpp"

namespace arcfix::detail {

/// Current graph of a search node plus the edits that produced it, in input ids.
struct State {
  Graph g;
  std::vector<Vertex> orig;
  Modification mod;

  static State from(const Graph& g) {
    State s{g, std::vector<Vertex>(g.order()), {}};
    for (int v = 0; v < g.order(); ++v) s.orig[v] = v;
    return s;
  }

  State without(std::span<const Vertex> drop) const {
    State s;
    auto sub = remove_vertices(g, drop);
    s.g = std::move(sub.graph);
    for (auto v : sub.original) s.orig.push_back(orig[v]);
    s.mod = mod;
    for (auto v : drop) s.mod.deleted_vertices.push_back(orig[v]);
    return s;
  }
  State without(Vertex v) const { return without(std::span<const Vertex>(&v, 1)); }

  State minus_edges(std::span<const Edge> edges) const {
    State s = *this;
    for (const auto& e : edges) {
      s.g.remove_edge(e.u, e.v);
      s.mod.deleted_edges.emplace_back(orig[e.u], orig[e.v]);
    }
    return s;
  }
  State minus_edge(Edge e) const { return minus_edges(std::span<const Edge>(&e, 1)); }

  State plus_edge(Edge e) const {
    State s = *this;
    s.g.add_edge(e.u, e.v);
    s.mod.added_edges.emplace_back(orig[e.u], orig[e.v]);
    return s;
  }
};

inline void normalize(Modification& m) {
  std::sort(m.deleted_vertices.begin(), m.deleted_vertices.end());
  std::sort(m.deleted_edges.begin(), m.deleted_edges.end());
  std::sort(m.added_edges.begin(), m.added_edges.end());
}

/// Edges of g among the witness vertices.
inline EdgeSet witness_edges(const Graph& g, std::span<const Vertex> vs) {
  EdgeSet out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) out.emplace_back(vs[i], vs[j]);
  return out;
}

/// Missing pairs among the witness vertices.
inline EdgeSet witness_non_edges(const Graph& g, std::span<const Vertex> vs) {
  EdgeSet out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) out.emplace_back(vs[i], vs[j]);
  return out;
}

inline EdgeSet hole_edges(std::span<const Vertex> hole) {
  EdgeSet out;
  for (std::size_t i = 0; i < hole.size(); ++i) out.emplace_back(hole[i], hole[(i + 1) % hole.size()]);
  return out;
}

/// Greedily packs vertex-disjoint witnesses from kinds; stops past limit.
/// Returns the count and leaves the untouched vertices in rest.
inline int pack_disjoint(const Graph& g, std::span<const PatternKind> kinds, int limit, VertexBits& rest) {
  rest = g.all();
  int count = 0;
  while (count <= limit) {
    auto sub = induced(g, rest);
    auto w = find_any(sub.graph, kinds);
    if (!w) break;
    for (auto v : w->vertices) rest.reset(sub.original[v]);
    ++count;
  }
  return count;
}

}  // namespace arcfix::detail
