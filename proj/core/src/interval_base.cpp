#include "arcfix/interval_base.hpp"

#include <stdexcept>

#include "search_util.hpp"

namespace arcfix {

using detail::State;

VertexSet hole_cover(const Graph& g) {
  VertexSet out;
  for (const auto& comp : components(g)) {
    if (comp.size() < 4) continue;
    auto sub = induced(g, comp);
    if (is_chordal(sub.graph)) continue;
    auto r = recognize_phcag(sub.graph);
    if (!r.accepted) throw std::logic_error("hole_cover: component is not proper Helly circular-arc");
    for (auto v : min_point_load(*r.circle).second) out.push_back(sub.original[v]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int holed_components(const Graph& g) {
  int count = 0;
  for (const auto& comp : components(g))
    if (comp.size() >= 4 && !is_chordal(induced(g, comp).graph)) ++count;
  return count;
}

// Branches on the six small proper-interval obstructions, then on holes.
struct PiSearch {
  bool vertices = true;
  bool edges = false;
  SolveStats stats;
  Modification found;

  bool run(const State& s, int k1, int k2, int depth) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    std::vector<Vertex> target;
    EdgeSet target_edges;
    if (auto w = find_any(s.g, lists::pi_small())) {
      target = w->vertices;
      target_edges = detail::witness_edges(s.g, target);
    } else {
      if (vertices) {
        VertexSet cover = hole_cover(s.g);
        if (static_cast<int>(cover.size()) <= k1) {
          found = s.without(cover).mod;
          return true;
        }
        if (!edges) return false;
      }
      auto hole = find_hole(s.g);
      if (!hole) {
        found = s.mod;
        return true;
      }
      target = *hole;
      target_edges = detail::hole_edges(*hole);
    }
    const int usable = (vertices ? k1 : 0) + (edges ? k2 : 0);
    if (usable == 0) return false;

    VertexBits rest;
    int lb = detail::pack_disjoint(s.g, lists::pi_small(), usable, rest);
    if (lb > usable) return false;
    Graph residue = induced(s.g, rest).graph;
    lb += vertices && !edges ? static_cast<int>(hole_cover(residue).size()) : holed_components(residue);
    if (lb > usable) return false;

    if (vertices && k1 > 0)
      for (auto v : target)
        if (run(s.without(v), k1 - 1, k2, depth + 1)) return true;
    if (edges && k2 > 0)
      for (const auto& e : target_edges)
        if (run(s.minus_edge(e), k1, k2 - 1, depth + 1)) return true;
    return false;
  }
};

SolveResult finish(PiSearch& search, bool ok) {
  SolveResult r;
  r.answer = ok;
  r.stats = search.stats;
  if (ok) {
    r.solution = std::move(search.found);
    detail::normalize(r.solution);
  }
  return r;
}

}  // namespace

SolveResult pivd(const Graph& g, int k) {
  PiSearch search;
  bool ok = k >= 0 && search.run(State::from(g), k, 0, 0);
  return finish(search, ok);
}

SolveResult pied(const Graph& g, int k) {
  PiSearch search;
  search.vertices = false;
  search.edges = true;
  bool ok = k >= 0 && search.run(State::from(g), 0, k, 0);
  return finish(search, ok);
}

SolveResult pi_mixed(const Graph& g, Budget b) {
  PiSearch search;
  search.edges = true;
  bool ok = b.k1 >= 0 && b.k2 >= 0 && search.run(State::from(g), b.k1, b.k2, 0);
  return finish(search, ok);
}

VertexSet pi_approx6(const Graph& g) {
  VertexBits rest;
  detail::pack_disjoint(g, lists::pi_small(), g.order(), rest);
  VertexSet out = rest.flipped().to_vector();
  auto sub = induced(g, rest);
  for (auto v : hole_cover(sub.graph)) out.push_back(sub.original[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arcfix
