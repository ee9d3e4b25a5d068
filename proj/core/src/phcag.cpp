#include "arcfix/phcag.hpp"

#include "search_util.hpp"

namespace arcfix {

using detail::State;
using Tag = PatternKind::Tag;

std::vector<EdgeSet> edge_deletion_branches(const Graph& g, const Witness& w) {
  const auto& x = w.vertices;
  auto e = [&](int a, int b) { return Edge(x[a], x[b]); };
  std::vector<EdgeSet> out;
  switch (w.kind.tag) {
    case Tag::Tent:
      out = {{e(0, 1)}, {e(1, 2)}, {e(0, 2)}, {e(3, 0), e(3, 1)}, {e(4, 1), e(4, 2)}, {e(5, 2), e(5, 0)}};
      return out;
    case Tag::Wheel:
      if (w.kind.param == 5) {
        for (int i = 0; i < 5; ++i) out.push_back({e(i, 5)});
        return out;
      }
      break;
    case Tag::Prism: {
      for (int i = 0; i < 3; ++i) out.push_back({e(i, i + 3)});
      EdgeSet tri = {e(0, 1), e(1, 2), e(0, 2), e(3, 4), e(4, 5), e(3, 5)};
      for (int skip1 = 0; skip1 < 6; ++skip1)
        for (int skip2 = skip1 + 1; skip2 < 6; ++skip2) {
          EdgeSet four;
          for (int i = 0; i < 6; ++i)
            if (i != skip1 && i != skip2) four.push_back(tri[i]);
          out.push_back(four);
        }
      return out;
    }
    default:
      break;
  }
  for (const auto& edge : detail::witness_edges(g, x)) out.push_back({edge});
  return out;
}

namespace {

int largest_component(const Graph& g) {
  std::size_t best = 0;
  for (const auto& c : components(g)) best = std::max(best, c.size());
  return static_cast<int>(best);
}

State keep_largest(const State& s) {
  auto comps = components(s.g);
  std::size_t keep = 0;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() > comps[keep].size()) keep = i;
  VertexSet drop;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (i != keep) drop.insert(drop.end(), comps[i].begin(), comps[i].end());
  return s.without(drop);
}

// Branching toward a connected graph free of the seven PHCAG obstructions.
struct PhcagSearch {
  bool vertices = true;
  bool edges = false;
  SolveStats stats;
  Modification found;

  bool run(const State& s, int k1, int k2, int depth) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    if (k1 < 0 || k2 < 0) return false;
    auto w = find_any(s.g, lists::phcag7());
    if (!w) {
      if (is_connected(s.g)) {
        found = s.mod;
        return true;
      }
      // Deletions cannot reconnect, so keep one component whole.
      if (!vertices || s.g.order() - largest_component(s.g) > k1) return false;
      found = keep_largest(s).mod;
      return true;
    }
    if (edges && !vertices && !is_connected(s.g)) return false;
    const int usable = (vertices ? k1 : 0) + (edges ? k2 : 0);
    if (usable == 0) return false;
    VertexBits rest;
    if (detail::pack_disjoint(s.g, lists::phcag7(), usable, rest) > usable) return false;

    if (vertices && k1 > 0)
      for (auto v : w->vertices)
        if (run(s.without(v), k1 - 1, k2, depth + 1)) return true;
    if (edges)
      for (const auto& set : edge_deletion_branches(s.g, *w)) {
        const int cost = static_cast<int>(set.size());
        if (cost <= k2 && run(s.minus_edges(set), k1, k2 - cost, depth + 1)) return true;
      }
    return false;
  }
};

SolveResult finish(PhcagSearch& search, bool ok) {
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

SolveResult phcag_vd(const Graph& g, int k) {
  if (k < 0) return {};
  if (auto pi = pivd(g, k); pi.answer) return pi;
  PhcagSearch search;
  return finish(search, search.run(State::from(g), k, 0, 0));
}

SolveResult phcag_ed(const Graph& g, int k) {
  if (k < 0) return {};
  if (auto pi = pied(g, k); pi.answer) return pi;
  if (!is_connected(g)) return {};
  PhcagSearch search;
  search.vertices = false;
  search.edges = true;
  return finish(search, search.run(State::from(g), 0, k, 0));
}

SolveResult phcag_mixed(const Graph& g, Budget b) {
  if (b.k1 < 0 || b.k2 < 0) return {};
  if (auto pi = pi_mixed(g, b); pi.answer) return pi;
  PhcagSearch search;
  search.edges = true;
  return finish(search, search.run(State::from(g), b.k1, b.k2, 0));
}

VertexSet phcag_approx6(const Graph& g) {
  VertexBits rest;
  detail::pack_disjoint(g, lists::phcag7(), g.order(), rest);
  VertexSet out = rest.flipped().to_vector();
  auto sub = induced(g, rest);

  VertexSet via_pi;
  for (auto v : pi_approx6(sub.graph)) via_pi.push_back(sub.original[v]);
  VertexSet via_comp;
  auto comps = components(sub.graph);
  std::size_t keep = 0;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() > comps[keep].size()) keep = i;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (i != keep)
      for (auto v : comps[i]) via_comp.push_back(sub.original[v]);

  const auto& extra = via_pi.size() <= via_comp.size() ? via_pi : via_comp;
  out.insert(out.end(), extra.begin(), extra.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arcfix
