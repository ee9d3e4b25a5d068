#include "arcfix/pca.hpp"

#include "arcfix/interval_base.hpp"
#include "arcfix/patterns.hpp"
#include "search_util.hpp"

namespace arcfix {

using detail::State;

namespace {

const std::vector<PatternKind>& long_claws() {
  static const std::vector<PatternKind> kinds = {PatternKind::f(1), PatternKind::f(2), PatternKind::f(3)};
  return kinds;
}

// Vertices of some bipartite-permutation obstruction, or empty.
VertexSet bp_obstruction(const Graph& g) {
  if (auto w = find_any(g, lists::bp_small())) return w->vertices;
  auto bc = is_bipartite(g);
  if (!bc.bipartite) return bc.odd_cycle;
  if (auto h = find_long_hole(g)) return *h;
  return {};
}

Witness complemented(Witness w) {
  w.kind = PatternKind::complement_of(w.kind);
  return w;
}

// Adds a vertex outside `comp` to a witness living inside one component.
Witness with_outsider(const Graph& g, Witness w, PatternKind kind) {
  for (const auto& c : components(g)) {
    if (std::find(c.begin(), c.end(), w.vertices[0]) != c.end()) continue;
    w.vertices.push_back(c[0]);
    break;
  }
  w.kind = kind;
  return w;
}

}  // namespace

Recognition is_bipartite_permutation(const Graph& g) {
  Recognition r;
  auto bc = is_bipartite(g);
  if (!bc.bipartite) {
    r.witness = Witness{PatternKind::cycle(static_cast<int>(bc.odd_cycle.size())), bc.odd_cycle};
  } else if (auto w = find_any(g, long_claws())) {
    r.witness = std::move(w);
  } else if (auto h = find_long_hole(g)) {
    r.witness = Witness{PatternKind::cycle(static_cast<int>(h->size())), *h};
  } else {
    r.accepted = true;
  }
  return r;
}

Recognition recognize_pca(const Graph& g) {
  if (g.order() == 0) return {true, std::nullopt, std::nullopt, std::nullopt};
  if (!is_connected(g)) {
    Recognition r = recognize_proper_interval(g);
    if (r.accepted) return r;
    const Witness& w = *r.witness;
    const int len = w.kind.param;
    if (w.kind.tag == PatternKind::Tag::Tent)
      r.witness = with_outsider(g, w, PatternKind::tent_plus_isolated());
    else if (w.kind.tag == PatternKind::Tag::Cycle)
      r.witness = with_outsider(g, w, len == 4 ? PatternKind::c4_star() : PatternKind::c_star(len));
    return r;
  }

  const Graph co = complement(g);
  if (!is_connected(co)) {
    Recognition r = is_bipartite_permutation(co);
    if (r.accepted) return r;
    Witness w = *r.witness;
    if (w.kind.tag == PatternKind::Tag::Cycle && w.kind.param % 2 == 1) {
      // An odd cycle of the complement plus a vertex of another co-component.
      w = with_outsider(co, w, w.kind.param == 3 ? PatternKind::c3_star() : PatternKind::c_star(w.kind.param));
      if (w.kind.tag == PatternKind::Tag::C3Star) {
        r.witness = Witness{PatternKind::claw(), {w.vertices[3], w.vertices[0], w.vertices[1], w.vertices[2]}};
        return r;
      }
    }
    r.witness = complemented(w);
    return r;
  }

  if (auto w = find_any(g, lists::reduced_g())) return {false, std::nullopt, std::nullopt, std::move(w)};
  if (!is_bipartite(co).bipartite) return {true, std::nullopt, std::nullopt, std::nullopt};
  Recognition r = is_bipartite_permutation(co);
  if (!r.accepted) r.witness = complemented(*r.witness);
  return r;
}

namespace {

struct BpSearch {
  SolveStats stats;
  Modification found;

  bool run(const State& s, int k, int depth) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    VertexSet target = bp_obstruction(s.g);
    if (target.empty()) {
      found = s.mod;
      return true;
    }
    if (k == 0) return false;
    VertexBits rest;
    if (detail::pack_disjoint(s.g, lists::bp_small(), k, rest) > k) return false;
    for (auto v : target)
      if (run(s.without(v), k - 1, depth + 1)) return true;
    return false;
  }
};

// Pattern branching, then the component and co-component steps.
struct PcaSearch {
  SolveStats stats;
  Modification found;

  bool run(const State& s, int k, int depth) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    if (k < 0) return false;
    if (auto w = find_any(s.g, lists::reduced_g())) {
      if (k == 0) return false;
      for (auto v : w->vertices)
        if (run(s.without(v), k - 1, depth + 1)) return true;
      return false;
    }
    const int n = s.g.order();
    for (const auto& comp : components(s.g)) {
      const int left = k - (n - static_cast<int>(comp.size()));
      if (left < 0) continue;
      auto sub = induced(s.g, comp);
      Graph co = complement(sub.graph);
      if (is_bipartite(co).bipartite) continue;
      const VertexSet* best = nullptr;
      auto cocomps = components(co);
      for (const auto& c : cocomps) {
        if (c.size() < 3 || (best && c.size() <= best->size())) continue;
        if (!is_bipartite(induced(co, c).graph).bipartite) best = &c;
      }
      if (static_cast<int>(comp.size() - best->size()) > left) continue;
      VertexBits keep(n);
      for (auto v : *best) keep.set(sub.original[v]);
      found = s.without(keep.flipped().to_vector()).mod;
      return true;
    }
    return false;
  }
};

template <typename Search>
SolveResult finish(Search& search, bool ok) {
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

SolveResult bpvd(const Graph& g, int k) {
  BpSearch search;
  bool ok = k >= 0 && search.run(State::from(g), k, 0);
  return finish(search, ok);
}

SolveResult pca_vd(const Graph& g, int k) {
  if (k < 0) return {};
  if (auto r = pivd(g, k); r.answer) return r;
  if (auto r = bpvd(complement(g), k); r.answer) return r;
  PcaSearch search;
  bool ok = search.run(State::from(g), k, 0);
  return finish(search, ok);
}

VertexSet bp_greedy(const Graph& g) {
  VertexBits rest = g.all();
  while (true) {
    auto sub = induced(g, rest);
    VertexSet target = bp_obstruction(sub.graph);
    if (target.empty()) break;
    for (auto v : target) rest.reset(sub.original[v]);
  }
  return rest.flipped().to_vector();
}

VertexSet pca_approx9(const Graph& g) {
  VertexBits rest;
  detail::pack_disjoint(g, lists::reduced_g(), g.order(), rest);
  VertexSet base = rest.flipped().to_vector();
  auto sub = induced(g, rest);
  const Graph& r = sub.graph;

  auto leaves_pca = [&](const VertexSet& drop) {
    Modification m;
    m.deleted_vertices = drop;
    return recognize_pca(apply(r, m)).accepted;
  };
  std::vector<VertexSet> options = {pi_approx6(r)};
  if (VertexSet co_side = bp_greedy(complement(r)); leaves_pca(co_side)) options.push_back(std::move(co_side));
  const int n = r.order();
  for (const auto& comp : components(r)) {
    auto part = induced(r, comp);
    Graph co = complement(part.graph);
    VertexSet best;
    for (const auto& c : components(co))
      if (c.size() > best.size() && !is_bipartite(induced(co, c).graph).bipartite) best = c;
    if (best.empty()) continue;
    VertexBits keep(n);
    for (auto v : best) keep.set(part.original[v]);
    VertexSet drop = keep.flipped().to_vector();
    if (leaves_pca(drop)) options.push_back(std::move(drop));
  }

  const VertexSet* pick = &options[0];
  for (const auto& o : options)
    if (o.size() < pick->size()) pick = &o;
  for (auto v : *pick) base.push_back(sub.original[v]);
  std::sort(base.begin(), base.end());
  return base;
}

}  // namespace arcfix
