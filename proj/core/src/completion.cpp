#include "arcfix/completion.hpp"

#include <algorithm>

#include "arcfix/patterns.hpp"
#include "arcfix/phcag.hpp"
#include "search_util.hpp"

namespace arcfix {

std::optional<HoleContext> make_hole_context(const Graph& g, const VertexSet& hole, int k, int cut) {
  auto comps = components(g);
  std::size_t host = 0;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (std::find(comps[i].begin(), comps[i].end(), hole[0]) != comps[i].end()) host = i;
  auto sub = induced(g, comps[host]);
  auto circle = clique_circle(sub.graph);
  if (!circle) return std::nullopt;
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < sub.original.size(); ++i) local[sub.original[i]] = static_cast<int>(i);

  const int l = circle->length();
  const int m = static_cast<int>(hole.size());
  VertexSet around = hole;
  std::sort(around.begin(), around.end(), [&](Vertex a, Vertex b) {
    return circle->lp[local[a]] < circle->lp[local[b]];
  });
  const Vertex last = around[cut % m], first = around[(cut + 1) % m];

  int base = -1;
  for (int p = 0; p < l && base < 0; ++p)
    if (circle->contains(local[last], p) && circle->contains(local[first], p)) base = p;
  if (base < 0) return std::nullopt;

  HoleContext ctx;
  ctx.g = g;
  ctx.k = k;
  for (int p = 0; p < l; ++p) {
    VertexSet c;
    for (auto v : circle->cliques[(base + p) % l]) c.push_back(sub.original[v]);
    ctx.cliques.push_back(std::move(c));
  }
  ctx.from.assign(m + 1, 0);
  ctx.to.assign(m + 1, 0);
  for (int i = 1; i <= m; ++i) {
    const Vertex v = around[(cut + i) % m];
    ctx.hole.push_back(v);
    const int span = circle->span(local[v]);
    int start = (circle->lp[local[v]] - base + l) % l;
    if (i == 1) {
      ctx.to[i] = (circle->rp[local[v]] - base + l) % l;
      ctx.from[i] = ctx.to[i] - span + 1;
      continue;
    }
    if (i == m && start == 0) start = l;
    ctx.from[i] = start;
    ctx.to[i] = start + span - 1;
  }
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (i != host) ctx.small.push_back(comps[i]);
  return ctx;
}

namespace {

const std::vector<PatternKind>& small_obstructions() {
  static const std::vector<PatternKind> kinds = {PatternKind::claw(), PatternKind::tent(), PatternKind::net()};
  return kinds;
}

// Additions within a window graph; frozen vertices never gain an edge.
struct WindowSearch {
  Graph w;
  VertexBits frozen;
  Vertex anchor;
  EdgeSet added;

  EdgeSet candidates(bool& done) const {
    EdgeSet out;
    done = false;
    auto allowed = [&](Vertex a, Vertex b) { return !frozen.test(a) && !frozen.test(b); };
    VertexSet target;
    if (auto x = find_any(w, small_obstructions())) {
      target = x->vertices;
    } else if (!is_chordal(w)) {
      target = *find_hole(w);
    } else {
      auto comps = components(w);
      if (comps.size() == 1) {
        done = true;
        return out;
      }
      const VertexSet* pick = nullptr;
      for (const auto& c : comps) {
        if (std::find(c.begin(), c.end(), anchor) != c.end()) continue;
        if (!pick || c.size() < pick->size()) pick = &c;
      }
      VertexBits inside(w.order());
      for (auto v : *pick) inside.set(v);
      for (auto x : *pick)
        for (int y = 0; y < w.order(); ++y)
          if (!inside.test(y) && allowed(x, y)) out.emplace_back(std::min(x, y), std::max(x, y));
      return out;
    }
    for (std::size_t i = 0; i < target.size(); ++i)
      for (std::size_t j = i + 1; j < target.size(); ++j)
        if (!w.adjacent(target[i], target[j]) && allowed(target[i], target[j]))
          out.emplace_back(std::min(target[i], target[j]), std::max(target[i], target[j]));
    return out;
  }

  bool run(int budget) {
    if (static_cast<int>(components(w).size()) - 1 > budget) return false;
    bool done = false;
    EdgeSet cand = candidates(done);
    if (done) return true;
    if (budget == 0) return false;
    for (const auto& e : cand) {
      w.add_edge(e.u, e.v);
      added.push_back(e);
      if (run(budget - 1)) return true;
      added.pop_back();
      w.remove_edge(e.u, e.v);
    }
    return false;
  }
};

}  // namespace

BetaValue BetaTable::direct(unsigned s, int a, int b) {
  ++searches_;
  const BetaValue none{infinity(), {}};
  const int lo = ctx_.to[a], hi = ctx_.from[b];
  if (lo >= hi) return none;
  const VertexSet& left = ctx_.clique_at(lo);
  const VertexSet& right = ctx_.clique_at(hi);
  for (auto v : left)
    if (std::find(right.begin(), right.end(), v) != right.end()) return none;

  VertexBits in(ctx_.g.order());
  for (int p = lo; p <= hi; ++p)
    for (auto v : ctx_.clique_at(p)) in.set(v);
  for (std::size_t j = 0; j < ctx_.small.size(); ++j)
    if (s >> j & 1)
      for (auto v : ctx_.small[j]) in.set(v);
  auto sub = induced(ctx_.g, in);
  const int n = sub.graph.order();

  // Two pendant tails pin the end cliques to the ends of the path.
  WindowSearch search{Graph(n + 4), VertexBits(n + 4), n, {}};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (sub.graph.adjacent(u, v)) search.w.add_edge(u, v);
  std::vector<int> local(ctx_.g.order(), -1);
  for (int i = 0; i < n; ++i) local[sub.original[i]] = i;
  for (auto v : left) search.w.add_edge(n, local[v]), search.frozen.set(local[v]);
  for (auto v : right) search.w.add_edge(n + 2, local[v]), search.frozen.set(local[v]);
  search.w.add_edge(n, n + 1);
  search.w.add_edge(n + 2, n + 3);
  for (int t = n; t < n + 4; ++t) search.frozen.set(t);

  for (int budget = 0; budget <= ctx_.k; ++budget) {
    if (!search.run(budget)) continue;
    BetaValue out{budget, {}};
    for (const auto& e : search.added) out.added.emplace_back(sub.original[e.u], sub.original[e.v]);
    return out;
  }
  return none;
}

BetaValue BetaTable::split(unsigned s, int a, int b) {
  BetaValue best{infinity(), {}};
  for (int i = 1; i <= 8 * ctx_.k + 1; ++i) {
    const int c = b - i;
    if (c <= a) break;
    for (unsigned part = s;; part = (part - 1) & s) {
      BetaValue l = value(s & ~part, a, c);
      if (l.cost < best.cost) {
        BetaValue r = value(part, c, b);
        if (l.cost + r.cost < best.cost) {
          best.cost = l.cost + r.cost;
          best.added = l.added;
          best.added.insert(best.added.end(), r.added.begin(), r.added.end());
        }
      }
      if (part == 0) break;
    }
  }
  return best;
}

BetaValue BetaTable::value(unsigned s, int a, int b) {
  auto key = std::make_tuple(s, a, b);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  BetaValue v = b - a <= 8 * ctx_.k ? direct(s, a, b) : split(s, a, b);
  memo_.emplace(key, v);
  return v;
}

namespace {

struct CompletionSearch {
  SolveStats stats;
  Modification found;

  bool accept(const detail::State& s) {
    found = s.mod;
    return true;
  }

  bool run(const detail::State& s, int k, int depth) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    if (k < 0) return false;
    if (auto w = find_any(s.g, lists::phcag7())) {
      if (k == 0) return false;
      for (const auto& e : detail::witness_non_edges(s.g, w->vertices))
        if (run(s.plus_edge(e), k - 1, depth + 1)) return true;
      return false;
    }
    if (recognize_phcag(s.g).accepted) return accept(s);

    // Shortest hole over the components; a short one is branched on directly.
    auto comps = components(s.g);
    std::optional<VertexSet> hole;
    std::size_t hole_comp = 0;
    int holed = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      auto sub = induced(s.g, comps[i]);
      if (is_chordal(sub.graph)) continue;
      ++holed;
      VertexSet h;
      auto found_hole = find_hole(sub.graph);
      for (auto v : *found_hole) h.push_back(sub.original[v]);
      if (!hole || h.size() < hole->size()) hole = std::move(h), hole_comp = i;
    }
    const int m = static_cast<int>(hole->size());
    if (m <= 16 * k + 16) {
      if (k == 0) return false;
      const Vertex outside = comps[hole_comp == 0 ? 1 : 0][0];
      EdgeSet cand = detail::witness_non_edges(s.g, *hole);
      for (auto v : *hole) cand.emplace_back(outside, v);
      for (const auto& e : cand)
        if (run(s.plus_edge(e), k - 1, depth + 1)) return true;
      return false;
    }
    const int n = s.g.order();
    if (holed > 1 || 2 * (n - static_cast<int>(comps[hole_comp].size())) > k) return false;

    const unsigned all = (1U << (comps.size() - 1)) - 1;
    for (int cut = 0; cut < std::min(m, 16 * k + 2); ++cut) {
      auto ctx = make_hole_context(s.g, *hole, k, cut);
      if (!ctx) continue;
      BetaTable table(*ctx);
      BetaValue v = table.value(all, 1, m);
      stats.nodes += table.searches();
      if (v.cost > k) continue;
      detail::State next = s;
      for (const auto& e : v.added) next = next.plus_edge(e);
      if (recognize_phcag(next.g).accepted) return accept(next);
    }
    return false;
  }
};

}  // namespace

SolveResult phcag_completion(const Graph& g, int k) {
  CompletionSearch search;
  SolveResult r;
  r.answer = search.run(detail::State::from(g), k, 0);
  r.stats = search.stats;
  if (r.answer) {
    r.solution = std::move(search.found);
    detail::normalize(r.solution);
  }
  return r;
}

}  // namespace arcfix
