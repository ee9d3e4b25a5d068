#include "arcfix/representation.hpp"

#include <algorithm>
#include <numeric>

#include "arcfix/consecutive_ones.hpp"

namespace arcfix {
namespace {

struct CliqueSearch {
  const Graph& g;
  int cap;
  std::vector<VertexSet> found;
  bool too_many = false;
  VertexSet r;

  void run(VertexBits p, VertexBits x) {
    if (too_many) return;
    if (p.none() && x.none()) {
      VertexSet c = r;
      std::sort(c.begin(), c.end());
      found.push_back(std::move(c));
      if (static_cast<int>(found.size()) > cap) too_many = true;
      return;
    }
    // Tomita pivot: most neighbours inside p.
    int pivot = -1, best = -1;
    (p | x).for_each([&](int u) {
      int c = (p & g.neighbors(u)).count();
      if (c > best) best = c, pivot = u;
    });
    VertexBits todo = p - g.neighbors(pivot);
    for (int v = todo.first(); v != -1 && !too_many; v = todo.next(v + 1)) {
      r.push_back(v);
      run(p & g.neighbors(v), x & g.neighbors(v));
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }
};

std::optional<CliqueCircle> arrange(const Graph& g, bool circular) {
  const int n = g.order();
  auto list = maximal_cliques(g, std::max(n, 1));
  if (list.too_many) return std::nullopt;
  const int l = static_cast<int>(list.cliques.size());
  std::vector<std::vector<int>> sets(n);
  for (int i = 0; i < l; ++i)
    for (auto v : list.cliques[i]) sets[v].push_back(i);
  auto order = circular ? circular_ones_order(l, sets) : consecutive_ones_order(l, sets);
  if (!order) return std::nullopt;

  CliqueCircle c;
  c.circular = circular;
  for (int i : *order) c.cliques.push_back(list.cliques[i]);
  c.lp.assign(n, 0);
  c.rp.assign(n, 0);
  std::vector<VertexBits> at(n, VertexBits(l));
  for (int p = 0; p < l; ++p)
    for (auto v : c.cliques[p]) at[v].set(p);
  for (int v = 0; v < n; ++v) {
    const int cnt = at[v].count();
    if (!circular || cnt == l) {
      c.lp[v] = at[v].first();
      c.rp[v] = c.lp[v] + cnt - 1;
      continue;
    }
    for (int p = at[v].first(); p != -1; p = at[v].next(p + 1))
      if (!at[v].test((p + l - 1) % l)) c.lp[v] = p;
    c.rp[v] = (c.lp[v] + cnt - 1) % l;
  }
  return c;
}

}  // namespace

CliqueList maximal_cliques(const Graph& g, int cap) {
  CliqueSearch s{g, cap, {}, false, {}};
  if (g.order() > 0) s.run(g.all(), VertexBits(g.order()));
  CliqueList out;
  out.too_many = s.too_many;
  if (!s.too_many) {
    out.cliques = std::move(s.found);
    std::sort(out.cliques.begin(), out.cliques.end());
  }
  return out;
}

int CliqueCircle::span(Vertex v) const {
  const int l = length();
  return circular ? (rp[v] - lp[v] + l) % l + 1 : rp[v] - lp[v] + 1;
}

bool CliqueCircle::contains(Vertex v, int position) const {
  const int l = length();
  return (position - lp[v] + l) % l < span(v);
}

std::optional<CliqueCircle> clique_circle(const Graph& g) { return arrange(g, true); }

std::optional<CliqueCircle> clique_path(const Graph& g) { return arrange(g, false); }

bool is_valid_circle(const Graph& g, const CliqueCircle& c) {
  auto list = maximal_cliques(g, g.order() * g.order() + 1);
  auto mine = c.cliques;
  for (auto& k : mine) std::sort(k.begin(), k.end());
  std::sort(mine.begin(), mine.end());
  if (list.too_many || mine != list.cliques) return false;
  for (int v = 0; v < g.order(); ++v)
    for (int p = 0; p < c.length(); ++p) {
      bool in = std::find(c.cliques[p].begin(), c.cliques[p].end(), v) != c.cliques[p].end();
      if (in != c.contains(v, p)) return false;
    }
  return true;
}

std::pair<int, int> ArcRep::endpoints(Vertex v) const {
  const Arc& a = arcs[v];
  return {a.start, (a.start + a.length - 1) % circle};
}

ArcRep arcs_from_circle(const CliqueCircle& c) {
  ArcRep r{c.length(), {}};
  for (std::size_t v = 0; v < c.lp.size(); ++v) r.arcs.push_back({c.lp[v], c.span(static_cast<int>(v))});
  return r;
}

ArcRep proper_arcs_from_circle(const CliqueCircle& c) {
  const int n = static_cast<int>(c.lp.size());
  const int l = c.length();
  std::vector<std::vector<Vertex>> opens(l), closes(l);
  for (int v = 0; v < n; ++v) {
    opens[c.lp[v]].push_back(v);
    closes[c.rp[v]].push_back(v);
  }
  // At a point, shorter arcs open first and longer arcs close first.
  std::vector<int> left(n), right(n);
  int slot = 0;
  for (int p = 0; p < l; ++p) {
    std::sort(opens[p].begin(), opens[p].end(), [&](Vertex a, Vertex b) {
      return std::pair(c.span(a), a) < std::pair(c.span(b), b);
    });
    std::sort(closes[p].begin(), closes[p].end(), [&](Vertex a, Vertex b) {
      return std::pair(-c.span(a), a) < std::pair(-c.span(b), b);
    });
    for (auto v : opens[p]) left[v] = slot++;
    ++slot;  // the clique's own point
    for (auto v : closes[p]) right[v] = slot++;
    ++slot;  // gap, covered only by arcs through both neighbouring cliques
  }
  ArcRep r{slot, {}};
  for (int v = 0; v < n; ++v) r.arcs.push_back({left[v], (right[v] - left[v] + slot) % slot + 1});
  return r;
}

RepCheck validate_rep(const Graph& g, const ArcRep& r) {
  const int n = g.order();
  const int pts = r.circle;
  RepCheck out;
  if (static_cast<int>(r.arcs.size()) != n) return out;
  std::vector<VertexBits> cover(n, VertexBits(pts));
  for (int v = 0; v < n; ++v) {
    const Arc& a = r.arcs[v];
    if (a.length < 1 || a.length > pts || a.start < 0 || a.start >= pts) return out;
    for (int i = 0; i < a.length; ++i) cover[v].set((a.start + i) % pts);
  }

  Graph arcs_graph(n);
  out.is_rep = true;
  out.is_proper = true;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool meet = cover[u].intersects(cover[v]);
      if (meet) arcs_graph.add_edge(u, v);
      if (meet != g.adjacent(u, v)) out.is_rep = false;
      bool uv = cover[u].subset_of(cover[v]), vu = cover[v].subset_of(cover[u]);
      if (uv != vu) out.is_proper = false;
    }

  // Each point carries at most one clique, so more than pts cliques means
  // some clique has no common point.
  auto cliques = maximal_cliques(arcs_graph, std::max(pts, 1));
  out.is_helly = !cliques.too_many;
  for (const auto& k : cliques.cliques) {
    VertexBits common = VertexBits::full(pts);
    for (auto v : k) common &= cover[v];
    if (common.none()) out.is_helly = false;
  }

  // Greedy extension from every starting arc is exact for circle covers.
  std::optional<int> best;
  for (int s = 0; s < n; ++s) {
    const Arc& first = r.arcs[s];
    int reach = first.length, used = 1;
    while (reach < pts) {
      const int p = (first.start + reach) % pts;
      int next = reach;
      for (int v = 0; v < n; ++v) {
        if (!cover[v].test(p)) continue;
        int into = (p - r.arcs[v].start + pts) % pts;
        next = std::max(next, reach + r.arcs[v].length - into);
      }
      if (next == reach) break;
      reach = next;
      ++used;
    }
    if (reach >= pts && (!best || used < *best)) best = used;
  }
  out.min_cover = best;
  return out;
}

}  // namespace arcfix
