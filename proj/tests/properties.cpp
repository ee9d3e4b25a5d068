#include "properties.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "arcfix/completion.hpp"
#include "arcfix/generators.hpp"
#include "arcfix/patterns.hpp"
#include "arcfix/oracle.hpp"
#include "arcfix/representation.hpp"
#include "testkit.hpp"

namespace testkit::props {

using namespace arcfix;

namespace {

Tally one(bool ok) { return {1, ok ? 0 : 1}; }

bool induced_cycle(const Graph& g, const VertexSet& s) {
  if (s.size() < 3) return false;
  auto sub = induced(g, s).graph;
  for (int v = 0; v < sub.order(); ++v)
    if (sub.degree(v) != 2) return false;
  return is_connected(sub);
}

VertexSet from_bits(std::uint32_t mask, const VertexSet& pool) {
  VertexSet s;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (mask >> i & 1) s.push_back(pool[i]);
  return s;
}

std::vector<VertexSet> holes_by_subsets(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet all(g.order());
  std::iota(all.begin(), all.end(), 0);
  for (std::uint32_t s = 0; s < (1U << g.order()); ++s)
    if (std::popcount(s) >= 4 && induced_cycle(g, from_bits(s, all))) out.push_back(from_bits(s, all));
  return out;
}

// Lengths of the cycles avoiding N[v] for some v, by subset enumeration.
std::vector<int> star_cycle_lengths(const Graph& g) {
  std::vector<int> out;
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    VertexSet far;
    for (Vertex u = 0; u < n; ++u)
      if (u != v && !g.adjacent(u, v)) far.push_back(u);
    for (std::uint32_t mask = 0; mask < (1U << far.size()); ++mask) {
      VertexSet s = from_bits(mask, far);
      if (induced_cycle(g, s)) out.push_back(static_cast<int>(s.size()));
    }
  }
  return out;
}

bool consecutive_everywhere(const Graph& g, const std::vector<VertexSet>& order) {
  const int l = static_cast<int>(order.size());
  for (int v = 0; v < g.order(); ++v) {
    std::vector<bool> in(l);
    for (int p = 0; p < l; ++p) in[p] = std::binary_search(order[p].begin(), order[p].end(), v);
    int runs = 0;
    for (int p = 0; p < l; ++p) runs += in[p] && !in[(p + l - 1) % l];
    int total = static_cast<int>(std::count(in.begin(), in.end(), true));
    if (runs > 1 || (runs == 0 && total != l)) return false;
  }
  return true;
}

// Circular orders equal up to rotation and reversal.
bool same_circle(std::vector<VertexSet> a, const std::vector<VertexSet>& b) {
  for (int flip = 0; flip < 2; ++flip) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (a == b) return true;
      std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

// G1 is proper interval with a and b at the two ends: pendant tails stay proper interval.
bool interval_with_ends(const Graph& g1, const VertexSet& a, const VertexSet& b) {
  const int n = g1.order();
  Graph t(n + 4);
  for (const auto& e : g1.edges()) t.add_edge(e.u, e.v);
  for (auto v : a) t.add_edge(v, n);
  for (auto v : b) t.add_edge(v, n + 2);
  t.add_edge(n, n + 1);
  t.add_edge(n + 2, n + 3);
  return is_connected(t) && recognize_proper_interval(t).accepted;
}

bool adjacent_sets(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (auto u : a)
    for (auto v : b)
      if (u == v || g.adjacent(u, v)) return true;
  return false;
}

// Replacements of G[B1 + A1 + A2] flipping pairs inside B1, so that every
// end-clique vertex keeps its own neighbours in B1.
Tally isolation_side(const Graph& g, const VertexSet& a1, const VertexSet& a2, const VertexSet& b1,
                     std::mt19937_64& rng) {
  EdgeSet pairs;
  for (std::size_t i = 0; i < b1.size(); ++i)
    for (std::size_t j = i + 1; j < b1.size(); ++j) pairs.emplace_back(b1[i], b1[j]);
  std::vector<std::vector<int>> flips;
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) flips.push_back({i});
  for (int t = 0; t < 10; ++t) {
    std::vector<int> f;
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
      if (rng() % 3 == 0) f.push_back(i);
    flips.push_back(f);
  }

  VertexSet all = b1;
  all.insert(all.end(), a1.begin(), a1.end());
  all.insert(all.end(), a2.begin(), a2.end());
  std::sort(all.begin(), all.end());
  Tally t;
  for (const auto& f : flips) {
    Graph h = g;
    for (int i : f) {
      const Edge& e = pairs[i];
      if (h.adjacent(e.u, e.v)) {
        h.remove_edge(e.u, e.v);
      } else {
        h.add_edge(e.u, e.v);
      }
    }
    auto part = induced(h, all);
    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < part.original.size(); ++i) local[part.original[i]] = static_cast<int>(i);
    VertexSet la1, la2;
    for (auto v : a1) la1.push_back(local[v]);
    for (auto v : a2) la2.push_back(local[v]);
    if (!interval_with_ends(part.graph, la1, la2)) continue;
    t += one(recognize_phcag(h).accepted);
  }
  return t;
}

// g connected, co-connected and free of the REDUCED-G patterns; returns its complement.
std::optional<Graph> reduced_of(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  Graph r = complement(g);
  if (!is_connected(r) || find_any(g, lists::reduced_g())) return std::nullopt;
  return r;
}

Graph small_piece(int kind) {
  switch (kind % 4) {
    case 0: return testkit::complete(1);
    case 1: return testkit::complete(2);
    case 2: return testkit::path(3);
    default: return testkit::complete(3);
  }
}

// A connected PHCAG with a hole, next to up to two small PI components, with
// no obstruction from the seven small patterns.
std::optional<Graph> beta_instance(std::mt19937_64& rng) {
  const int n = std::uniform_int_distribution<int>(8, 30)(rng);
  Graph g = planted_phcag(n, 0, rng()).graph;
  if (!is_connected(g) || is_chordal(g)) return std::nullopt;
  const int r = static_cast<int>(rng() % 3);
  for (int i = 0; i < r; ++i) g = unite(g, small_piece(static_cast<int>(rng() % 4)));
  if (find_any(g, lists::phcag7())) return std::nullopt;
  return g;
}

// Window vertices adjacent only through cliques outside [lo, hi]; the window
// then closes up around the circle and has no path shape.
bool wraps(const HoleContext& ctx, int lo, int hi) {
  std::vector<VertexBits> at(ctx.g.order(), VertexBits(hi - lo + 1));
  VertexSet in;
  for (int p = lo; p <= hi; ++p)
    for (auto v : ctx.clique_at(p)) {
      if (at[v].none()) in.push_back(v);
      at[v].set(p - lo);
    }
  for (auto u : in)
    for (auto v : in)
      if (u < v && ctx.g.adjacent(u, v) && !at[u].intersects(at[v])) return true;
  return false;
}

}  // namespace

const std::vector<Graph>& holed_corpus() {
  static const std::vector<Graph> corpus = [] {
    std::vector<Graph> out;
    for (int n = 4; n <= 7; ++n)
      for (std::uint64_t mask = 0; mask < mask_count(n); ++mask) {
        Graph g = from_mask(n, mask);
        if (is_connected(g) && !is_chordal(g) && recognize_phcag(g).accepted) out.push_back(std::move(g));
      }
    for (int seed = 0; seed < 60; ++seed) out.push_back(planted_phcag(8 + seed % 13, 0, seed).graph);
    for (int l = 8; l <= 20; ++l) out.push_back(cycle(l));
    return out;
  }();
  return corpus;
}

const std::vector<Graph>& reduced_corpus() {
  static const std::vector<Graph> corpus = [] {
    std::vector<Graph> out;
    for (int n = 3; n <= 7; ++n)
      for (std::uint64_t mask = 0; mask < mask_count(n); ++mask)
        if (auto r = reduced_of(from_mask(n, mask))) out.push_back(*r);
    for (int l = 7; l <= 14; ++l)
      if (auto r = reduced_of(complement(cycle(l)))) out.push_back(*r);
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40000; ++trial) {
      const int n = 8 + trial % 4;
      // Sparse on the reduced side; half of them grown from a long even cycle.
      Graph r = trial % 2 ? random_graph(n, 0.22, rng) : cycle(n - n % 2);
      if (trial % 2 == 0) {
        if (r.order() < n) r = unite(r, complete(1));
        for (int e = 0; e < 3; ++e) {
          Vertex a = static_cast<Vertex>(rng() % n), b = static_cast<Vertex>(rng() % n);
          if (a != b && !r.adjacent(a, b)) r.add_edge(a, b);
        }
      }
      if (auto red = reduced_of(complement(r))) out.push_back(*red);
    }
    return out;
  }();
  return corpus;
}

Tally no_long_hole_star(const Graph& g) {
  if (!is_connected(g) || find_induced(g, PatternKind::claw()) || find_induced(g, PatternKind::net())) return {};
  bool ok = true;
  for (int l = 5; l <= g.order() - 1 && ok; ++l) ok = !find_induced(g, PatternKind::c_star(l));
  return one(ok);
}

Tally phcag7_free_accepted(const Graph& g) {
  if (!is_connected(g) || find_any(g, lists::phcag7())) return {};
  return one(recognize_phcag(g).accepted);
}

Tally clique_circle_unique(const Graph& g) {
  if (g.order() > 8) return {};
  auto circle = clique_circle(g);
  if (!circle) return one(false);
  const std::vector<VertexSet>& order = circle->cliques;
  std::vector<int> idx(order.size());
  std::iota(idx.begin(), idx.end(), 0);
  bool ok = true;
  // The first clique stays put, which skips rotations.
  do {
    std::vector<VertexSet> other;
    for (int i : idx) other.push_back(order[i]);
    if (consecutive_everywhere(g, other) && !same_circle(order, other)) ok = false;
  } while (ok && std::next_permutation(idx.begin() + 1, idx.end()));
  return one(ok);
}

Tally hole_domination(const Graph& g) {
  std::vector<VertexSet> holes;
  if (g.order() <= 8) {
    holes = holes_by_subsets(g);
  } else if (auto h = find_hole(g)) {
    holes.push_back(*h);
  }
  if (holes.empty()) return one(false);
  Tally t;
  for (const auto& h : holes) {
    bool ok = true;
    for (int v = 0; v < g.order(); ++v) {
      int seen = 0;
      for (auto u : h) seen += g.adjacent(u, v);
      ok = ok && seen >= 2;
    }
    t += one(ok);
  }
  return t;
}

Tally untouched_cliques(const Graph& g, std::mt19937_64& rng) {
  auto cliques = maximal_cliques(g, g.order() + 1).cliques;
  const VertexSet& k = cliques[rng() % cliques.size()];
  EdgeSet free_pairs;
  for (const auto& e : g.non_edges())
    if (!std::binary_search(k.begin(), k.end(), e.u) && !std::binary_search(k.begin(), k.end(), e.v))
      free_pairs.push_back(e);
  std::shuffle(free_pairs.begin(), free_pairs.end(), rng);
  Graph h = g;
  for (std::size_t i = 0; i < free_pairs.size() && i < 3; ++i) h.add_edge(free_pairs[i].u, free_pairs[i].v);
  auto after = maximal_cliques(h, 1 << 20).cliques;
  return one(std::find(after.begin(), after.end(), k) != after.end());
}

Tally isolation(const Graph& g, std::mt19937_64& rng) {
  Tally t;
  if (g.order() > 9) return t;
  auto cliques = maximal_cliques(g, g.order() + 1).cliques;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j) {
      if (adjacent_sets(g, cliques[i], cliques[j])) continue;
      VertexBits rest = g.all();
      for (auto v : cliques[i]) rest.reset(v);
      for (auto v : cliques[j]) rest.reset(v);
      auto sides = components(g, rest);
      // Two non-adjacent cliques split the circle into exactly two sides.
      t += one(sides.size() == 2);
      for (const auto& side : sides) t += isolation_side(g, cliques[i], cliques[j], side, rng);
    }
  return t;
}

Tally reduced_no_long_star(const Graph& r) {
  auto lens = star_cycle_lengths(r);
  return one(std::all_of(lens.begin(), lens.end(), [](int l) { return l < 7; }));
}

Tally reduced_no_odd_star(const Graph& r) {
  auto lens = star_cycle_lengths(r);
  return one(std::all_of(lens.begin(), lens.end(), [](int l) { return l % 2 == 0; }));
}

Tally reduced_long_even_hole_bipartite(const Graph& r) {
  if (!has_even_hole_at_least(r, 8)) return {};
  return one(is_bipartite(r).bipartite);
}

Tally reduced_non_bipartite_complement_pca(const Graph& r) {
  if (is_bipartite(r).bipartite || r.order() > 12) return {};
  return one(member_oracle(complement(r), GraphClass::PCA));
}

Tally beta_split_vs_direct(std::mt19937_64& rng, int windows, long long& agreeing) {
  Tally t;
  agreeing = 0;
  while (t.checked < windows) {
    auto g = beta_instance(rng);
    if (!g) continue;
    auto hole = find_hole(*g);
    if (hole->size() > 20) continue;
    const int k = std::max(1, static_cast<int>(rng() % 5) - 1);
    auto ctx = make_hole_context(*g, *hole, k, static_cast<int>(rng() % hole->size()));
    if (!ctx) continue;
    BetaTable table(*ctx);
    const int m = ctx->m();
    const unsigned all = (1U << ctx->small.size()) - 1;
    for (int a = 1; a <= m; ++a)
      for (int b = a + 2; b <= m; ++b) {
        if (ctx->to[a] < ctx->from[b] && wraps(*ctx, ctx->to[a], ctx->from[b])) continue;
        const unsigned s = static_cast<unsigned>(rng()) & all;
        BetaValue d = table.direct(s, a, b);
        BetaValue sp = table.split(s, a, b);
        bool ok = sp.cost >= d.cost;
        if (d.cost <= k) ok = ok && static_cast<int>(d.added.size()) == d.cost;
        if (d.cost <= k && b - a > 8 * k) {
          ++agreeing;
          ok = ok && sp.cost == d.cost;
        }
        t += one(ok);
      }
  }
  return t;
}

bool has_even_hole_at_least(const Graph& g, int len) {
  VertexSet all(g.order());
  std::iota(all.begin(), all.end(), 0);
  for (std::uint32_t mask = 0; mask < (1U << g.order()); ++mask) {
    const int c = std::popcount(mask);
    if (c >= len && c % 2 == 0 && induced_cycle(g, from_bits(mask, all))) return true;
  }
  return false;
}

}  // namespace testkit::props
