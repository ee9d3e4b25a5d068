#include "arcfix/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace arcfix {

Graph::Graph(int n) : adj_(n, VertexBits(n)) {}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

VertexBits Graph::closed_neighbors(Vertex v) const {
  VertexBits b = adj_[v];
  b.set(v);
  return b;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (u < 0 || v < 0 || u >= order() || v >= order()) throw std::out_of_range("vertex id");
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  adj_[u].reset(v);
  adj_[v].reset(u);
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  for (int u = 0; u < order(); ++u)
    for (int v = adj_[u].next(u + 1); v != -1; v = adj_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

EdgeSet Graph::non_edges() const {
  EdgeSet out;
  for (int u = 0; u < order(); ++u)
    for (int v = u + 1; v < order(); ++v)
      if (!adj_[u].test(v)) out.emplace_back(u, v);
  return out;
}

InducedSubgraph induced(const Graph& g, const VertexBits& keep) {
  return induced(g, keep.to_vector());
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph sub{Graph(static_cast<int>(keep.size())), {keep.begin(), keep.end()}};
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) sub.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return sub;
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> drop) {
  VertexBits keep = g.all();
  for (auto v : drop) keep.reset(v);
  return induced(g, keep);
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const auto& e : a.edges()) g.add_edge(e.u, e.v);
  for (const auto& e : b.edges()) g.add_edge(e.u + a.order(), e.v + a.order());
  return g;
}

std::vector<VertexSet> components(const Graph& g, const VertexBits& within) {
  std::vector<VertexSet> out;
  VertexBits left = within;
  for (int s = left.first(); s != -1; s = left.first()) {
    VertexBits comp(g.order());
    VertexBits frontier(g.order());
    frontier.set(s);
    while (frontier.any()) {
      comp |= frontier;
      VertexBits next(g.order());
      frontier.for_each([&](int v) { next |= g.neighbors(v); });
      next &= within;
      next -= comp;
      frontier = std::move(next);
    }
    left -= comp;
    out.push_back(comp.to_vector());
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.all()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t, const VertexBits& allowed) {
  std::vector<int> parent(g.order(), -2);
  std::deque<Vertex> queue{s};
  parent[s] = -1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (u == t) break;
    g.neighbors(u).for_each([&](int w) {
      if (parent[w] != -2) return;
      if (w != t && !allowed.test(w)) return;
      parent[w] = u;
      queue.push_back(w);
    });
  }
  if (parent[t] == -2) return {};
  std::vector<Vertex> path;
  for (Vertex v = t; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

// Shrinks an odd closed walk to an induced odd cycle.
std::vector<Vertex> induce_odd_cycle(const Graph& g, std::vector<Vertex> walk) {
  bool changed = true;
  while (changed) {
    changed = false;
    const int len = static_cast<int>(walk.size());
    for (int i = 0; i < len && !changed; ++i) {
      for (int j = i + 1; j < len && !changed; ++j) {
        bool repeat = walk[i] == walk[j];
        bool chord = !repeat && g.adjacent(walk[i], walk[j]) && j != i + 1 && !(i == 0 && j == len - 1);
        if (!repeat && !chord) continue;
        // Split at i and j; keep the odd part.
        std::vector<Vertex> inner(walk.begin() + i, walk.begin() + j);
        std::vector<Vertex> outer(walk.begin() + j, walk.end());
        outer.insert(outer.end(), walk.begin(), walk.begin() + i);
        if (chord) {
          inner.push_back(walk[j]);
          outer.push_back(walk[i]);
        }
        walk = inner.size() % 2 == 1 ? std::move(inner) : std::move(outer);
        changed = true;
      }
    }
  }
  return walk;
}

}  // namespace

BipartiteCheck is_bipartite(const Graph& g) {
  const int n = g.order();
  BipartiteCheck result;
  result.color.assign(n, -1);
  bool conflict = false;
  for (int s = 0; s < n && !conflict; ++s) {
    if (result.color[s] != -1) continue;
    result.color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty() && !conflict) {
      Vertex u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](int w) {
        if (result.color[w] == -1) {
          result.color[w] = 1 - result.color[u];
          queue.push_back(w);
        } else if (result.color[w] == result.color[u]) {
          conflict = true;
        }
      });
    }
  }
  if (!conflict) {
    result.bipartite = true;
    return result;
  }
  result.color.clear();

  // Shortest odd closed walk through some root gives a shortest odd cycle.
  std::vector<Vertex> best;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    dist[s] = 0;
    std::deque<Vertex> queue{s};
    Vertex cu = -1, cw = -1;
    while (!queue.empty() && cu == -1) {
      Vertex u = queue.front();
      queue.pop_front();
      for (int w = g.neighbors(u).first(); w != -1; w = g.neighbors(u).next(w + 1)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (dist[w] == dist[u]) {
          cu = u;
          cw = w;
          break;
        }
      }
    }
    if (cu == -1) continue;
    if (!best.empty() && static_cast<int>(best.size()) <= 2 * dist[cu] + 1) continue;
    std::vector<Vertex> left, right;
    for (Vertex v = cu; v != -1; v = parent[v]) left.push_back(v);
    for (Vertex v = cw; v != -1; v = parent[v]) right.push_back(v);
    std::reverse(left.begin(), left.end());
    // left: s..cu, right: cw..s; drop the duplicate s.
    right.pop_back();
    left.insert(left.end(), right.begin(), right.end());
    best = std::move(left);
  }
  result.odd_cycle = induce_odd_cycle(g, best);
  return result;
}

std::vector<Vertex> mcs_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<char> done(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (pick == -1 || weight[v] > weight[pick])) pick = v;
    done[pick] = 1;
    order.push_back(pick);
    g.neighbors(pick).for_each([&](int w) {
      if (!done[w]) ++weight[w];
    });
  }
  return order;
}

namespace {

// Calls f(a, v, c) for every vertex v whose earlier-visited neighbours are not
// a clique, with a, c such a non-adjacent pair. Stops when f returns true.
template <class F>
bool for_each_peo_violation(const Graph& g, std::span<const Vertex> visit_order, F&& f) {
  VertexBits seen(g.order());
  for (Vertex v : visit_order) {
    VertexBits earlier = g.neighbors(v) & seen;
    for (int a = earlier.first(); a != -1; a = earlier.next(a + 1)) {
      VertexBits missing = earlier - g.closed_neighbors(a);
      for (int c = missing.next(a + 1); c != -1; c = missing.next(c + 1))
        if (f(a, v, c)) return true;
    }
    seen.set(v);
  }
  return false;
}

std::optional<Hole> hole_through(const Graph& g, Vertex a, Vertex b, Vertex c) {
  VertexBits allowed = g.all() - g.closed_neighbors(b);
  std::vector<Vertex> path = shortest_path(g, a, c, allowed);
  if (path.empty()) return std::nullopt;
  Hole hole{b};
  hole.insert(hole.end(), path.begin(), path.end());
  return hole;
}

}  // namespace

bool is_perfect_elimination(const Graph& g, std::span<const Vertex> visit_order) {
  return !for_each_peo_violation(g, visit_order, [](int, int, int) { return true; });
}

bool is_chordal(const Graph& g) {
  auto order = mcs_order(g);
  return is_perfect_elimination(g, order);
}

std::optional<Hole> find_hole(const Graph& g) {
  auto order = mcs_order(g);
  std::optional<Hole> hole;
  bool violated = false;
  for_each_peo_violation(g, order, [&](int a, int v, int c) {
    violated = true;
    hole = hole_through(g, a, v, c);
    return hole.has_value();
  });
  if (!violated || hole) return hole;
  // Exhaustive fallback over induced paths a-b-c.
  for (int b = 0; b < g.order(); ++b) {
    const auto& nb = g.neighbors(b);
    for (int a = nb.first(); a != -1; a = nb.next(a + 1))
      for (int c = nb.next(a + 1); c != -1; c = nb.next(c + 1))
        if (!g.adjacent(a, c))
          if (auto h = hole_through(g, a, b, c)) return h;
  }
  throw std::logic_error("find_hole: non-chordal graph without a hole");
}

std::optional<Hole> find_long_hole(const Graph& g) {
  const int n = g.order();
  for (int b = 0; b < n; ++b) {
    for (int c = g.neighbors(b).first(); c != -1; c = g.neighbors(b).next(c + 1)) {
      VertexBits blocked = g.closed_neighbors(b) | g.closed_neighbors(c);
      VertexBits rest = g.all() - blocked;
      auto comps = components(g, rest);
      std::vector<int> comp_of(n, -1);
      for (std::size_t i = 0; i < comps.size(); ++i)
        for (auto v : comps[i]) comp_of[v] = static_cast<int>(i);
      VertexBits as = g.neighbors(b) - g.closed_neighbors(c);
      VertexBits ds = g.neighbors(c) - g.closed_neighbors(b);
      for (int a = as.first(); a != -1; a = as.next(a + 1)) {
        std::vector<char> touch(comps.size(), 0);
        (g.neighbors(a) & rest).for_each([&](int x) { touch[comp_of[x]] = 1; });
        for (int d = ds.first(); d != -1; d = ds.next(d + 1)) {
          if (g.adjacent(a, d)) continue;
          bool common = false;
          (g.neighbors(d) & rest).for_each([&](int x) { common = common || touch[comp_of[x]]; });
          if (!common) continue;
          auto path = shortest_path(g, d, a, rest);
          Hole hole{a, b, c};
          hole.insert(hole.end(), path.begin(), path.end() - 1);
          return hole;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_hole(const Graph& g, std::span<const Vertex> cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 4) return false;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      if (cycle[i] == cycle[j]) return false;
      bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

}  // namespace arcfix
