#include "arcfix/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "arcfix/patterns.hpp"

namespace arcfix {
namespace {

int parameter(const std::string& name, std::size_t colon) {
  if (colon == std::string::npos) throw std::invalid_argument("missing parameter in " + name);
  try {
    std::size_t used = 0;
    int p = std::stoi(name.substr(colon + 1), &used);
    if (used != name.size() - colon - 1 || p < 0) throw std::invalid_argument(name);
    return p;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad parameter in " + name);
  }
}

// Arcs of one common length; consecutive starts closer than the length.
Graph equal_arcs(int m, double reach_lo, double reach_hi, std::mt19937_64& rng) {
  Graph g(m);
  if (m < 2) return g;
  std::uniform_real_distribution<double> gap(0.2, 1.8);
  std::vector<double> start(m);
  double total = 0;
  for (int i = 0; i < m; ++i) {
    start[i] = total;
    total += gap(rng);
  }
  // reach is the arc length measured in average gaps.
  double reach = std::uniform_real_distribution<double>(reach_lo, reach_hi)(rng);
  const double len = reach * total / m;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      double d = std::abs(start[i] - start[j]);
      if (std::min(d, total - d) < len) g.add_edge(i, j);
    }
  return g;
}

Planted with_junk(Graph base, int k, std::mt19937_64& rng) {
  const int m = base.order();
  Planted out{Graph(m + k), {}, {}};
  for (const auto& e : base.edges()) out.graph.add_edge(e.u, e.v);
  std::bernoulli_distribution to_base(std::min(0.5, 6.0 / std::max(m, 1)));
  std::bernoulli_distribution to_junk(0.5);
  for (int x = m; x < m + k; ++x) {
    out.planted.push_back(x);
    for (int v = 0; v < x; ++v)
      if (v < m ? to_base(rng) : to_junk(rng)) out.graph.add_edge(v, x);
  }
  return out;
}

Graph phcag_base(int m, std::mt19937_64& rng) {
  if (m < 8) {
    Graph g(m);
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    return g;
  }
  // Three arcs never cover the circle, so the model is Helly.
  return equal_arcs(m, 2.0, std::min(4.0, m / 3.5), rng);
}

}  // namespace

Graph named_graph(const std::string& name) {
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  if (head == "path" || head == "complete") {
    const int n = parameter(name, colon);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (head == "complete" || v == u + 1) g.add_edge(u, v);
    return g;
  }
  if (head == "cocktail") {
    const int p = parameter(name, colon);
    Graph g(2 * p);
    for (int u = 0; u < 2 * p; ++u)
      for (int v = u + 1; v < 2 * p; ++v)
        if (v != u + 1 || u % 2 == 1) g.add_edge(u, v);
    return g;
  }
  return build(PatternKind::parse(name));
}

Planted planted_phcag(int n, int k, std::uint64_t seed) {
  if (k < 0 || k > n) throw std::invalid_argument("planted_phcag: need 0 <= k <= n");
  std::mt19937_64 rng(seed);
  return with_junk(phcag_base(n - k, rng), k, rng);
}

Planted planted_pca(int n, int k, std::uint64_t seed) {
  if (k < 0 || k > n) throw std::invalid_argument("planted_pca: need 0 <= k <= n");
  std::mt19937_64 rng(seed);
  const int m = n - k;
  // Arcs longer than a third of the circle.
  Graph base = m < 8 ? phcag_base(m, rng) : equal_arcs(m, 0.36 * m, 0.45 * m, rng);
  return with_junk(std::move(base), k, rng);
}

Planted planted_completion(int n, int k, std::uint64_t seed) {
  if (k < 0 || n < 0) throw std::invalid_argument("planted_completion: need n, k >= 0");
  std::mt19937_64 rng(seed);
  Planted out{phcag_base(n, rng), {}, {}};
  auto edges = out.graph.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  for (int i = 0; i < k && i < static_cast<int>(edges.size()); ++i) {
    out.graph.remove_edge(edges[i].u, edges[i].v);
    out.removed.push_back(edges[i]);
    out.planted.push_back(edges[i].u);
    out.planted.push_back(edges[i].v);
  }
  std::sort(out.planted.begin(), out.planted.end());
  out.planted.erase(std::unique(out.planted.begin(), out.planted.end()), out.planted.end());
  std::sort(out.removed.begin(), out.removed.end());
  return out;
}

Planted planted(const std::string& kind, int n, int k, std::uint64_t seed) {
  if (kind == "planted-phcag") return planted_phcag(n, k, seed);
  if (kind == "planted-pca") return planted_pca(n, k, seed);
  if (kind == "planted-completion") return planted_completion(n, k, seed);
  throw std::invalid_argument("unknown generator " + kind);
}

}  // namespace arcfix
