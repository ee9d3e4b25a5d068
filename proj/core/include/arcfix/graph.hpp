#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "arcfix/vertex_bits.hpp"

namespace arcfix {

using Vertex = int;
/// Sorted list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};
using EdgeSet = std::vector<Edge>;

/// Induced cycle on at least four vertices, in cyclic order.
using Hole = std::vector<Vertex>;

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const VertexBits& neighbors(Vertex v) const { return adj_[v]; }
  VertexBits closed_neighbors(Vertex v) const;
  int degree(Vertex v) const { return adj_[v].count(); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  VertexBits all() const { return VertexBits::full(order()); }
  EdgeSet edges() const;
  EdgeSet non_edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexBits> adj_;
};

/// Subgraph with compacted ids; `original[i]` is the parent id of vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

InducedSubgraph induced(const Graph& g, const VertexBits& keep);
InducedSubgraph induced(const Graph& g, std::span<const Vertex> keep);
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> drop);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components(const Graph& g, const VertexBits& within);
bool is_connected(const Graph& g);

struct BipartiteCheck {
  bool bipartite = false;
  std::vector<int> color;          ///< 0/1 per vertex when bipartite
  std::vector<Vertex> odd_cycle;   ///< induced odd cycle otherwise
};
BipartiteCheck is_bipartite(const Graph& g);

/// Shortest path from s to t using only vertices in `allowed` (s, t included
/// implicitly). Empty when disconnected.
std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t, const VertexBits& allowed);

/// Maximum cardinality search visit order.
std::vector<Vertex> mcs_order(const Graph& g);
/// True iff the reverse of `order` is a perfect elimination ordering.
bool is_perfect_elimination(const Graph& g, std::span<const Vertex> visit_order);
bool is_chordal(const Graph& g);

std::optional<Hole> find_hole(const Graph& g);
/// Hole of length at least five, if one exists.
std::optional<Hole> find_long_hole(const Graph& g);
bool is_hole(const Graph& g, std::span<const Vertex> cycle);

}  // namespace arcfix
