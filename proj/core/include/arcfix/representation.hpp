#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arcfix/graph.hpp"
#include "arcfix/patterns.hpp"

namespace arcfix {

struct CliqueList {
  std::vector<VertexSet> cliques;  ///< sorted; empty when too_many
  bool too_many = false;
};

/// All maximal cliques, or too_many once more than `cap` have been found.
CliqueList maximal_cliques(const Graph& g, int cap);

/// Maximal cliques in a circular (or linear) order where the cliques holding
/// any vertex are consecutive. lp/rp are the first and last such position.
struct CliqueCircle {
  std::vector<VertexSet> cliques;
  std::vector<int> lp;
  std::vector<int> rp;
  bool circular = true;

  int length() const { return static_cast<int>(cliques.size()); }
  /// Number of consecutive positions covered by v.
  int span(Vertex v) const;
  bool contains(Vertex v, int position) const;
};

/// Builds the circle for a connected graph; none when the incidences have no
/// circular-ones arrangement or there are more than n maximal cliques.
std::optional<CliqueCircle> clique_circle(const Graph& g);
/// Linear arrangement (clique path), if the graph has one.
std::optional<CliqueCircle> clique_path(const Graph& g);
/// Checks the CliqueCircle invariants against g.
bool is_valid_circle(const Graph& g, const CliqueCircle& c);

/// Arc covering `length` consecutive points from `start`, modulo the circle.
struct Arc {
  int start = 0;
  int length = 1;
};

struct ArcRep {
  int circle = 0;
  std::vector<Arc> arcs;

  /// Closed endpoints [l, r]; r < l when the arc wraps.
  std::pair<int, int> endpoints(Vertex v) const;
};

/// Arc [lp(v), rp(v)] on a circle with one point per clique.
ArcRep arcs_from_circle(const CliqueCircle& c);
/// Splits every clique point so that no arc properly contains another.
ArcRep proper_arcs_from_circle(const CliqueCircle& c);

struct RepCheck {
  bool is_rep = false;
  bool is_proper = false;
  bool is_helly = false;
  std::optional<int> min_cover;  ///< none when the arcs do not cover the circle
};

RepCheck validate_rep(const Graph& g, const ArcRep& r);

struct Recognition {
  bool accepted = false;
  std::optional<CliqueCircle> circle;
  std::optional<ArcRep> rep;
  std::optional<Witness> witness;
};

/// Proper interval: accepted with a clique path, or a claw/tent/net/hole witness.
Recognition recognize_proper_interval(const Graph& g);

/// Proper Helly circular-arc: accepted with a verified proper Helly
/// representation, or a witness from the PHCAG7 list (C*_l for disconnected
/// graphs with a hole).
Recognition recognize_phcag(const Graph& g);

/// Gap i minimising |K_i ∩ K_{i+1}| (circularly), ties to the smallest i.
std::pair<int, VertexSet> min_point_load(const CliqueCircle& c);

}  // namespace arcfix
