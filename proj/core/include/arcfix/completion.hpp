#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "arcfix/graph.hpp"
#include "arcfix/representation.hpp"

namespace arcfix {

/// A long hole inside the main component, cut open at one hole edge.
///
/// Hole vertices are renumbered 1..m along the circle, with v_m v_1 the cut
/// edge; clique positions are rotated so that a clique holding both sits at 0.
/// Positions of v_m are unwrapped into (0, length].
struct HoleContext {
  Graph g;
  int k = 0;
  std::vector<VertexSet> cliques;   // rotated, position 0 holds v_m and v_1
  std::vector<Vertex> hole;         // hole[i - 1] is v_i
  std::vector<int> from, to;        // 1-based, unwrapped positions
  std::vector<VertexSet> small;     // the other components

  int m() const { return static_cast<int>(hole.size()); }
  const VertexSet& clique_at(int pos) const { return cliques[pos % cliques.size()]; }
};

/// Requires g free of the seven obstructions, with hole lying in a connected
/// component that is a proper Helly circular-arc graph. cut selects which hole
/// edge (in circle order) is cut open. Returns none when no clique holds the
/// cut edge's ends together with the orientation needed.
std::optional<HoleContext> make_hole_context(const Graph& g, const VertexSet& hole, int k, int cut);

struct BetaValue {
  int cost = 0;  // > k means infeasible
  EdgeSet added;
};

/// Minimum additions turning the window between K_to(a) and K_from(b), plus
/// the small components in mask s, into a proper interval graph with those two
/// cliques untouched at its ends.
class BetaTable {
 public:
  explicit BetaTable(const HoleContext& ctx) : ctx_(ctx) {}

  int infinity() const { return ctx_.k + 1; }
  /// Direct search over the window.
  BetaValue direct(unsigned s, int a, int b);
  /// Best split at some v_{b-i}, 1 <= i <= 8k+1, over all ways to share s.
  BetaValue split(unsigned s, int a, int b);
  /// direct when b - a <= 8k, split otherwise; memoised.
  BetaValue value(unsigned s, int a, int b);

  long long searches() const { return searches_; }

 private:
  const HoleContext& ctx_;
  std::map<std::tuple<unsigned, int, int>, BetaValue> memo_;
  long long searches_ = 0;
};

}  // namespace arcfix
