#pragma once

#include <vector>

#include "arcfix/graph.hpp"
#include "arcfix/interval_base.hpp"
#include "arcfix/patterns.hpp"
#include "arcfix/solve_result.hpp"

namespace arcfix {

/// At most k vertex deletions to a proper Helly circular-arc graph.
SolveResult phcag_vd(const Graph& g, int k);
/// At most k edge deletions to a proper Helly circular-arc graph.
SolveResult phcag_ed(const Graph& g, int k);
/// At most b.k1 vertex deletions and b.k2 edge deletions.
SolveResult phcag_mixed(const Graph& g, Budget b);
/// At most k edge additions (see completion.hpp for the pieces).
SolveResult phcag_completion(const Graph& g, int k);
/// Vertex set whose removal leaves a proper Helly circular-arc graph, within 6 * opt.
VertexSet phcag_approx6(const Graph& g);

/// Edge sets to branch on when destroying a PHCAG7 witness by edge
/// deletions; at least one of them lies in every solution.
std::vector<EdgeSet> edge_deletion_branches(const Graph& g, const Witness& w);

}  // namespace arcfix
