#pragma once

#include <cstdint>
#include <string>

#include "arcfix/graph.hpp"

namespace arcfix {

/// Named graph: any pattern name accepted by PatternKind::parse, or one of
/// path:n, complete:n, cocktail:p.
Graph named_graph(const std::string& name);

struct Planted {
  Graph graph;
  VertexSet planted;  ///< vertices or endpoints touched by the planted edits
  EdgeSet removed;    ///< planted-completion only: edges taken out of the base
};

/// Equal-length arcs on a circle (a proper Helly circular-arc graph with a
/// hole) on n - k vertices, plus k vertices with random neighbourhoods.
Planted planted_phcag(int n, int k, std::uint64_t seed);
/// Equal-length arcs long enough to break the Helly property, plus k random vertices.
Planted planted_pca(int n, int k, std::uint64_t seed);
/// planted_phcag base with k of its edges removed.
Planted planted_completion(int n, int k, std::uint64_t seed);

/// Dispatch on planted-phcag, planted-pca, planted-completion.
Planted planted(const std::string& kind, int n, int k, std::uint64_t seed);

}  // namespace arcfix
