#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "arcfix/graph.hpp"
#include "arcfix/solve_result.hpp"

namespace arcfix {

enum class GraphClass { PI, PHCAG, PCA, BP };

std::string to_string(GraphClass cls);
/// Accepts pi, phcag, pca, bp (any case). Throws std::invalid_argument.
GraphClass parse_class(const std::string& text);

struct OracleCaps {
  int member_n = 12;
  int edit_n = 9;
  int edit_budget = 4;

  /// Defaults, with ARCFIX_ORACLE_CAP=member[,edit_n[,budget]] applied.
  static OracleCaps from_env();
};

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Membership by exhaustive forbidden induced subgraph search.
bool member_oracle(const Graph& g, GraphClass cls, const OracleCaps& caps = OracleCaps::from_env());

struct EditBudget {
  int vertex_deletions = 0;
  int edge_deletions = 0;
  int edge_additions = 0;

  int total() const { return vertex_deletions + edge_deletions + edge_additions; }
};

/// Minimum-cost modification within the budget reaching cls, or none.
std::optional<Modification> brute_edit(const Graph& g, GraphClass cls, const EditBudget& budget,
                                       const OracleCaps& caps = OracleCaps::from_env());

}  // namespace arcfix
