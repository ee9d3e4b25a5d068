#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "arcfix/graph.hpp"

namespace arcfix {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads "n m" then m lines "u v" (u < v). Lines starting with '#' are skipped.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);

}  // namespace arcfix
