#include "arcfix/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace arcfix {
namespace {

// Next line that is neither blank nor a comment.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) fail(lineno, "missing header");
  long long n = -1, m = -1;
  {
    std::istringstream hdr(line);
    std::string extra;
    if (!(hdr >> n >> m) || (hdr >> extra) || n < 0 || m < 0) fail(lineno, "expected 'n m'");
  }
  Graph g(static_cast<int>(n));
  std::set<std::pair<long long, long long>> seen;
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line, lineno)) fail(lineno, "expected " + std::to_string(m) + " edges");
    std::istringstream row(line);
    long long u, v;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) fail(lineno, "expected 'u v'");
    if (u < 0 || v >= n || u >= v) fail(lineno, "need 0 <= u < v < n");
    if (!seen.emplace(u, v).second) fail(lineno, "duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line(in, line, lineno)) fail(lineno, "trailing content");
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_graph(in);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace arcfix
