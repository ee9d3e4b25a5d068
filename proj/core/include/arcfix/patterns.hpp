#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arcfix/graph.hpp"

namespace arcfix {

/// Named forbidden induced subgraph, optionally complemented.
struct PatternKind {
  enum class Tag {
    Claw,
    C3Star,
    C4Star,
    CStar,  ///< hole of length param plus an isolated vertex
    Cycle,
    Wheel,
    Tent,
    Net,
    TentPlusIsolated,
    Prism,
    F1,
    F2,
    F3,
    F4,
  };

  Tag tag = Tag::Claw;
  int param = 0;
  bool complemented = false;

  static PatternKind claw() { return {Tag::Claw}; }
  static PatternKind c3_star() { return {Tag::C3Star}; }
  static PatternKind c4_star() { return {Tag::C4Star}; }
  static PatternKind c_star(int l) { return {Tag::CStar, l}; }
  static PatternKind cycle(int l) { return {Tag::Cycle, l}; }
  static PatternKind wheel(int l) { return {Tag::Wheel, l}; }
  static PatternKind tent() { return {Tag::Tent}; }
  static PatternKind net() { return {Tag::Net}; }
  static PatternKind tent_plus_isolated() { return {Tag::TentPlusIsolated}; }
  static PatternKind prism() { return {Tag::Prism}; }
  static PatternKind f(int i);
  static PatternKind complement_of(PatternKind k);

  int order() const;
  std::string name() const;
  /// Inverse of name(); throws std::invalid_argument.
  static PatternKind parse(const std::string& text);

  friend bool operator==(const PatternKind&, const PatternKind&) = default;
};

struct Witness {
  PatternKind kind;
  std::vector<Vertex> vertices;  ///< canonical numbering of the pattern
};

/// Canonical labelled copy of the pattern. Throws on a bad parameter.
Graph build(const PatternKind& kind);

/// True iff the vertices induce kind under the given ordering.
bool verify(const Graph& g, const Witness& w);

std::optional<Witness> find_induced(const Graph& g, const PatternKind& kind);
std::optional<Witness> find_any(const Graph& g, std::span<const PatternKind> kinds);

/// Some C*_l with l >= 4: a hole avoiding the closed neighbourhood of a vertex.
std::optional<Witness> find_c_star(const Graph& g);

/// Claw or net between a hole of length >= 5 and a vertex v with no
/// neighbour on it, found along a shortest path from v to the hole.
Witness refine_cl_star(const Graph& g, std::span<const Vertex> hole, Vertex v);

namespace lists {
/// Claw, C4*, tent, net, W4, W5, prism.
const std::vector<PatternKind>& phcag7();
/// Claw, net, tent, C4, C5, C6.
const std::vector<PatternKind>& pi_small();
/// Claw, W5, C4*, prism, net, S3*, complements of F1..F4.
const std::vector<PatternKind>& reduced_g();
/// F1, F2, F3, C3, C5, C6, C7.
const std::vector<PatternKind>& bp_small();
}  // namespace lists

}  // namespace arcfix
