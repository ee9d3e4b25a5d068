#include <algorithm>
#include <stdexcept>

#include "arcfix/representation.hpp"

namespace arcfix {
namespace {

Witness hole_witness(const Hole& h) { return {PatternKind::cycle(static_cast<int>(h.size())), h}; }

}  // namespace

Recognition recognize_proper_interval(const Graph& g) {
  Recognition r;
  if (is_chordal(g) && !find_induced(g, PatternKind::claw())) {
    if (auto path = clique_path(g)) {
      r.accepted = true;
      r.rep = proper_arcs_from_circle(*path);
      r.circle = std::move(path);
      return r;
    }
  }
  const std::vector<PatternKind> small = {PatternKind::claw(), PatternKind::tent(), PatternKind::net()};
  if (auto w = find_any(g, small)) {
    r.witness = std::move(w);
  } else if (auto h = find_hole(g)) {
    r.witness = hole_witness(*h);
  } else {
    throw std::logic_error("recognize_proper_interval: rejected without a witness");
  }
  return r;
}

Recognition recognize_phcag(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {true, CliqueCircle{}, ArcRep{}, std::nullopt};

  if (!is_connected(g)) {
    Recognition r = recognize_proper_interval(g);
    if (r.accepted || r.witness->kind.tag != PatternKind::Tag::Cycle) return r;
    // A hole plus a vertex from another component.
    const auto& hole = r.witness->vertices;
    for (const auto& comp : components(g)) {
      if (std::find(comp.begin(), comp.end(), hole[0]) != comp.end()) continue;
      int len = static_cast<int>(hole.size());
      Witness w{len == 4 ? PatternKind::c4_star() : PatternKind::c_star(len), hole};
      w.vertices.push_back(comp[0]);
      r.witness = std::move(w);
      break;
    }
    return r;
  }

  const bool has_hole = !is_chordal(g);
  auto circle = has_hole ? clique_circle(g) : clique_path(g);
  if (circle) {
    ArcRep rep = proper_arcs_from_circle(*circle);
    RepCheck check = validate_rep(g, rep);
    bool cover_ok = !has_hole || !check.min_cover || *check.min_cover >= 4;
    if (check.is_rep && check.is_proper && check.is_helly && cover_ok && !find_induced(g, PatternKind::claw()))
      return {true, std::move(circle), std::move(rep), std::nullopt};
  }
  Recognition r;
  r.witness = find_any(g, lists::phcag7());
  if (!r.witness) throw std::logic_error("recognize_phcag: PHCAG7-free connected graph failed validation");
  return r;
}

std::pair<int, VertexSet> min_point_load(const CliqueCircle& c) {
  const int l = c.length();
  if (l == 0) return {0, {}};
  int best = -1;
  VertexSet best_set;
  for (int i = 0; i < l; ++i) {
    VertexSet shared;
    const auto& a = c.cliques[i];
    const auto& b = c.cliques[(i + 1) % l];
    // A clique path leaves the wrap-around gap empty.
    if (c.circular || i + 1 < l)
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
    if (best == -1 || shared.size() < best_set.size()) {
      best = i;
      best_set = std::move(shared);
    }
  }
  return {best, best_set};
}

}  // namespace arcfix
