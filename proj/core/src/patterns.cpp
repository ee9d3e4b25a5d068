#include "arcfix/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <stdexcept>

namespace arcfix {

PatternKind PatternKind::f(int i) {
  switch (i) {
    case 1: return {Tag::F1};
    case 2: return {Tag::F2};
    case 3: return {Tag::F3};
    case 4: return {Tag::F4};
    default: throw std::invalid_argument("F index must be 1..4");
  }
}

PatternKind PatternKind::complement_of(PatternKind k) {
  if (k.complemented) throw std::invalid_argument("nested complement");
  k.complemented = true;
  return k;
}

int PatternKind::order() const {
  switch (tag) {
    case Tag::Claw:
    case Tag::C3Star: return 4;
    case Tag::C4Star: return 5;
    case Tag::CStar: return param + 1;
    case Tag::Cycle: return param;
    case Tag::Wheel: return param + 1;
    case Tag::Tent:
    case Tag::Net:
    case Tag::Prism: return 6;
    case Tag::TentPlusIsolated:
    case Tag::F1:
    case Tag::F2:
    case Tag::F3:
    case Tag::F4: return 7;
  }
  return 0;
}

namespace {

const char* base_name(PatternKind::Tag t) {
  using T = PatternKind::Tag;
  switch (t) {
    case T::Claw: return "Claw";
    case T::C3Star: return "C3Star";
    case T::C4Star: return "C4Star";
    case T::CStar: return "CStar";
    case T::Cycle: return "Cycle";
    case T::Wheel: return "Wheel";
    case T::Tent: return "Tent";
    case T::Net: return "Net";
    case T::TentPlusIsolated: return "TentPlusIsolated";
    case T::Prism: return "Prism";
    case T::F1: return "F1";
    case T::F2: return "F2";
    case T::F3: return "F3";
    case T::F4: return "F4";
  }
  return "?";
}

bool parametric(PatternKind::Tag t) {
  using T = PatternKind::Tag;
  return t == T::CStar || t == T::Cycle || t == T::Wheel;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::string PatternKind::name() const {
  std::string s = base_name(tag);
  if (parametric(tag)) s += "(" + std::to_string(param) + ")";
  return complemented ? "ComplementOf(" + s + ")" : s;
}

PatternKind PatternKind::parse(const std::string& text) {
  std::string s = lower(text);
  bool comp = false;
  if (s.rfind("complementof(", 0) == 0 && s.back() == ')') {
    s = s.substr(13, s.size() - 14);
    comp = true;
  } else if (s.rfind("co-", 0) == 0) {
    s = s.substr(3);
    comp = true;
  }
  std::string base = s;
  int param = 0;
  auto cut = s.find_first_of(":(");
  if (cut != std::string::npos) {
    base = s.substr(0, cut);
    std::string num = s.substr(cut + 1);
    if (!num.empty() && num.back() == ')') num.pop_back();
    try {
      std::size_t used = 0;
      param = std::stoi(num, &used);
      if (used != num.size()) throw std::invalid_argument(num);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad pattern parameter: " + text);
    }
  }
  PatternKind k;
  bool found = false;
  for (int t = 0; t <= static_cast<int>(Tag::F4); ++t) {
    auto tag = static_cast<Tag>(t);
    if (lower(base_name(tag)) == base) {
      k.tag = tag;
      found = true;
    }
  }
  if (base == "s3" || base == "s3*" || base == "s3star") {
    k.tag = base == "s3" ? Tag::Tent : Tag::TentPlusIsolated;
    found = true;
  }
  if (!found) throw std::invalid_argument("unknown pattern: " + text);
  if (parametric(k.tag) != (cut != std::string::npos)) throw std::invalid_argument("bad pattern parameter: " + text);
  k.param = param;
  k.complemented = comp;
  build(k);  // validates the parameter
  return k;
}

Graph build(const PatternKind& kind) {
  using T = PatternKind::Tag;
  const int l = kind.param;
  if (kind.tag == T::Cycle && l < 3) throw std::invalid_argument("cycle length must be >= 3");
  if ((kind.tag == T::CStar || kind.tag == T::Wheel) && l < 4) throw std::invalid_argument("parameter must be >= 4");
  Graph g(kind.order());
  auto add_cycle = [&](int len) {
    for (int i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
  };
  auto add_tent = [&] {
    add_cycle(3);
    g.add_edge(3, 0), g.add_edge(3, 1);
    g.add_edge(4, 1), g.add_edge(4, 2);
    g.add_edge(5, 2), g.add_edge(5, 0);
  };
  switch (kind.tag) {
    case T::Claw: g.add_edge(0, 1), g.add_edge(0, 2), g.add_edge(0, 3); break;
    case T::C3Star: add_cycle(3); break;
    case T::C4Star: add_cycle(4); break;
    case T::CStar:
    case T::Cycle: add_cycle(l); break;
    case T::Wheel:
      add_cycle(l);
      for (int i = 0; i < l; ++i) g.add_edge(i, l);
      break;
    case T::Tent:
    case T::TentPlusIsolated: add_tent(); break;
    case T::Net:
      add_cycle(3);
      g.add_edge(0, 3), g.add_edge(1, 4), g.add_edge(2, 5);
      break;
    case T::Prism:
      add_cycle(3);
      g.add_edge(3, 4), g.add_edge(4, 5), g.add_edge(3, 5);
      g.add_edge(0, 3), g.add_edge(1, 4), g.add_edge(2, 5);
      break;
    case T::F1:
      g.add_edge(0, 1), g.add_edge(1, 2), g.add_edge(0, 3);
      g.add_edge(3, 4), g.add_edge(0, 5), g.add_edge(5, 6);
      break;
    case T::F2:
      g.add_edge(0, 1), g.add_edge(1, 2), g.add_edge(2, 3), g.add_edge(3, 4);
      g.add_edge(0, 5), g.add_edge(0, 3), g.add_edge(2, 6);
      break;
    case T::F3:
      add_cycle(6);
      g.add_edge(0, 3), g.add_edge(6, 0);
      break;
    case T::F4:
      add_cycle(6);
      g.add_edge(0, 3), g.add_edge(6, 0), g.add_edge(6, 3);
      break;
  }
  return kind.complemented ? complement(g) : g;
}

bool verify(const Graph& g, const Witness& w) {
  Graph p = build(w.kind);
  if (static_cast<int>(w.vertices.size()) != p.order()) return false;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (w.vertices[i] < 0 || w.vertices[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < w.vertices.size(); ++j) {
      if (w.vertices[i] == w.vertices[j]) return false;
      if (g.adjacent(w.vertices[i], w.vertices[j]) != p.adjacent(static_cast<int>(i), static_cast<int>(j)))
        return false;
    }
  }
  return true;
}

namespace {

class Matcher {
 public:
  explicit Matcher(const Graph& g) : g_(g) {
    non_.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) non_.push_back(g.closed_neighbors(v).flipped());
  }

  std::optional<Witness> find(const PatternKind& kind) {
    if (kind.order() > g_.order()) return std::nullopt;
    kind_ = kind;
    p_ = build(kind);
    using T = PatternKind::Tag;
    ring_ = kind.tag == T::Cycle || kind.tag == T::CStar || kind.tag == T::Wheel ? kind.param : 0;
    if (kind.complemented) ring_ = 0;
    map_.assign(p_.order(), -1);
    if (!extend(0)) return std::nullopt;
    return Witness{kind, map_};
  }

 private:
  bool extend(int i) {
    const int k = p_.order();
    if (i == k) return true;
    VertexBits cand = g_.all();
    for (int j = 0; j < i; ++j) cand &= p_.adjacent(i, j) ? g_.neighbors(map_[j]) : non_[map_[j]];
    const int need = p_.degree(i);
    // Symmetry break on the rim: first rim vertex is the smallest, and the
    // second is smaller than the last.
    int floor = 0;
    if (ring_ && i > 0 && i < ring_) floor = map_[0] + 1;
    if (ring_ && i == ring_ - 1 && ring_ > 2) floor = std::max(floor, map_[1] + 1);
    for (int v = cand.next(floor); v != -1; v = cand.next(v + 1)) {
      if (g_.degree(v) < need) continue;
      map_[i] = v;
      if (extend(i + 1)) return true;
    }
    map_[i] = -1;
    return false;
  }

  const Graph& g_;
  std::vector<VertexBits> non_;
  PatternKind kind_;
  Graph p_;
  int ring_ = 0;
  std::vector<Vertex> map_;
};

}  // namespace

std::optional<Witness> find_induced(const Graph& g, const PatternKind& kind) {
  Matcher m(g);
  return m.find(kind);
}

std::optional<Witness> find_any(const Graph& g, std::span<const PatternKind> kinds) {
  Matcher m(g);
  for (const auto& k : kinds)
    if (auto w = m.find(k)) return w;
  return std::nullopt;
}

std::optional<Witness> find_c_star(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    auto sub = induced(g, g.closed_neighbors(v).flipped());
    auto hole = find_hole(sub.graph);
    if (!hole) continue;
    Witness w{PatternKind::c_star(static_cast<int>(hole->size())), {}};
    for (auto x : *hole) w.vertices.push_back(sub.original[x]);
    w.vertices.push_back(v);
    return w;
  }
  return std::nullopt;
}

Witness refine_cl_star(const Graph& g, std::span<const Vertex> hole, Vertex v) {
  const int len = static_cast<int>(hole.size());
  if (len < 5 || !is_hole(g, hole)) throw std::invalid_argument("refine_cl_star: need a hole of length >= 5");
  VertexBits on_hole(g.order());
  for (auto h : hole) on_hole.set(h);
  if (on_hole.test(v) || g.neighbors(v).intersects(on_hole))
    throw std::invalid_argument("refine_cl_star: vertex touches the hole");

  // BFS until reaching a vertex y with a neighbour on the hole.
  std::vector<int> parent(g.order(), -2);
  parent[v] = -1;
  std::deque<Vertex> queue{v};
  Vertex y = -1;
  while (!queue.empty() && y == -1) {
    Vertex u = queue.front();
    queue.pop_front();
    for (int w = g.neighbors(u).first(); w != -1; w = g.neighbors(u).next(w + 1)) {
      if (parent[w] != -2 || on_hole.test(w)) continue;
      parent[w] = u;
      if (g.neighbors(w).intersects(on_hole)) {
        y = w;
        break;
      }
      queue.push_back(w);
    }
  }
  if (y == -1) throw std::invalid_argument("refine_cl_star: vertex not connected to the hole");
  const Vertex x = parent[y];

  std::vector<int> idx;
  for (int i = 0; i < len; ++i)
    if (g.adjacent(y, hole[i])) idx.push_back(i);
  auto at = [&](int i) { return hole[((i % len) + len) % len]; };

  if (idx.size() == 1) {
    int i = idx[0];
    return {PatternKind::claw(), {at(i), y, at(i - 1), at(i + 1)}};
  }
  if (idx.size() == 2 && (idx[1] == idx[0] + 1 || (idx[0] == 0 && idx[1] == len - 1))) {
    int i = idx[1] == idx[0] + 1 ? idx[0] : len - 1;
    return {PatternKind::net(), {y, at(i), at(i + 1), x, at(i - 1), at(i + 2)}};
  }
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (!g.adjacent(hole[idx[a]], hole[idx[b]])) return {PatternKind::claw(), {y, x, hole[idx[a]], hole[idx[b]]}};
  throw std::logic_error("refine_cl_star: no claw or net found");
}

namespace lists {

const std::vector<PatternKind>& phcag7() {
  static const std::vector<PatternKind> l = {
      PatternKind::claw(),     PatternKind::c4_star(),  PatternKind::tent(),  PatternKind::net(),
      PatternKind::wheel(4),   PatternKind::wheel(5),   PatternKind::prism(),
  };
  return l;
}

const std::vector<PatternKind>& pi_small() {
  static const std::vector<PatternKind> l = {
      PatternKind::claw(),     PatternKind::net(),      PatternKind::tent(),
      PatternKind::cycle(4),   PatternKind::cycle(5),   PatternKind::cycle(6),
  };
  return l;
}

const std::vector<PatternKind>& reduced_g() {
  static const std::vector<PatternKind> l = {
      PatternKind::claw(),
      PatternKind::wheel(5),
      PatternKind::c4_star(),
      PatternKind::prism(),
      PatternKind::net(),
      PatternKind::tent_plus_isolated(),
      PatternKind::complement_of(PatternKind::f(1)),
      PatternKind::complement_of(PatternKind::f(2)),
      PatternKind::complement_of(PatternKind::f(3)),
      PatternKind::complement_of(PatternKind::f(4)),
  };
  return l;
}

const std::vector<PatternKind>& bp_small() {
  static const std::vector<PatternKind> l = {
      PatternKind::f(1),     PatternKind::f(2),     PatternKind::f(3),     PatternKind::cycle(3),
      PatternKind::cycle(5), PatternKind::cycle(6), PatternKind::cycle(7),
  };
  return l;
}

}  // namespace lists

}  // namespace arcfix
