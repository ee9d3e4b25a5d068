#include "arcfix/oracle.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

// Ground truth only: no recognizer or pattern matcher from the library is used
// here, the forbidden graphs are spelled out again below.

namespace arcfix {
namespace {

constexpr int kMaxN = 16;

struct Small {
  int n = 0;
  std::array<std::uint16_t, kMaxN> rows{};

  bool adj(int u, int v) const { return (rows[u] >> v) & 1U; }
  void link(int u, int v) {
    rows[u] |= static_cast<std::uint16_t>(1U << v);
    rows[v] |= static_cast<std::uint16_t>(1U << u);
  }
  void unlink(int u, int v) {
    rows[u] &= static_cast<std::uint16_t>(~(1U << v));
    rows[v] &= static_cast<std::uint16_t>(~(1U << u));
  }
  int degree(int v) const { return __builtin_popcount(rows[v]); }

  Small without(int x) const {
    Small s;
    s.n = n - 1;
    for (int u = 0, a = 0; u < n; ++u) {
      if (u == x) continue;
      for (int v = 0, b = 0; v < n; ++v) {
        if (v == x) continue;
        if (adj(u, v)) s.rows[a] |= static_cast<std::uint16_t>(1U << b);
        ++b;
      }
      ++a;
    }
    return s;
  }

  Small flipped() const {
    Small s;
    s.n = n;
    const std::uint16_t all = static_cast<std::uint16_t>((1U << n) - 1);
    for (int v = 0; v < n; ++v) s.rows[v] = static_cast<std::uint16_t>(~rows[v] & all & ~(1U << v));
    return s;
  }

  bool connected() const {
    if (n == 0) return true;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if ((frontier >> v) & 1U) next |= rows[v];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (1U << n) - 1;
  }
};

struct Key {
  std::uint64_t lo = 0, hi = 0;
  int n = 0;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    return std::hash<std::uint64_t>{}(k.lo * 0x9e3779b97f4a7c15ULL ^ k.hi ^ static_cast<std::uint64_t>(k.n) << 58);
  }
};

Key encode(const Small& g) {
  Key k;
  k.n = g.n;
  int bit = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.adj(i, j)) (bit < 64 ? k.lo : k.hi) |= std::uint64_t{1} << (bit & 63);
  return k;
}

using EdgeList = std::vector<std::pair<int, int>>;

Small from_edges(int n, const EdgeList& edges) {
  Small s;
  s.n = n;
  for (auto [u, v] : edges) s.link(u, v);
  return s;
}

EdgeList cycle_edges(int l) {
  EdgeList e;
  for (int i = 0; i < l; ++i) e.emplace_back(i, (i + 1) % l);
  return e;
}

EdgeList plus(EdgeList a, const EdgeList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const EdgeList kTent = {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}};
const EdgeList kNet = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}};

Small claw() { return from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }
Small tent() { return from_edges(6, kTent); }
Small net() { return from_edges(6, kNet); }
Small tent_star() { return from_edges(7, kTent); }
Small c4_star() { return from_edges(5, cycle_edges(4)); }
Small wheel(int l) {
  EdgeList e = cycle_edges(l);
  for (int i = 0; i < l; ++i) e.emplace_back(i, l);
  return from_edges(l + 1, e);
}
Small prism() { return from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }
Small f1() { return from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }
Small f2() { return from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {0, 3}, {2, 6}}); }
Small f3() { return from_edges(7, plus(cycle_edges(6), {{0, 3}, {0, 6}})); }
Small f4() { return from_edges(7, plus(cycle_edges(6), {{0, 3}, {0, 6}, {3, 6}})); }

bool is_cycle(const Small& h) {
  if (h.n < 3) return false;
  for (int v = 0; v < h.n; ++v)
    if (h.degree(v) != 2) return false;
  return h.connected();
}

bool is_cycle_plus_isolated(const Small& h) {
  int iso = -1;
  for (int v = 0; v < h.n; ++v)
    if (h.degree(v) == 0) {
      if (iso != -1) return false;
      iso = v;
    }
  return iso != -1 && is_cycle(h.without(iso));
}

// Hereditary family: forbidden graphs given as fixed graphs plus a predicate
// for the infinite families. free() is memoised on labelled graphs.
class Family {
 public:
  Family(std::vector<Small> fixed, std::function<bool(const Small&)> param) : param_(std::move(param)) {
    for (const auto& f : fixed) {
      std::vector<int> perm(f.n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        Small p;
        p.n = f.n;
        for (int u = 0; u < f.n; ++u)
          for (int v = u + 1; v < f.n; ++v)
            if (f.adj(u, v)) p.link(perm[u], perm[v]);
        fixed_.insert(encode(p));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  bool free(const Small& g) {
    Key k = encode(g);
    std::int8_t* slot = nullptr;
    if (g.n <= 7) {
      auto& table = flat_[g.n];
      if (table.empty()) table.assign(std::size_t{1} << (g.n * (g.n - 1) / 2), -1);
      slot = &table[k.lo];
      if (*slot != -1) return *slot;
    } else if (auto it = big_.find(k); it != big_.end()) {
      return it->second;
    }
    bool ok = !fixed_.contains(k) && !(param_ && param_(g));
    for (int v = 0; v < g.n && ok; ++v) ok = free(g.without(v));
    if (slot) {
      *slot = ok ? 1 : 0;
    } else {
      big_.emplace(k, ok);
    }
    return ok;
  }

 private:
  std::unordered_set<Key, KeyHash> fixed_;
  std::function<bool(const Small&)> param_;
  std::array<std::vector<std::int8_t>, 8> flat_;
  std::unordered_map<Key, bool, KeyHash> big_;
};

Family& pi_family() {
  static Family f({claw(), tent(), net()}, [](const Small& h) { return h.n >= 4 && is_cycle(h); });
  return f;
}

Family& phcag7_family() {
  static Family f({claw(), c4_star(), tent(), net(), wheel(4), wheel(5), prism()}, nullptr);
  return f;
}

Family& pca_family() {
  static Family f({tent_star(), net(), f1().flipped(), f2().flipped(), f3().flipped(), f4().flipped()},
                  [](const Small& h) {
                    if (h.n >= 5 && is_cycle_plus_isolated(h)) return true;
                    Small c = h.flipped();
                    if (h.n >= 6 && h.n % 2 == 0 && is_cycle(c)) return true;
                    return h.n >= 4 && (h.n - 1) % 2 == 1 && is_cycle_plus_isolated(c);
                  });
  return f;
}

Family& bp_family() {
  static Family f({f1(), f2(), f3()}, [](const Small& h) {
    return is_cycle(h) && (h.n % 2 == 1 || h.n >= 6);
  });
  return f;
}

bool member_small(const Small& g, GraphClass cls) {
  switch (cls) {
    case GraphClass::PI: return pi_family().free(g);
    case GraphClass::PHCAG: return g.connected() ? phcag7_family().free(g) : pi_family().free(g);
    case GraphClass::PCA: return pca_family().free(g);
    case GraphClass::BP: return bp_family().free(g);
  }
  return false;
}

Small to_small(const Graph& g) {
  Small s;
  s.n = g.order();
  for (const auto& e : g.edges()) s.link(e.u, e.v);
  return s;
}

// Calls f on each r-subset of [0, m) in lexicographic order until f is true.
bool for_each_combination(int m, int r, const std::function<bool(const std::vector<int>&)>& f) {
  if (r > m) return false;
  std::vector<int> c(r);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    if (f(c)) return true;
    int i = r - 1;
    while (i >= 0 && c[i] == m - r + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

std::string to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::PI: return "pi";
    case GraphClass::PHCAG: return "phcag";
    case GraphClass::PCA: return "pca";
    case GraphClass::BP: return "bp";
  }
  return "?";
}

GraphClass parse_class(const std::string& text) {
  std::string s = text;
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "pi") return GraphClass::PI;
  if (s == "phcag") return GraphClass::PHCAG;
  if (s == "pca") return GraphClass::PCA;
  if (s == "bp") return GraphClass::BP;
  throw std::invalid_argument("unknown graph class: " + text);
}

OracleCaps OracleCaps::from_env() {
  OracleCaps caps;
  const char* env = std::getenv("ARCFIX_ORACLE_CAP");
  if (!env || !*env) return caps;
  std::stringstream in(env);
  std::string part;
  int* fields[] = {&caps.member_n, &caps.edit_n, &caps.edit_budget};
  for (int i = 0; i < 3 && std::getline(in, part, ','); ++i) *fields[i] = std::stoi(part);
  return caps;
}

bool member_oracle(const Graph& g, GraphClass cls, const OracleCaps& caps) {
  if (g.order() > caps.member_n || g.order() > kMaxN)
    throw OracleCapExceeded("membership oracle limited to n <= " + std::to_string(std::min(caps.member_n, kMaxN)));
  return member_small(to_small(g), cls);
}

std::optional<Modification> brute_edit(const Graph& g, GraphClass cls, const EditBudget& budget,
                                       const OracleCaps& caps) {
  const int n = g.order();
  if (n > caps.edit_n || n > kMaxN || budget.total() > caps.edit_budget)
    throw OracleCapExceeded("edit oracle limited to n <= " + std::to_string(caps.edit_n) + " and budget <= " +
                            std::to_string(caps.edit_budget));
  const Small base = to_small(g);
  std::optional<Modification> found;

  for (int t = 0; t <= budget.total() && !found; ++t) {
    for (int a = 0; a <= std::min(budget.vertex_deletions, t) && !found; ++a) {
      for (int b = 0; b <= std::min(budget.edge_deletions, t - a) && !found; ++b) {
        const int c = t - a - b;
        if (c > budget.edge_additions) continue;
        for_each_combination(n, a, [&](const std::vector<int>& drop) {
          std::vector<int> keep;
          for (int v = 0, d = 0; v < n; ++v) {
            if (d < a && drop[d] == v) {
              ++d;
              continue;
            }
            keep.push_back(v);
          }
          Small sub;
          sub.n = static_cast<int>(keep.size());
          std::vector<std::pair<int, int>> present, absent;
          for (int i = 0; i < sub.n; ++i)
            for (int j = i + 1; j < sub.n; ++j) {
              if (base.adj(keep[i], keep[j])) {
                sub.link(i, j);
                present.emplace_back(i, j);
              } else {
                absent.emplace_back(i, j);
              }
            }
          return for_each_combination(static_cast<int>(present.size()), b, [&](const std::vector<int>& del) {
            Small mid = sub;
            for (int i : del) mid.unlink(present[i].first, present[i].second);
            return for_each_combination(static_cast<int>(absent.size()), c, [&](const std::vector<int>& add) {
              Small out = mid;
              for (int i : add) out.link(absent[i].first, absent[i].second);
              if (!member_small(out, cls)) return false;
              Modification m;
              for (int v : drop) m.deleted_vertices.push_back(v);
              for (int i : del) m.deleted_edges.emplace_back(keep[present[i].first], keep[present[i].second]);
              for (int i : add) m.added_edges.emplace_back(keep[absent[i].first], keep[absent[i].second]);
              found = std::move(m);
              return true;
            });
          });
        });
      }
    }
  }
  return found;
}

}  // namespace arcfix
