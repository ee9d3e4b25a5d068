#include "arcfix/consecutive_ones.hpp"

#include <algorithm>
#include <deque>

#include "arcfix/vertex_bits.hpp"

namespace arcfix {
namespace {

using Bits = VertexBits;
using Blocks = std::vector<Bits>;

bool overlap(const Bits& a, const Bits& b) {
  return a.intersects(b) && !a.subset_of(b) && !b.subset_of(a);
}

// Refines an ordered partition of `uni` so that s becomes a run. The set must
// overlap one already placed, which pins its position up to nothing.
bool add_set(Blocks& seq, Bits& uni, const Bits& s) {
  Bits fresh = s - uni;
  int i = -1, j = -1;
  for (int t = 0; t < static_cast<int>(seq.size()); ++t)
    if (seq[t].intersects(s)) {
      if (i == -1) i = t;
      j = t;
    }
  if (i == -1) return false;
  for (int t = i + 1; t < j; ++t)
    if (!seq[t].subset_of(s)) return false;
  const int last = static_cast<int>(seq.size()) - 1;
  const bool full_i = seq[i].subset_of(s);
  const bool full_j = seq[j].subset_of(s);

  Blocks out;
  auto copy = [&](int from, int to) {
    for (int t = from; t < to; ++t) out.push_back(seq[t]);
  };
  auto split = [&](int t, bool s_first) {
    Bits in = seq[t] & s, rest = seq[t] - s;
    if (rest.none()) {
      out.push_back(in);
    } else if (s_first) {
      out.push_back(in), out.push_back(rest);
    } else {
      out.push_back(rest), out.push_back(in);
    }
  };

  if (fresh.none()) {
    if (i == j) return false;
    copy(0, i);
    split(i, false);
    copy(i + 1, j);
    split(j, true);
    copy(j + 1, last + 1);
  } else {
    const bool right = j == last && (i == j || full_j);
    const bool left = i == 0 && (i == j || full_i) && !(i == j && j == last);
    if (right) {
      copy(0, i);
      split(i, false);
      copy(i + 1, j + 1);
      out.push_back(fresh);
    } else if (left) {
      out.push_back(fresh);
      copy(0, j);
      split(j, true);
      copy(j + 1, last + 1);
    } else {
      return false;
    }
  }
  seq = std::move(out);
  uni |= s;
  return true;
}

struct Component {
  Bits uni;
  Blocks blocks;
  std::vector<std::vector<int>> children;
};

void emit(const std::vector<Component>& comps, int c, Bits& used, std::vector<int>& order) {
  const auto& comp = comps[c];
  for (std::size_t b = 0; b < comp.blocks.size(); ++b) {
    for (int child : comp.children[b]) emit(comps, child, used, order);
    (comp.blocks[b] - used).for_each([&](int x) {
      order.push_back(x);
      used.set(x);
    });
  }
}

}  // namespace

bool is_consecutive(const std::vector<int>& order, const std::vector<int>& set, bool circular) {
  const int m = static_cast<int>(order.size());
  if (set.empty()) return true;
  std::vector<char> in(m, 0);
  std::vector<char> member(m, 0);
  for (int x : set) member[x] = 1;
  for (int p = 0; p < m; ++p) in[p] = member[order[p]];
  int starts = 0;
  for (int p = 0; p < m; ++p) {
    bool prev = p > 0 ? in[p - 1] : (circular ? in[m - 1] : false);
    if (in[p] && !prev) ++starts;
  }
  // A full circle has no start.
  return starts <= 1;
}

std::optional<std::vector<int>> consecutive_ones_order(int columns, const std::vector<std::vector<int>>& sets) {
  std::vector<Bits> family;
  for (const auto& s : sets) {
    Bits b(columns);
    for (int x : s) b.set(x);
    int c = b.count();
    if (c <= 1 || c == columns) continue;
    if (std::find(family.begin(), family.end(), b) == family.end()) family.push_back(std::move(b));
  }

  // Overlap components, each refined in BFS order.
  std::vector<Component> comps;
  std::vector<char> seen(family.size(), 0);
  for (std::size_t s0 = 0; s0 < family.size(); ++s0) {
    if (seen[s0]) continue;
    seen[s0] = 1;
    Component comp{family[s0], {family[s0]}, {}};
    std::deque<std::size_t> queue{s0};
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t b = 0; b < family.size(); ++b) {
        if (seen[b] || !overlap(family[a], family[b])) continue;
        seen[b] = 1;
        if (!add_set(comp.blocks, comp.uni, family[b])) return std::nullopt;
        queue.push_back(b);
      }
    }
    comps.push_back(std::move(comp));
  }

  std::vector<int> by_size(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) by_size[i] = static_cast<int>(i);
  std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
    int ca = comps[a].uni.count(), cb = comps[b].uni.count();
    if (ca != cb) return ca > cb;
    return comps[a].blocks.size() < comps[b].blocks.size();
  });

  // Nest each component inside the smallest placed block that contains it.
  std::vector<int> roots;
  for (auto& c : comps) c.children.resize(c.blocks.size());
  for (std::size_t idx = 0; idx < by_size.size(); ++idx) {
    int c = by_size[idx];
    int host = -1, host_block = -1;
    for (std::size_t p = 0; p < idx; ++p) {
      int d = by_size[p];
      for (std::size_t b = 0; b < comps[d].blocks.size(); ++b)
        if (comps[c].uni.subset_of(comps[d].blocks[b]) &&
            (host == -1 || comps[d].uni.count() <= comps[host].uni.count()))
          host = d, host_block = static_cast<int>(b);
    }
    if (host == -1) {
      roots.push_back(c);
    } else {
      comps[host].children[host_block].push_back(c);
    }
  }

  std::vector<int> order;
  Bits used(columns);
  for (int r : roots) emit(comps, r, used, order);
  used.flipped().for_each([&](int x) { order.push_back(x); });

  for (const auto& s : sets)
    if (!is_consecutive(order, s, false)) return std::nullopt;
  return order;
}

std::optional<std::vector<int>> circular_ones_order(int columns, const std::vector<std::vector<int>>& sets) {
  if (columns == 0) return std::vector<int>{};
  std::vector<std::vector<int>> flipped;
  for (const auto& s : sets) {
    if (std::find(s.begin(), s.end(), 0) == s.end()) {
      flipped.push_back(s);
      continue;
    }
    std::vector<char> member(columns, 0);
    for (int x : s) member[x] = 1;
    std::vector<int> rest;
    for (int x = 0; x < columns; ++x)
      if (!member[x]) rest.push_back(x);
    flipped.push_back(std::move(rest));
  }
  auto order = consecutive_ones_order(columns, flipped);
  if (!order) return std::nullopt;
  for (const auto& s : sets)
    if (!is_consecutive(*order, s, true)) return std::nullopt;
  return order;
}

}  // namespace arcfix
