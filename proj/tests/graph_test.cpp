#include <gtest/gtest.h>

#include <set>

#include "arcfix/graph.hpp"
#include "testkit.hpp"

using namespace arcfix;
using testkit::cycle;
using testkit::pattern;

namespace {

// Consecutive vertices adjacent, every other pair not.
bool induced_cycle(const Graph& g, const std::vector<Vertex>& c) {
  const int l = static_cast<int>(c.size());
  if (std::set<Vertex>(c.begin(), c.end()).size() != c.size()) return false;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      bool next = j == i + 1 || (i == 0 && j == l - 1);
      if (g.adjacent(c[i], c[j]) != next) return false;
    }
  return true;
}

}  // namespace

TEST(Complement, Examples) {
  EXPECT_EQ(complement(cycle(5)).size(), 5);
  EXPECT_TRUE(induced_cycle(complement(cycle(5)), {0, 2, 4, 1, 3}));

  // The isolated vertex 3 becomes the centre.
  Graph claw = complement(pattern(PatternKind::c3_star()));
  EXPECT_TRUE(verify(claw, {PatternKind::claw(), {3, 0, 1, 2}}));

  Graph f2 = pattern(PatternKind::f(2));
  EXPECT_EQ(complement(complement(f2)), f2);
}

TEST(Complement, InvolutionAndConnectivity) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 500; ++it) {
    Graph g = testkit::random_graph(2 + it % 12, 0.15 + (it % 7) * 0.1, rng);
    ASSERT_EQ(complement(complement(g)), g);
    ASSERT_TRUE(is_connected(g) || is_connected(complement(g)));
  }
}

TEST(Components, Examples) {
  auto c4s = components(pattern(PatternKind::c4_star()));
  ASSERT_EQ(c4s.size(), 2U);
  std::multiset<std::size_t> sizes = {c4s[0].size(), c4s[1].size()};
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 4}));

  EXPECT_EQ(components(cycle(7)).size(), 1U);
  auto two = components(testkit::unite(pattern(PatternKind::tent()), pattern(PatternKind::net())));
  ASSERT_EQ(two.size(), 2U);
  EXPECT_EQ(two[0].size(), 6U);
  EXPECT_EQ(two[1].size(), 6U);
}

TEST(Bipartite, Examples) {
  auto c6 = is_bipartite(cycle(6));
  ASSERT_TRUE(c6.bipartite);
  for (const auto& e : cycle(6).edges()) EXPECT_NE(c6.color[e.u], c6.color[e.v]);

  auto c5 = is_bipartite(cycle(5));
  ASSERT_FALSE(c5.bipartite);
  EXPECT_EQ(c5.odd_cycle.size(), 5U);

  Graph prism = pattern(PatternKind::prism());
  auto p = is_bipartite(prism);
  ASSERT_FALSE(p.bipartite);
  EXPECT_EQ(p.odd_cycle.size(), 3U);
  EXPECT_TRUE(induced_cycle(prism, p.odd_cycle));
}

TEST(FindHole, Examples) {
  auto c7 = find_hole(cycle(7));
  ASSERT_TRUE(c7);
  EXPECT_EQ(c7->size(), 7U);
  EXPECT_FALSE(find_hole(pattern(PatternKind::tent())));

  Graph w4 = pattern(PatternKind::wheel(4));
  auto rim = find_hole(w4);
  ASSERT_TRUE(rim);
  EXPECT_EQ(std::set<Vertex>(rim->begin(), rim->end()), (std::set<Vertex>{0, 1, 2, 3}));
}

TEST(FindHole, AgreesWithSearchOrdering) {
  for (int n = 1; n <= 7; ++n)
    for (std::uint64_t mask = 0; mask < testkit::mask_count(n); ++mask) {
      Graph g = testkit::from_mask(n, mask);
      bool chordal = is_perfect_elimination(g, mcs_order(g));
      auto hole = find_hole(g);
      ASSERT_EQ(chordal, !hole) << "n " << n << " mask " << mask;
      if (hole) ASSERT_TRUE(hole->size() >= 4 && induced_cycle(g, *hole)) << "mask " << mask;
    }
}

TEST(Witnesses, TypeInvariants) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 2000; ++it) {
    Graph g = testkit::random_graph(4 + it % 9, 0.3, rng);
    auto bc = is_bipartite(g);
    if (bc.bipartite) {
      for (const auto& e : g.edges()) ASSERT_NE(bc.color[e.u], bc.color[e.v]);
    } else {
      ASSERT_EQ(bc.odd_cycle.size() % 2, 1U);
      ASSERT_TRUE(induced_cycle(g, bc.odd_cycle));
    }
    if (auto h = find_long_hole(g)) ASSERT_TRUE(h->size() >= 5 && induced_cycle(g, *h));

    std::vector<int> seen(g.order(), 0);
    for (const auto& c : components(g)) {
      auto sub = induced(g, c);
      ASSERT_TRUE(is_connected(sub.graph));
      for (auto v : c) {
        ++seen[v];
        for (int u = 0; u < g.order(); ++u)
          if (g.adjacent(u, v)) ASSERT_TRUE(std::find(c.begin(), c.end(), u) != c.end());
      }
    }
    for (int s : seen) ASSERT_EQ(s, 1);
  }
}
