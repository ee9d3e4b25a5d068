#include <gtest/gtest.h>

#include <random>

#include "arcfix/interval_base.hpp"
#include "arcfix/oracle.hpp"
#include "arcfix/representation.hpp"
#include "testkit.hpp"

using namespace arcfix;
using testkit::cycle;
using testkit::pattern;

namespace {

bool is_pi(const Graph& g) { return recognize_proper_interval(g).accepted; }

Graph without(const Graph& g, const VertexSet& drop) {
  Modification m;
  m.deleted_vertices = drop;
  return apply(g, m);
}

// Solver answer and certificate against the oracle for budgets 0..3.
void check_against_oracle(const Graph& g) {
  for (int k = 0; k <= 3; ++k) {
    auto vd = pivd(g, k);
    EXPECT_EQ(vd.answer, brute_edit(g, GraphClass::PI, {k, 0, 0}).has_value()) << "pivd k=" << k;
    if (vd.answer) {
      EXPECT_LE(vd.solution.cost(), k);
      EXPECT_TRUE(vd.solution.deleted_edges.empty() && vd.solution.added_edges.empty());
      EXPECT_TRUE(is_pi(apply(g, vd.solution)));
    }
    auto ed = pied(g, k);
    EXPECT_EQ(ed.answer, brute_edit(g, GraphClass::PI, {0, k, 0}).has_value()) << "pied k=" << k;
    if (ed.answer) {
      EXPECT_LE(ed.solution.cost(), k);
      EXPECT_TRUE(ed.solution.deleted_vertices.empty() && ed.solution.added_edges.empty());
      EXPECT_TRUE(is_pi(apply(g, ed.solution)));
    }
  }
  for (int k1 = 0; k1 <= 2; ++k1)
    for (int k2 = 0; k1 + k2 <= 3; ++k2) {
      auto mx = pi_mixed(g, {k1, k2});
      EXPECT_EQ(mx.answer, brute_edit(g, GraphClass::PI, {k1, k2, 0}).has_value()) << k1 << "," << k2;
      if (mx.answer) {
        EXPECT_LE(static_cast<int>(mx.solution.deleted_vertices.size()), k1);
        EXPECT_LE(static_cast<int>(mx.solution.deleted_edges.size()), k2);
        EXPECT_TRUE(is_pi(apply(g, mx.solution)));
      }
    }
}

int optimum_vd(const Graph& g) {
  for (int k = 0;; ++k)
    if (brute_edit(g, GraphClass::PI, {k, 0, 0})) return k;
}

}  // namespace

TEST(Pivd, Examples) {
  auto tent = pivd(pattern(PatternKind::tent()), 1);
  ASSERT_TRUE(tent.answer);
  EXPECT_EQ(tent.solution.deleted_vertices.size(), 1u);
  EXPECT_FALSE(pivd(pattern(PatternKind::tent()), 0).answer);

  auto w4 = pivd(pattern(PatternKind::wheel(4)), 1);
  ASSERT_TRUE(w4.answer);
  EXPECT_TRUE(is_pi(apply(pattern(PatternKind::wheel(4)), w4.solution)));

  // Two disjoint holes need two deletions.
  Graph two = testkit::unite(cycle(7), cycle(9));
  EXPECT_FALSE(pivd(two, 1).answer);
  EXPECT_TRUE(pivd(two, 2).answer);
  EXPECT_TRUE(pivd(testkit::path(9), 0).answer);
}

TEST(Pied, Examples) {
  EXPECT_TRUE(pied(cycle(12), 1).answer);
  EXPECT_FALSE(pied(cycle(12), 0).answer);
  // Dropping one claw edge leaves P3 plus an isolated vertex.
  EXPECT_TRUE(pied(pattern(PatternKind::claw()), 1).answer);
  EXPECT_FALSE(pied(pattern(PatternKind::claw()), 0).answer);
}

TEST(PiMixed, Examples) {
  Graph g = testkit::unite(pattern(PatternKind::claw()), cycle(8));
  EXPECT_TRUE(pi_mixed(g, {1, 1}).answer);
  EXPECT_TRUE(pi_mixed(g, {0, 2}).answer);
  EXPECT_FALSE(pi_mixed(g, {0, 1}).answer);
  EXPECT_FALSE(pi_mixed(g, {1, 0}).answer);
  EXPECT_TRUE(pi_mixed(g, {2, 0}).answer);
}

TEST(IntervalBase, AgreesWithOracleExhaustively) {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < testkit::mask_count(n); ++mask) {
      Graph g = testkit::from_mask(n, mask);
      check_against_oracle(g);
      if (HasFailure()) FAIL() << "n=" << n << " mask=" << mask;
    }
}

TEST(IntervalBase, AgreesWithOracleOnSevenVertices) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    Graph g = testkit::random_graph(7, 0.3 + 0.4 * (trial % 3) / 2.0, rng);
    check_against_oracle(g);
    if (HasFailure()) FAIL() << "trial " << trial;
  }
}

TEST(PiApprox6, WithinRatio) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 1500; ++trial) {
    Graph g = testkit::random_graph(5 + trial % 4, 0.5, rng);
    VertexSet x = pi_approx6(g);
    ASSERT_TRUE(is_pi(without(g, x)));
    EXPECT_LE(static_cast<int>(x.size()), 6 * optimum_vd(g));
  }
}

TEST(HoleCover, BreaksEveryHole) {
  Graph g = testkit::unite(cycle(9), testkit::unite(cycle(5), testkit::path(3)));
  VertexSet x = hole_cover(g);
  EXPECT_EQ(x.size(), 2u);
  EXPECT_TRUE(is_chordal(without(g, x)));
}
