#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "dray/spanning_tree.hpp"
#include "oracles.hpp"

using namespace dray;

namespace {

WindowedGraph wired_path(int n) {
  // A piece of Z: every vertex has ambient degree 2.
  return WindowedGraph(oracle::path_graph(n), std::vector<int>(static_cast<std::size_t>(n), 2), 0);
}

void expect_spanning_tree(const SpanningTreeWithEnds& t) {
  const int total = static_cast<int>(t.window_size()) + t.end_count();
  EXPECT_EQ(t.edges().size(), static_cast<std::size_t>(total - 1));
  // Every vertex reaches ∂1 by parent steps in < total steps.
  for (int x = 0; x < total; ++x) {
    int y = x, steps = 0;
    while (t.parent(y) != kNoParent && steps < total) {
      y = t.parent(y);
      ++steps;
    }
    EXPECT_EQ(y, t.end_vertex(0));
  }
}

}  // namespace

TEST(WiredUst, SingleVertexIsForced) {
  FiniteGraph g(AbelianGroup::lattice(1), {GroupElement{0}});
  const WindowedGraph w(g, {2}, 0);
  Rng rng(1);
  const auto t = wilson_wired_ust(w, rng);
  EXPECT_EQ(t.parent(0), t.end_vertex(0));
  EXPECT_EQ(t.end_count(), 1);
}

// Each vertex of the 2-vertex window has one outside edge, so the wired graph
// is a triangle with three spanning trees of equal weight.
TEST(WiredUst, TwoVertexPathIsUniformOverWiredTrees) {
  const auto w = wired_path(2);
  EXPECT_EQ(oracle::spanning_tree_count(3, {{0, 1}, {0, 2}, {1, 2}}), 3);
  constexpr int kSamples = 10000;
  std::map<std::pair<int, int>, int> counts;
  Rng rng(2024);
  for (int i = 0; i < kSamples; ++i) {
    const auto t = wilson_wired_ust(w, rng);
    counts[{t.parent(0), t.parent(1)}]++;
  }
  ASSERT_EQ(counts.size(), 3u);
  const double p = 1.0 / 3.0;
  const double tol = 4 * std::sqrt(p * (1 - p) / kSamples);
  for (const auto& [key, c] : counts) EXPECT_NEAR(c / double(kSamples), p, tol);
}

TEST(WiredUst, EdgeMarginalsMatchEffectiveResistance) {
  const auto w = build_grid_window(2, 1, 0);
  const auto marg = oracle::wired_marginals(w);
  constexpr int kSamples = 20000;
  const int n = static_cast<int>(w.size());
  std::vector<std::vector<int>> hits(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
  Rng rng(77);
  for (int i = 0; i < kSamples; ++i) {
    const auto t = wilson_wired_ust(w, rng);
    for (int v = 0; v < n; ++v) hits[static_cast<std::size_t>(v)][static_cast<std::size_t>(t.parent(v))]++;
  }
  for (int v = 0; v < n; ++v) {
    const double p_end = marg.to_end(v, w.outside_degree(v));
    const double got_end = hits[static_cast<std::size_t>(v)][static_cast<std::size_t>(n)] / double(kSamples);
    EXPECT_NEAR(got_end, p_end, 4 * std::sqrt(p_end * (1 - p_end) / kSamples) + 1e-9);
    for (int u : w.graph().neighbours(v)) {
      if (u < v) continue;
      const double p = marg.edge(u, v);
      const double got = (hits[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] +
                          hits[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) /
                         double(kSamples);
      EXPECT_NEAR(got, p, 4 * std::sqrt(p * (1 - p) / kSamples)) << v << "-" << u;
    }
  }
}

TEST(WiredUst, ThreeByThreeSpansAndHasOneEscape) {
  const auto w = build_grid_window(2, 1, 0);
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto t = wilson_wired_ust(w, rng);
    expect_spanning_tree(t);
    for (int v = 0; v < 9; ++v) EXPECT_EQ(t.infinite_neighbours(v).size(), 1u);
    EXPECT_TRUE(trunk_double_ray(t).empty());
  }
}

TEST(WiredUst, DisconnectedWindowRejected) {
  const auto g = oracle::graph_on_line(4, {{0, 1}, {2, 3}});
  const WindowedGraph w(g, {2, 2, 2, 2}, 0);
  Rng rng(1);
  EXPECT_THROW(wilson_wired_ust(w, rng), StructureError);
}

TEST(TwoEnded, LineIsForced) {
  const auto w = build_grid_window(1, 4, 0);
  Rng rng(9);
  const auto t = two_ended_tree(w, 0, rng);
  EXPECT_EQ(t.end_count(), 2);
  EXPECT_EQ(trunk_double_ray(t), w.graph().edges());
  for (int v = 0; v < 9; ++v) EXPECT_TRUE(t.on_trunk(v));
}

TEST(TwoEnded, TrunkIsTheAxis) {
  const auto w = build_grid_window(2, 5, 1);
  Rng rng(10);
  for (std::size_t axis = 0; axis < 2; ++axis) {
    for (int i = 0; i < 20; ++i) {
      const auto t = two_ended_tree(w, axis, rng);
      expect_spanning_tree(t);
      EdgeSet axis_edges;
      for (int a = -5; a < 5; ++a) {
        GroupElement x{0, 0}, y{0, 0};
        x.free[axis] = a;
        y.free[axis] = a + 1;
        axis_edges.insert(x, y);
      }
      EXPECT_EQ(trunk_double_ray(t), axis_edges);
      // The trunk edges are ordered from ∂1 to ∂2 and form a path.
      const auto trunk = t.trunk_edges();
      for (std::size_t k = 1; k < trunk.size(); ++k) EXPECT_EQ(trunk[k - 1].second, trunk[k].first);
      for (int v = 0; v < static_cast<int>(w.size()); ++v) {
        EXPECT_EQ(t.infinite_neighbours(v).size(), t.on_trunk(v) ? 2u : 1u);
      }
    }
  }
}

TEST(TwoEnded, AxisOutsideWindowRejected) {
  const auto w = build_grid_window(2, 3, 0);
  Rng rng(1);
  EXPECT_THROW(two_ended_tree(w, 2, rng), ConfigError);
}

TEST(Classification, LeafAndPendantCases) {
  // ∂ - 0 - 1 - 2 with 3 hanging off 1; rooted at vertex 0.
  const auto g = oracle::graph_on_line(4, {{0, 1}, {1, 2}, {1, 3}});
  const auto w = closed_window(g);
  const auto t = rooted_tree(w, {{0, 1}, {1, 2}, {1, 3}}, 0);
  EXPECT_EQ(infinite_neighbours(t, 2), (std::vector<int>{1}));
  EXPECT_EQ(finite_subtree(t, 2), (std::vector<int>{2}));
  EXPECT_EQ(subtree_height(t, 2), 0);
  EXPECT_EQ(finite_subtree(t, 1), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(subtree_height(t, 1), 1);
  EXPECT_EQ(subtree_height(t, 0), 2);
  EXPECT_EQ(t.finite_class_root(3), 0);
}

TEST(Classification, NeighbourSplitNestingAndHeights) {
  const auto w = build_grid_window(2, 6, 0);
  Rng rng(123);
  for (int sample = 0; sample < 30; ++sample) {
    const auto t = sample % 3 == 0 ? two_ended_tree(w, 1, rng) : wilson_wired_ust(w, rng);
    for (int v = 0; v < static_cast<int>(w.size()); ++v) {
      std::vector<int> split(t.infinite_neighbours(v).begin(), t.infinite_neighbours(v).end());
      split.insert(split.end(), t.finite_neighbours(v).begin(), t.finite_neighbours(v).end());
      std::sort(split.begin(), split.end());
      auto all = t.neighbours(v);
      std::sort(all.begin(), all.end());
      EXPECT_EQ(split, all);
      EXPECT_GE(t.infinite_neighbours(v).size(), 1u);
      EXPECT_LE(t.infinite_neighbours(v).size(), static_cast<std::size_t>(t.end_count()));

      const auto sub = t.finite_subtree(v);
      const std::set<int> sub_set(sub.begin(), sub.end());
      for (int u : sub) {
        if (u == v) continue;
        for (int x : t.finite_subtree(u)) EXPECT_TRUE(sub_set.count(x)) << "nesting at " << v;
        EXPECT_LT(t.subtree_height(u), t.subtree_height(v));
      }
    }
  }
}

TEST(Classification, OneEndedTrunkIsEmpty) {
  const auto w = build_grid_window(2, 3, 0);
  Rng rng(4);
  EXPECT_TRUE(trunk_double_ray(wilson_wired_ust(w, rng)).empty());
}

TEST(TreeValidation, RejectsNonTreeParentMaps) {
  const auto w = wired_path(3);
  // n = 3, ∂1 = 3. A cycle 0 -> 1 -> 0 never reaches ∂1.
  EXPECT_THROW(SpanningTreeWithEnds(w, {1, 0, 3, kNoParent}, 1), StructureError);
  // 0 and 2 are not adjacent.
  EXPECT_THROW(SpanningTreeWithEnds(w, {2, 3, 3, kNoParent}, 1), StructureError);
  EXPECT_NO_THROW(SpanningTreeWithEnds(w, {3, 0, 1, kNoParent}, 1));
}

TEST(RootedWilson, UniformOnFourCycle) {
  const auto c4 = build_cayley_finite({4}, {GroupElement({}, {1})});
  constexpr int kSamples = 8000;
  std::map<std::vector<int>, int> counts;
  Rng rng(8);
  for (int i = 0; i < kSamples; ++i) counts[wilson_rooted_parents(c4, 0, rng)]++;
  ASSERT_EQ(counts.size(), 4u);
  for (const auto& [k, c] : counts) EXPECT_NEAR(c / double(kSamples), 0.25, 4 * std::sqrt(0.1875 / kSamples));
}
