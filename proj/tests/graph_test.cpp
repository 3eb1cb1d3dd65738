#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dray/graph.hpp"
#include "oracles.hpp"

using namespace dray;

namespace {

// Edges of the box by direct coordinate enumeration.
std::size_t box_edges_by_enumeration(int d, int r) {
  std::size_t count = 0;
  std::vector<int> x(static_cast<std::size_t>(d), -r);
  while (true) {
    for (int axis = 0; axis < d; ++axis) count += x[static_cast<std::size_t>(axis)] < r ? 1 : 0;
    int i = 0;
    while (i < d && x[static_cast<std::size_t>(i)] == r) x[static_cast<std::size_t>(i++)] = -r;
    if (i == d) break;
    ++x[static_cast<std::size_t>(i)];
  }
  return count;
}

}  // namespace

TEST(GroupElement, TorsionIsReduced) {
  AbelianGroup g(1, {3, 4});
  const GroupElement a({2}, {2, 3});
  const GroupElement b({-1}, {2, 2});
  EXPECT_EQ(g.add(a, b), GroupElement({1}, {1, 1}));
  EXPECT_EQ(g.negate(a), GroupElement({-2}, {1, 1}));
  EXPECT_EQ(g.scale(b, 3), GroupElement({-3}, {0, 2}));
  EXPECT_TRUE(g.is_element(g.reduce(GroupElement({0}, {-7, 9}))));
  EXPECT_EQ(g.reduce(GroupElement({0}, {-7, 9})), GroupElement({0}, {2, 1}));
  EXPECT_EQ(g.from_flat({5, 1, 3}), GroupElement({5}, {1, 3}));
}

TEST(GridWindow, LineOfRadiusTwo) {
  const auto w = build_grid_window(1, 2, 0);
  EXPECT_EQ(w.size(), 5u);
  EXPECT_EQ(w.graph().edge_count(), 4u);
  std::vector<GroupElement> frontier;
  for (int v : w.frontier()) frontier.push_back(w.graph().vertex(v));
  std::sort(frontier.begin(), frontier.end());
  EXPECT_EQ(frontier, (std::vector<GroupElement>{{-2}, {2}}));
}

TEST(GridWindow, ThreeByThree) {
  const auto w = build_grid_window(2, 1, 0);
  EXPECT_EQ(w.size(), 9u);
  EXPECT_EQ(w.graph().edge_count(), 12u);
  EXPECT_EQ(w.frontier().size(), 8u);
  EXPECT_FALSE(w.is_frontier(w.graph().index_of({0, 0})));
}

TEST(GridWindow, RadiusMustExceedMargin) {
  EXPECT_THROW(build_grid_window(2, 0, 0), ConfigError);
  EXPECT_THROW(build_grid_window(2, 3, 3), ConfigError);
  EXPECT_THROW(build_grid_window(0, 3, 1), ConfigError);
}

TEST(GridWindow, EdgeCountsMatchEnumeration) {
  for (int d = 1; d <= 4; ++d) {
    for (int r = 1; r <= (d <= 2 ? 6 : 3); ++r) {
      const auto w = build_grid_window(static_cast<std::size_t>(d), r, 0);
      EXPECT_EQ(w.graph().edge_count(), box_edges_by_enumeration(d, r)) << "d=" << d << " r=" << r;
    }
  }
}

TEST(GridWindow, InteriorDegreeAndMargin) {
  for (int d = 1; d <= 3; ++d) {
    const auto w = build_grid_window(static_cast<std::size_t>(d), 4, 2);
    for (int v = 0; v < static_cast<int>(w.size()); ++v) {
      const auto& x = w.graph().vertex(v);
      const auto sup = *std::max_element(x.free.begin(), x.free.end(), [](auto a, auto b) {
        return std::abs(a) < std::abs(b);
      });
      const int dist = 4 - static_cast<int>(std::abs(sup));
      EXPECT_EQ(w.boundary_distance(v), dist);
      EXPECT_EQ(w.is_interior(v), dist > 2);
      if (!w.is_frontier(v)) {
        EXPECT_EQ(w.graph().degree(v), static_cast<std::size_t>(2 * d));
      }
      EXPECT_EQ(w.ambient_degree(v), 2 * d);
    }
  }
}

TEST(CayleyFinite, Triangle) {
  const auto g = build_cayley_finite({3}, {GroupElement({}, {1})});
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(CayleyFinite, KleinFourCycle) {
  const auto g = build_cayley_finite({2, 2}, {GroupElement({}, {1, 0}), GroupElement({}, {0, 1})});
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2u);
  const int zero = g.index_of(GroupElement({}, {0, 0}));
  const int far = g.index_of(GroupElement({}, {1, 1}));
  EXPECT_FALSE(g.adjacent(zero, far));
  EXPECT_EQ(graph_distance(g, zero, far), 2);
}

TEST(CayleyFinite, NonGeneratingSetRejected) {
  EXPECT_THROW(build_cayley_finite({4}, {GroupElement({}, {2})}), ConfigError);
  EXPECT_THROW(build_cayley_finite({1}, {GroupElement({}, {0})}), ConfigError);
}

TEST(CayleyFinite, AdjacencyIsDifferenceBySignedGenerator) {
  const std::vector<GroupElement> gens{GroupElement({}, {1, 0}), GroupElement({}, {1, 1})};
  const auto g = build_cayley_finite({5, 3}, gens);
  const AbelianGroup group(0, {5, 3});
  for (int u = 0; u < static_cast<int>(g.size()); ++u) {
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
      const auto diff = group.sub(g.vertex(u), g.vertex(v));
      bool expected = false;
      for (const auto& s : gens) expected = expected || diff == s || diff == group.negate(s);
      EXPECT_EQ(g.adjacent(u, v), expected && u != v);
    }
  }
}

TEST(GraphPower, IdentityAndPath) {
  const auto p = oracle::path_graph(3);
  EXPECT_EQ(graph_power(p, 1).edges(), p.edges());
  const auto cube = graph_power(p, 3);
  EXPECT_EQ(cube.edge_count(), 3u);
  EXPECT_TRUE(cube.adjacent(0, 2));
  EXPECT_THROW(graph_power(p, 0), ConfigError);
}

TEST(GraphPower, SixCycleSquared) {
  const auto c6 = build_cayley_finite({6}, {GroupElement({}, {1})});
  const auto sq = graph_power(c6, 2);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(sq.degree(v), 4u);
}

TEST(GraphPower, MonotoneInK) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < 9; ++i) edges.emplace_back(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
    for (int extra = 0; extra < 3; ++extra) {
      const int a = std::uniform_int_distribution<int>(0, 8)(rng);
      const int b = std::uniform_int_distribution<int>(0, 8)(rng);
      if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    const auto g = oracle::graph_on_line(9, edges);
    EdgeSet previous;
    for (int k = 1; k <= 5; ++k) {
      const auto e = graph_power(g, k).edges();
      EXPECT_EQ(edge_intersection(previous, e), previous);
      for (const auto& [a, b] : e) {
        const int d = graph_distance(g, a, b);
        EXPECT_GE(d, 1);
        EXPECT_LE(d, k);
      }
      previous = e;
    }
    EXPECT_EQ(graph_power(graph_power(g, 1), 1).edges(), g.edges());
  }
}

TEST(Distance, BasicCases) {
  const auto p = oracle::path_graph(3);
  EXPECT_EQ(graph_distance(p, 1, 1), 0);
  EXPECT_EQ(graph_distance(p, 0, 2), 2);
  const auto two = oracle::graph_on_line(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(graph_distance(two, 0, 3), kUnreachable);
  EXPECT_TRUE(within_distance(p, 0, 2, 2));
  EXPECT_FALSE(within_distance(p, 0, 2, 1));
}

TEST(Translate, IdentityAndShift) {
  const auto z2 = AbelianGroup::lattice(2);
  EdgeSet e;
  e.insert({0, 0}, {1, 0});
  EXPECT_EQ(translate_edge_set(e, {0, 0}, z2).edges, e);
  EdgeSet shifted;
  shifted.insert({2, 2}, {3, 2});
  EXPECT_EQ(translate_edge_set(e, {2, 2}, z2).edges, shifted);
}

TEST(Translate, BoundaryEdgeIsDroppedAndCounted) {
  const auto w = build_grid_window(2, 2, 0);
  const auto z2 = AbelianGroup::lattice(2);
  EdgeSet e;
  e.insert({1, 0}, {2, 0});
  e.insert({0, 0}, {0, 1});
  const auto t = translate_edge_set(e, {1, 0}, z2, &w.graph());
  EXPECT_EQ(t.dropped, 1u);
  EXPECT_EQ(t.edges.size(), 1u);
  EXPECT_TRUE(t.edges.contains({1, 0}, {1, 1}));
}

TEST(Translate, RoundTripRestoresAllButDrops) {
  const auto w = build_grid_window(2, 5, 0);
  const auto z2 = AbelianGroup::lattice(2);
  std::mt19937_64 rng(3);
  const auto all = w.graph().edges();
  for (int trial = 0; trial < 30; ++trial) {
    EdgeSet e;
    for (const auto& edge : all) {
      if (std::bernoulli_distribution(0.3)(rng)) e.insert(edge);
    }
    const GroupElement g{std::uniform_int_distribution<std::int64_t>(-3, 3)(rng),
                         std::uniform_int_distribution<std::int64_t>(-3, 3)(rng)};
    const auto there = translate_edge_set(e, g, z2, &w.graph());
    const auto back = translate_edge_set(there.edges, z2.negate(g), z2, &w.graph());
    EXPECT_EQ(back.dropped, 0u);
    EXPECT_EQ(back.edges.size() + there.dropped, e.size());
    EXPECT_EQ(edge_intersection(back.edges, e), back.edges);
  }
}

TEST(EdgeSet, RejectsLoopsAndDeduplicates) {
  EdgeSet e;
  EXPECT_TRUE(e.insert({1}, {0}));
  EXPECT_FALSE(e.insert({0}, {1}));
  EXPECT_THROW(e.insert({2}, {2}), StructureError);
  EXPECT_EQ(e.size(), 1u);
  EXPECT_EQ(e.begin()->first, GroupElement{0});
}
