#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dray/small_graphs.hpp"
#include "oracles.hpp"

using namespace dray;

namespace {

// Reference isomorphism classes: relabel every labelled connected graph by
// all permutations and keep the smallest adjacency string.
std::size_t connected_classes_by_brute_force(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < n; ++j) for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<std::string> classes;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) {
        adj[static_cast<std::size_t>(pairs[k].first)][static_cast<std::size_t>(pairs[k].second)] = 1;
        adj[static_cast<std::size_t>(pairs[k].second)][static_cast<std::size_t>(pairs[k].first)] = 1;
      }
    }
    std::vector<int> seen{0};
    std::vector<char> mark(static_cast<std::size_t>(n), 0);
    mark[0] = 1;
    for (std::size_t h = 0; h < seen.size(); ++h) {
      for (int u = 0; u < n; ++u) {
        if (adj[static_cast<std::size_t>(seen[h])][static_cast<std::size_t>(u)] && !mark[static_cast<std::size_t>(u)]) {
          mark[static_cast<std::size_t>(u)] = 1;
          seen.push_back(u);
        }
      }
    }
    if (static_cast<int>(seen.size()) != n) continue;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
      std::string s;
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
          s += adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] ? '1' : '0';
        }
      }
      if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

std::size_t factorial(std::size_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

SmallGraph relabel(const SmallGraph& g, const std::vector<int>& perm) {
  SmallGraph out{g.n, 0};
  for (auto [i, j] : g.edges()) {
    const int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(j)];
    out.bits |= 1u << pair_bit(std::min(a, b), std::max(a, b));
  }
  return out;
}

}  // namespace

TEST(ConnectedGraphs, CountsUpToSeven) {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    const auto gs = connected_graphs(n);
    EXPECT_EQ(gs.size(), expected[static_cast<std::size_t>(n - 1)]) << "n=" << n;
    for (const auto& g : gs) {
      EXPECT_TRUE(g.connected());
      EXPECT_EQ(canonical_form(g), g);
    }
    EXPECT_TRUE(std::is_sorted(gs.begin(), gs.end()));
  }
  EXPECT_THROW(connected_graphs(8), ConfigError);
}

TEST(ConnectedGraphs, MatchBruteForceClassesUpToFive) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(connected_graphs(n).size(), connected_classes_by_brute_force(n));
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  std::mt19937_64 rng(5);
  for (int n = 3; n <= 7; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      SmallGraph g{n, 0};
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (std::bernoulli_distribution(0.4)(rng)) g.bits |= 1u << pair_bit(i, j);
        }
      }
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto h = relabel(g, perm);
      EXPECT_EQ(canonical_form(g), canonical_form(h));
      EXPECT_EQ(h.edge_count(), g.edge_count());
    }
  }
}

TEST(SpanningTrees, CountsMatchMatrixTreeTheorem) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      const auto trees = spanning_trees(g);
      EXPECT_EQ(static_cast<std::int64_t>(trees.size()), oracle::spanning_tree_count(n, g.edges()));
      std::set<std::vector<std::pair<int, int>>> distinct(trees.begin(), trees.end());
      EXPECT_EQ(distinct.size(), trees.size());
      for (const auto& t : trees) {
        EXPECT_EQ(t.size(), static_cast<std::size_t>(n - 1));
        for (auto [a, b] : t) EXPECT_TRUE(g.has(a, b));
      }
    }
  }
}

TEST(ChildOrders, CountIsProductOfFactorials) {
  for (const auto& g : connected_graphs(5)) {
    const auto fg = to_finite_graph(g);
    const auto w = closed_window(fg);
    for (const auto& tree : spanning_trees(g)) {
      const auto t = rooted_tree(w, tree, 0);
      std::size_t expected = 1;
      for (int v = 0; v < 5; ++v) expected *= factorial(t.finite_neighbours(v).size());
      const auto orders = child_orders(t);
      EXPECT_EQ(orders.size(), expected);
      std::set<std::vector<std::vector<int>>> seen;
      for (const auto& o : orders) {
        std::vector<std::vector<int>> ranks;
        for (int v = 0; v < 5; ++v) ranks.push_back(o.ranks(v));
        seen.insert(ranks);
      }
      EXPECT_EQ(seen.size(), expected);
    }
  }
}

TEST(Sweep, ExhaustiveUpToFive) {
  const auto r = sweep_finite_cycles(5, 5, 0, 1);
  EXPECT_TRUE(r.pass()) << (r.failures.empty() ? "" : r.failures.front().reason);
  EXPECT_EQ(r.graphs, 2u + 6u + 21u);
  EXPECT_EQ(r.brute_force_agree, r.graphs);
  EXPECT_GE(r.cycles, r.trees);
  EXPECT_EQ(r.graphs_per_size, (std::vector<std::size_t>{0, 0, 0, 2, 6, 21}));
}

TEST(Sweep, SixVerticesWithRandomOrdersIsReproducible) {
  const auto a = sweep_finite_cycles(6, 4, 3, 42);
  const auto b = sweep_finite_cycles(6, 4, 3, 42);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.cycles, b.cycles);
  EXPECT_EQ(a.trees, b.trees);
}
