// Exhaustive small-graph machinery for the finite Hamilton-cycle sweep:
// connected graphs up to isomorphism, their spanning trees, and orderings of
// tree children.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dray/cube_ray.hpp"
#include "dray/graph.hpp"
#include "dray/spanning_tree.hpp"

namespace dray {

/// A simple graph on vertices 0..n-1 as an upper-triangle bitmask
/// (bit index of {i<j} = pair_bit(i, j)).
struct SmallGraph {
  int n = 0;
  std::uint32_t bits = 0;

  bool operator==(const SmallGraph&) const = default;
  auto operator<=>(const SmallGraph&) const = default;

  bool has(int i, int j) const;
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  bool connected() const;
};

inline constexpr int kMaxSmallVertices = 7;

int pair_bit(int i, int j);

/// Lexicographically smallest bitmask over all vertex relabellings.
SmallGraph canonical_form(const SmallGraph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices (1 <= n <= 7), sorted by canonical bitmask.
std::vector<SmallGraph> connected_graphs(int n);

/// Embeds g as a FiniteGraph over Z (vertex i -> (i)).
FiniteGraph to_finite_graph(const SmallGraph& g);

/// All spanning trees as edge lists, in lexicographic subset order.
std::vector<std::vector<std::pair<int, int>>> spanning_trees(const SmallGraph& g);

/// Every order assignment that differs in the relative order of tree
/// children: children take ranks 0..k-1 in each of the k! orders and the other
/// neighbours follow in slot order. The count is the product of k_v!.
std::vector<OrderAssignment> child_orders(const SpanningTreeWithEnds& rooted);

/// Sweep outcome for one (graph, tree, root, orders) combination.
struct SweepFailure {
  SmallGraph graph;
  std::vector<std::pair<int, int>> tree;
  int root = 0;
  std::string reason;
};

struct SweepReport {
  std::size_t graphs = 0;
  std::size_t trees = 0;
  std::size_t cycles = 0;
  std::size_t brute_force_agree = 0;
  std::vector<std::size_t> graphs_per_size;  // index n
  std::vector<SweepFailure> failures;

  bool pass() const { return failures.empty(); }
};

/// For all connected graphs with 3..max_vertices vertices and all spanning
/// trees: roots cycle with the tree index (every root when n <= exhaustive_up_to),
/// orders are exhaustive over child orders when n <= exhaustive_up_to and
/// `random_orders` uniform draws otherwise. Each output is checked to be a
/// Hamilton cycle of G^3 and compared with brute_force_hamiltonian(G^3).
SweepReport sweep_finite_cycles(int max_vertices, int exhaustive_up_to, std::size_t random_orders,
                                std::uint64_t seed);

}  // namespace dray
