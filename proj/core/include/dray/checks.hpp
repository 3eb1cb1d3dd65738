// Structural certificates for finite samples of double rays, cycles and
// paths, plus small exact oracles.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dray/cube_ray.hpp"
#include "dray/graph.hpp"
#include "dray/spanning_tree.hpp"
#include "dray/tiling.hpp"
#include "dray/trusted.hpp"

namespace dray {

/// Outcome of one check. A failing report always names a witness.
struct CheckReport {
  std::string name;
  bool pass = true;
  std::string witness;
  std::string region;
  std::size_t checked = 0;
  /// Check-specific count (e.g. number of cycles).
  std::size_t value = 0;

  void fail(std::string w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
};

/// Every trusted vertex has degree exactly 2 in E.
CheckReport check_two_regular(const EdgeSet& e, const TrustedRegion& trusted);

/// Every trusted vertex is covered by E and, after contracting all
/// untrusted vertices into one boundary vertex, all trusted vertices lie in a
/// single component.
CheckReport check_connected_spanning(const EdgeSet& e, const TrustedRegion& trusted);

/// No cycle of E uses trusted vertices only.
CheckReport check_acyclic(const EdgeSet& e, const TrustedRegion& trusted);

/// Cyclomatic number |E| - |V(E)| + components, reported in `value`; passes
/// iff it equals `expected`.
CheckReport check_cycle_count(const EdgeSet& e, std::size_t expected);

/// Every edge joins vertices at distance <= k in g.
CheckReport check_power_bound(const EdgeSet& e, const FiniteGraph& g, int k);

/// E restricted to the window vertices, as index adjacency lists.
std::vector<std::vector<int>> index_adjacency(const EdgeSet& e, const FiniteGraph& g);

/// E restricted to finite_subtree(T, v) is a path through all of its vertices
/// from v to v† (a single vertex and no edge when the subtree is {v}).
CheckReport check_subpath_property(const SpanningTreeWithEnds& t, const OrderAssignment& orders,
                                   const EdgeSet& e, int v);
/// Same check against precomputed daggers and adjacency (hot loop form).
CheckReport check_subpath_property(const SpanningTreeWithEnds& t, const std::vector<int>& daggers,
                                   const std::vector<std::vector<int>>& adjacency, int v);

/// For tile t whose parent in the tile tree is a tile: in each colour, all
/// internal edges of the tiles below t lie on one path inside the union of
/// those tiles. With no parent (no upward swap) the class may close into a
/// cycle, which passes when removing one non-internal edge leaves such a path.
CheckReport check_internal_edges_on_path(const TileWindow& tw, const SpanningTreeWithEnds& tile_tree,
                                         const TwoColouring& colouring, int t);

/// Contracting every listed path to its first vertex maps E onto
/// `expected` exactly (edges inside a path vanish, no parallel edges arise).
CheckReport check_contraction(const EdgeSet& e, const std::vector<std::vector<GroupElement>>& paths,
                              const EdgeSet& expected);

/// Exact Hamilton-cycle existence (subset dynamic programming), |V| <= 12.
bool brute_force_hamiltonian(const FiniteGraph& g);

}  // namespace dray
