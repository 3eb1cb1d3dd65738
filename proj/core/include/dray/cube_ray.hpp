// The map from (spanning tree with <= 2 ends, vertex orders) to a spanning
// double ray of the cube G^3, and its finite rooted variant producing a
// Hamilton cycle of G^3.
//
// Conventions. N^{≠∞}_v is enumerated in increasing <_v order as
// v^1 < v^2 < ... < v^k, so v^k is the maximum and v† = v^k (v† = v when the
// set is empty). With that enumeration the emitted edges are
//   (i)   v -- (v^1)†
//   (ii)  v^i -- (v^{i+1})†           for i < k
//   (iii) for a trunk edge {u,v}: the u-side endpoint is u if v = max N^∞_u
//         and u† otherwise (symmetrically for v). Tags iii-a/b/c record how
//         many sides attach at the vertex itself (2/1/0).
// Reading v^1 as the maximum instead breaks the v -- v† path of the finite
// construction; the small-graph sweep rejects it.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dray/graph.hpp"
#include "dray/random.hpp"
#include "dray/spanning_tree.hpp"

namespace dray {

/// A total order <_v on the ambient neighbours of every window vertex.
/// Slots 0..deg-1 are the window neighbours in adjacency order; further slots
/// stand for neighbours outside the window.
class OrderAssignment {
 public:
  OrderAssignment() = default;
  /// ranks[v][slot] = position of that neighbour in <_v (0 = smallest).
  explicit OrderAssignment(std::vector<std::vector<int>> ranks);

  std::size_t size() const { return ranks_.size(); }
  std::size_t slots(int v) const { return ranks_[static_cast<std::size_t>(v)].size(); }
  int rank(int v, std::size_t slot) const { return ranks_[static_cast<std::size_t>(v)][slot]; }
  const std::vector<int>& ranks(int v) const { return ranks_[static_cast<std::size_t>(v)]; }

  bool operator==(const OrderAssignment&) const = default;

 private:
  std::vector<std::vector<int>> ranks_;
};

/// Independent uniform permutation of the ambient neighbours at each vertex.
OrderAssignment sample_orders(const WindowedGraph& g, Rng& rng);

/// Sort key of tree neighbour u in <_v. A virtual end takes the first
/// outside slot, or sits above every real neighbour when v has none.
int order_key(const SpanningTreeWithEnds& t, const OrderAssignment& orders, int v, int u);

/// N^{≠∞}_v sorted increasingly by <_v.
std::vector<int> ordered_finite_neighbours(const SpanningTreeWithEnds& t, const OrderAssignment& orders, int v);
/// v^i for 1 <= i <= |N^{≠∞}_v|; throws std::out_of_range otherwise.
int kth_child(const SpanningTreeWithEnds& t, const OrderAssignment& orders, int v, std::size_t i);
int dagger(const SpanningTreeWithEnds& t, const OrderAssignment& orders, int v);
/// v† for every window vertex.
std::vector<int> all_daggers(const SpanningTreeWithEnds& t, const OrderAssignment& orders);

enum class PhiRule { Up, Across, TrunkBoth, TrunkOne, TrunkNeither };
const char* rule_tag(PhiRule r);

struct PhiEdge {
  int a;
  int b;
  PhiRule rule;
  /// Vertex v whose rule emitted the edge; for trunk rules the trunk edge.
  int source;
  int source_other = -1;
};

struct PhiResult {
  const WindowedGraph* window = nullptr;
  std::vector<PhiEdge> edges;
  std::vector<int> dagger;
  /// Vertices touching a virtual end, and their daggers; their degree may
  /// depend on structure outside the window.
  std::vector<bool> boundary_affected;

  EdgeSet edge_set() const;
  std::size_t count(PhiRule r) const;
};

enum class EndMode {
  Auto,       // apply the trunk rule wherever the tree has a trunk
  OneEnded,   // skip the trunk rule (throws if the tree has two ends)
};

PhiResult phi_edges(const SpanningTreeWithEnds& t, const OrderAssignment& orders,
                    EndMode mode = EndMode::Auto);

/// Hamilton cycle of G^3 from a spanning tree of a finite graph rooted at
/// the vertex carrying its single end: the φ path from root to root† closed
/// by the edge root -- root†. Throws StructureError for fewer than 3 vertices.
EdgeSet finite_hamilton_cycle(const SpanningTreeWithEnds& rooted, const OrderAssignment& orders);

}  // namespace dray
