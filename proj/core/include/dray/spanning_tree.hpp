// Spanning trees of finite windows with virtual end-vertices standing in for
// the ends of an infinite tree, plus the tree-local classifications used by
// the cube construction (infinite/finite neighbours, finite subtrees).
#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dray/graph.hpp"
#include "dray/random.hpp"

namespace dray {

inline constexpr int kNoParent = -1;

/// A spanning tree on the window's vertices plus one or two virtual
/// end-vertices. Window vertices are 0..n-1, end ∂1 is n and (when present)
/// end ∂2 is n+1. The tree is stored rooted at ∂1; with two ends, ∂2 is a leaf
/// and the ∂1-∂2 path is the trunk.
///
/// Holds a non-owning pointer to its window, which must outlive the tree.
class SpanningTreeWithEnds {
 public:
  /// `parent` has n + ends entries; parent[n] == kNoParent. Throws
  /// StructureError if the parent map is not a spanning tree using window
  /// edges and end attachments only.
  SpanningTreeWithEnds(const WindowedGraph& window, std::vector<int> parent, int ends);

  const WindowedGraph& window() const { return *window_; }
  std::size_t window_size() const { return n_; }
  int end_count() const { return ends_; }
  /// i in {0, 1}.
  int end_vertex(int i) const { return static_cast<int>(n_) + i; }
  bool is_end(int x) const { return x >= static_cast<int>(n_); }

  int parent(int x) const { return parent_[static_cast<std::size_t>(x)]; }
  std::span<const int> children(int x) const { return children_[static_cast<std::size_t>(x)]; }
  /// Parent (if any) followed by children.
  std::vector<int> neighbours(int x) const;
  /// Window vertices attached to end i.
  std::vector<int> end_attachments(int i) const;

  /// x lies on the ∂1-∂2 path. Always false with one end.
  bool on_trunk(int x) const { return trunk_[static_cast<std::size_t>(x)]; }

  /// N^∞_v: tree neighbours whose side of T - v contains an end.
  std::span<const int> infinite_neighbours(int v) const { return inf_[static_cast<std::size_t>(v)]; }
  /// N^{≠∞}_v: the remaining tree neighbours, sorted by index.
  std::span<const int> finite_neighbours(int v) const { return fin_[static_cast<std::size_t>(v)]; }
  /// Max tree distance from v inside its finite subtree.
  int subtree_height(int v) const { return height_[static_cast<std::size_t>(v)]; }
  /// v together with every finite component of T - v, sorted.
  std::vector<int> finite_subtree(int v) const;
  /// Topmost u with v in finite_subtree(u). Two vertices share some finite
  /// subtree iff they have the same class root.
  int finite_class_root(int v) const;

  /// Trunk edges between window vertices, ordered from ∂1 towards ∂2.
  std::vector<std::pair<int, int>> trunk_edges() const;
  /// All tree edges as (child, parent), virtual ones included.
  std::vector<std::pair<int, int>> edges() const;

 private:
  const WindowedGraph* window_;
  std::size_t n_;
  int ends_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<bool> trunk_;
  std::vector<std::vector<int>> inf_;
  std::vector<std::vector<int>> fin_;
  std::vector<int> height_;
};

/// Wired uniform spanning tree: every frontier vertex is joined to a single
/// end ∂1 by one edge per outside neighbour, and Wilson's algorithm runs
/// rooted at ∂1. Throws StructureError for a disconnected or frontier-free
/// window.
SpanningTreeWithEnds wilson_wired_ust(const WindowedGraph& window, Rng& rng);

/// Two-ended tree whose trunk is the coordinate axis `axis` through the
/// origin, with ∂1 and ∂2 beyond its extremes; all other vertices hang off
/// the trunk by loop-erased walks inside the window.
SpanningTreeWithEnds two_ended_tree(const WindowedGraph& window, std::size_t axis, Rng& rng);

/// Uniform spanning tree of a finite connected graph given as parent map
/// towards `root` (parent[root] == kNoParent).
std::vector<int> wilson_rooted_parents(const FiniteGraph& g, int root, Rng& rng);

/// A window with no frontier wrapping a finite graph.
WindowedGraph closed_window(FiniteGraph g);

/// Treats `root` as the single end: ∂1 is attached to root only. `tree_edges`
/// are window index pairs (n - 1 of them).
SpanningTreeWithEnds rooted_tree(const WindowedGraph& window,
                                 const std::vector<std::pair<int, int>>& tree_edges, int root);

std::vector<int> infinite_neighbours(const SpanningTreeWithEnds& t, int v);
std::vector<int> finite_subtree(const SpanningTreeWithEnds& t, int v);
int subtree_height(const SpanningTreeWithEnds& t, int v);
/// Edges uv with u in N^∞_v and v in N^∞_u between window vertices; empty
/// for one-ended trees.
EdgeSet trunk_double_ray(const SpanningTreeWithEnds& t);

}  // namespace dray
