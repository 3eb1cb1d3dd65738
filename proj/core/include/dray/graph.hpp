// Finite graphs over group elements: lattice windows, finite Abelian Cayley
// graphs, graph powers, distances and translation of edge sets.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dray/group.hpp"

namespace dray {

/// Unordered vertex pair, stored with first <= second.
using Edge = std::pair<GroupElement, GroupElement>;

Edge make_edge(GroupElement a, GroupElement b);

/// Set of unordered vertex pairs with deterministic (sorted) iteration order.
class EdgeSet {
 public:
  using const_iterator = std::set<Edge>::const_iterator;

  EdgeSet() = default;
  explicit EdgeSet(const std::vector<Edge>& edges);

  /// Returns false if the edge was already present. Loops are rejected.
  bool insert(const GroupElement& a, const GroupElement& b);
  bool insert(const Edge& e) { return insert(e.first, e.second); }
  bool erase(const GroupElement& a, const GroupElement& b);
  bool contains(const GroupElement& a, const GroupElement& b) const;
  bool contains(const Edge& e) const { return contains(e.first, e.second); }

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const_iterator begin() const { return edges_.begin(); }
  const_iterator end() const { return edges_.end(); }

  /// Endpoints of all edges, sorted and deduplicated.
  std::vector<GroupElement> vertices() const;
  /// Vertex -> incident-edge count.
  std::unordered_map<GroupElement, int> degrees() const;

  bool operator==(const EdgeSet&) const = default;

 private:
  std::set<Edge> edges_;
};

EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_intersection(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_difference(const EdgeSet& a, const EdgeSet& b);

/// A finite simple graph whose vertices are group elements. Vertices are
/// addressed by dense indices; `index_of` maps names back to indices.
/// Built once through add_edge, then shared read-only.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  FiniteGraph(AbelianGroup group, std::vector<GroupElement> vertices);

  /// Adds u~v with a generator label. Throws StructureError on loops and
  /// returns false (leaving labels untouched) if the edge already exists.
  bool add_edge(int u, int v, int label = -1);

  const AbelianGroup& group() const { return group_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const GroupElement& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const std::vector<GroupElement>& vertices() const { return vertices_; }
  /// -1 when `g` is not a vertex.
  int index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index_of(g) >= 0; }

  std::span<const int> neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  /// Label of the edge from v to its slot-th neighbour.
  int label(int v, std::size_t slot) const { return labels_[static_cast<std::size_t>(v)][slot]; }
  bool adjacent(int u, int v) const;
  /// Position of u in neighbours(v), or -1.
  int slot_of(int v, int u) const;

  EdgeSet edges() const;

 private:
  AbelianGroup group_;
  std::vector<GroupElement> vertices_;
  std::unordered_map<GroupElement, int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> labels_;
  std::size_t edge_count_ = 0;
};

/// A finite induced piece of an infinite vertex-transitive graph. A vertex is
/// on the frontier iff it has neighbours outside the window, i.e. its ambient
/// degree exceeds its window degree. Interior vertices are those at graph
/// distance > margin from the frontier.
class WindowedGraph {
 public:
  WindowedGraph() = default;
  /// `ambient_degree[v]` is v's degree in the infinite graph.
  WindowedGraph(FiniteGraph graph, std::vector<int> ambient_degree, int margin, int radius = -1);

  const FiniteGraph& graph() const { return graph_; }
  std::size_t size() const { return graph_.size(); }
  int margin() const { return margin_; }
  /// Box radius for lattice windows, -1 otherwise.
  int radius() const { return radius_; }
  std::size_t dimension() const { return graph_.group().rank(); }

  int ambient_degree(int v) const { return ambient_[static_cast<std::size_t>(v)]; }
  int outside_degree(int v) const {
    return ambient_degree(v) - static_cast<int>(graph_.degree(v));
  }
  bool is_frontier(int v) const { return outside_degree(v) > 0; }
  std::vector<int> frontier() const;

  /// Distance to the nearest frontier vertex (a large value if there is none).
  int boundary_distance(int v) const { return boundary_dist_[static_cast<std::size_t>(v)]; }
  bool is_interior(int v) const { return boundary_distance(v) > margin_; }
  std::vector<int> interior() const;

 private:
  FiniteGraph graph_;
  std::vector<int> ambient_;
  std::vector<int> boundary_dist_;
  int margin_ = 0;
  int radius_ = -1;
};

/// Box [-radius, radius]^d of the standard Z^d Cayley graph.
WindowedGraph build_grid_window(std::size_t d, int radius, int margin);

/// Cay(Z_{m_1} x ... x Z_{m_k}, S) with u~v iff u-v = +-s. Throws ConfigError
/// if S does not generate the group.
FiniteGraph build_cayley_finite(const std::vector<std::int64_t>& moduli,
                                const std::vector<GroupElement>& generators);

/// Same vertex set, u~v iff 1 <= dist(u,v) <= k.
FiniteGraph graph_power(const FiniteGraph& g, int k);
inline FiniteGraph graph_power(const WindowedGraph& g, int k) { return graph_power(g.graph(), k); }

inline constexpr int kUnreachable = -1;

/// BFS distance, or kUnreachable.
int graph_distance(const FiniteGraph& g, int u, int v);
int graph_distance(const FiniteGraph& g, const GroupElement& u, const GroupElement& v);
/// dist(u,v) <= k, exploring only the radius-k ball around u.
bool within_distance(const FiniteGraph& g, int u, int v, int k);

/// All vertex distances from `source` (kUnreachable where disconnected).
std::vector<int> bfs_distances(const FiniteGraph& g, int source);

struct TranslatedEdges {
  EdgeSet edges;
  std::size_t dropped = 0;
};

/// Maps {u,v} to {u+g, v+g}. With a carrying graph, edges that leave it are
/// dropped and counted.
TranslatedEdges translate_edge_set(const EdgeSet& edges, const GroupElement& g,
                                   const AbelianGroup& group,
                                   const FiniteGraph* carrier = nullptr);

}  // namespace dray
