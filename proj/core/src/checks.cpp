#include "dray/checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace dray {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

/// Dense ids for the endpoints of an edge set.
struct VertexIds {
  std::unordered_map<GroupElement, int> id;
  std::vector<GroupElement> names;
  int get(const GroupElement& g) {
    auto [it, fresh] = id.emplace(g, static_cast<int>(names.size()));
    if (fresh) names.push_back(g);
    return it->second;
  }
};

std::string edge_str(const GroupElement& a, const GroupElement& b) {
  return a.to_string() + "-" + b.to_string();
}

}  // namespace

TrustedRegion::TrustedRegion(std::vector<GroupElement> vertices, std::string description)
    : vertices_(std::move(vertices)), description_(std::move(description)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  set_.reserve(vertices_.size());
  set_.insert(vertices_.begin(), vertices_.end());
}

TrustedRegion TrustedRegion::interior_of(const WindowedGraph& w) {
  std::vector<GroupElement> vs;
  for (int v : w.interior()) vs.push_back(w.graph().vertex(v));
  std::string desc = "window interior (distance > " + std::to_string(w.margin()) + " from frontier";
  if (w.radius() >= 0) desc += ", box radius " + std::to_string(w.radius());
  desc += ")";
  return TrustedRegion(std::move(vs), std::move(desc));
}

TrustedRegion TrustedRegion::everything(const FiniteGraph& g) {
  return TrustedRegion(g.vertices(), "all " + std::to_string(g.size()) + " vertices");
}

CheckReport check_two_regular(const EdgeSet& e, const TrustedRegion& trusted) {
  CheckReport r{"two_regular", true, {}, trusted.description(), 0, 0};
  const auto deg = e.degrees();
  for (const auto& v : trusted.vertices()) {
    ++r.checked;
    const auto it = deg.find(v);
    const int d = it == deg.end() ? 0 : it->second;
    if (d != 2) {
      r.fail("vertex " + v.to_string() + " has degree " + std::to_string(d));
      break;
    }
  }
  return r;
}

CheckReport check_connected_spanning(const EdgeSet& e, const TrustedRegion& trusted) {
  CheckReport r{"connected_spanning", true, {}, trusted.description(), 0, 0};
  VertexIds ids;
  const int boundary = ids.get(GroupElement{});  // stands for every untrusted vertex
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(e.size());
  for (const auto& [a, b] : e) {
    const int ia = trusted.contains(a) ? ids.get(a) : boundary;
    const int ib = trusted.contains(b) ? ids.get(b) : boundary;
    pairs.emplace_back(ia, ib);
  }
  DisjointSets ds(ids.names.size());
  for (auto [a, b] : pairs) ds.unite(a, b);

  int root = -1;
  for (const auto& v : trusted.vertices()) {
    ++r.checked;
    const auto it = ids.id.find(v);
    if (it == ids.id.end()) {
      r.fail("vertex " + v.to_string() + " is not covered");
      break;
    }
    const int c = ds.find(it->second);
    if (root < 0) root = c;
    if (c != root) {
      r.fail("vertex " + v.to_string() + " is in a component that does not reach the boundary or the first trusted vertex");
      break;
    }
  }
  return r;
}

CheckReport check_acyclic(const EdgeSet& e, const TrustedRegion& trusted) {
  CheckReport r{"acyclic", true, {}, trusted.description(), 0, 0};
  VertexIds ids;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : e) {
    if (trusted.contains(a) && trusted.contains(b)) pairs.emplace_back(ids.get(a), ids.get(b));
  }
  DisjointSets ds(ids.names.size());
  for (auto [a, b] : pairs) {
    ++r.checked;
    if (!ds.unite(a, b)) {
      r.fail("edge " + edge_str(ids.names[static_cast<std::size_t>(a)], ids.names[static_cast<std::size_t>(b)]) +
             " closes a trusted cycle");
      break;
    }
  }
  return r;
}

CheckReport check_cycle_count(const EdgeSet& e, std::size_t expected) {
  CheckReport r{"cycle_count", true, {}, "whole edge set", e.size(), 0};
  VertexIds ids;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : e) pairs.emplace_back(ids.get(a), ids.get(b));
  DisjointSets ds(ids.names.size());
  std::size_t components = ids.names.size();
  for (auto [a, b] : pairs) {
    if (ds.unite(a, b)) --components;
  }
  r.value = e.size() + components - ids.names.size();
  if (r.value != expected) {
    r.fail("cyclomatic number " + std::to_string(r.value) + ", expected " + std::to_string(expected));
  }
  return r;
}

CheckReport check_power_bound(const EdgeSet& e, const FiniteGraph& g, int k) {
  CheckReport r{"power_bound_" + std::to_string(k), true, {}, "all edges", 0, 0};
  for (const auto& [a, b] : e) {
    ++r.checked;
    const int ia = g.index_of(a);
    const int ib = g.index_of(b);
    if (ia < 0 || ib < 0) {
      r.fail("edge " + edge_str(a, b) + " leaves the graph");
      break;
    }
    if (!within_distance(g, ia, ib, k)) {
      r.fail("edge " + edge_str(a, b) + " spans distance " + std::to_string(graph_distance(g, ia, ib)));
      break;
    }
  }
  return r;
}

std::vector<std::vector<int>> index_adjacency(const EdgeSet& e, const FiniteGraph& g) {
  std::vector<std::vector<int>> adj(g.size());
  for (const auto& [a, b] : e) {
    const int ia = g.index_of(a);
    const int ib = g.index_of(b);
    if (ia < 0 || ib < 0) continue;
    adj[static_cast<std::size_t>(ia)].push_back(ib);
    adj[static_cast<std::size_t>(ib)].push_back(ia);
  }
  return adj;
}

CheckReport check_subpath_property(const SpanningTreeWithEnds& t, const OrderAssignment& orders,
                                   const EdgeSet& e, int v) {
  return check_subpath_property(t, all_daggers(t, orders), index_adjacency(e, t.window().graph()), v);
}

CheckReport check_subpath_property(const SpanningTreeWithEnds& t, const std::vector<int>& daggers,
                                   const std::vector<std::vector<int>>& adjacency, int v) {
  const auto& g = t.window().graph();
  CheckReport r{"subpath_property", true, {}, "finite subtree of " + g.vertex(v).to_string(), 0, 0};
  const auto sub = t.finite_subtree(v);
  r.checked = sub.size();
  const int target = daggers[static_cast<std::size_t>(v)];

  auto inside = [&sub](int x) { return std::binary_search(sub.begin(), sub.end(), x); };
  std::size_t edge_ends = 0;
  std::vector<int> ends;
  for (int x : sub) {
    int d = 0;
    for (int y : adjacency[static_cast<std::size_t>(x)]) d += inside(y) ? 1 : 0;
    edge_ends += static_cast<std::size_t>(d);
    if (d > 2) {
      r.fail("vertex " + g.vertex(x).to_string() + " has degree " + std::to_string(d) + " inside the subtree");
      return r;
    }
    if (d < 2) ends.push_back(x);
    if (d == 0 && sub.size() > 1) {
      r.fail("vertex " + g.vertex(x).to_string() + " is isolated inside the subtree");
      return r;
    }
  }
  if (sub.size() == 1) {
    if (edge_ends != 0) r.fail("single-vertex subtree carries an edge");
    return r;
  }
  if (edge_ends / 2 != sub.size() - 1) {
    r.fail("subtree of size " + std::to_string(sub.size()) + " carries " + std::to_string(edge_ends / 2) + " edges");
    return r;
  }
  // n - 1 edges and max degree 2: a path iff connected iff exactly two ends.
  std::sort(ends.begin(), ends.end());
  std::vector<int> want{v, target};
  std::sort(want.begin(), want.end());
  if (ends != want) {
    r.fail("path endpoints are not v=" + g.vertex(v).to_string() + " and v†=" + g.vertex(target).to_string());
    return r;
  }
  // Connectivity from v.
  std::vector<int> stack{v};
  std::set<int> seen{v};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adjacency[static_cast<std::size_t>(x)]) {
      if (inside(y) && seen.insert(y).second) stack.push_back(y);
    }
  }
  if (seen.size() != sub.size()) r.fail("subtree edges are disconnected");
  return r;
}

CheckReport check_internal_edges_on_path(const TileWindow& tw, const SpanningTreeWithEnds& tile_tree,
                                         const TwoColouring& colouring, int t) {
  CheckReport r{"internal_edges_on_path", true, {}, "tiles below " + std::to_string(t), 0, 0};
  // Subtree of t in the tree rooted at ∂1.
  std::vector<int> below{t};
  for (std::size_t head = 0; head < below.size(); ++head) {
    for (int c : tile_tree.children(below[head])) below.push_back(c);
  }
  std::vector<Segment> uni;
  for (int i : below) {
    if (tile_tree.is_end(i)) throw StructureError("subtree below a tile cannot contain an end");
    const auto& tile = tw.tiles[static_cast<std::size_t>(i)];
    uni.insert(uni.end(), tile.solid.begin(), tile.solid.end());
    uni.insert(uni.end(), tile.dotted.begin(), tile.dotted.end());
  }
  r.checked = below.size();

  for (Colour c : {Colour::Solid, Colour::Dotted}) {
    std::map<Point, std::vector<std::pair<Point, bool>>> adj;  // neighbour, edge internal
    std::size_t internal_count = 0;
    Segment first_internal{};
    for (const auto& s : uni) {
      if (colouring.colour(s) != c) continue;
      const bool internal = tw.is_internal(s);
      adj[s.a].emplace_back(s.b, internal);
      adj[s.b].emplace_back(s.a, internal);
      if (internal && internal_count++ == 0) first_internal = s;
    }
    if (internal_count == 0) {
      r.fail(std::string("no internal ") + to_string(c) + " edge below tile");
      return r;
    }
    // Component of the first internal edge.
    std::set<Point> comp{first_internal.a};
    std::vector<Point> stack{first_internal.a};
    std::size_t comp_edge_ends = 0;
    std::size_t comp_internal_ends = 0;
    bool branching = false;
    while (!stack.empty()) {
      const Point p = stack.back();
      stack.pop_back();
      const auto& nb = adj[p];
      if (nb.size() > 2) branching = true;
      for (const auto& [q, internal] : nb) {
        ++comp_edge_ends;
        if (internal) ++comp_internal_ends;
        if (comp.insert(q).second) stack.push_back(q);
      }
    }
    const std::size_t comp_edges = comp_edge_ends / 2;
    const std::size_t comp_internal = comp_internal_ends / 2;
    if (branching) {
      r.fail(std::string(to_string(c)) + " class branches inside the tile union");
      return r;
    }
    if (comp_internal != internal_count) {
      r.fail(std::string(to_string(c)) + " internal edges split across components (" +
             std::to_string(comp_internal) + " of " + std::to_string(internal_count) + ")");
      return r;
    }
    if (comp_edges == comp.size() && comp_edges == comp_internal) {
      r.fail(std::string(to_string(c)) + " class is a cycle of internal edges only");
      return r;
    }
  }
  return r;
}

CheckReport check_contraction(const EdgeSet& e, const std::vector<std::vector<GroupElement>>& paths,
                              const EdgeSet& expected) {
  CheckReport r{"contraction", true, {}, std::to_string(paths.size()) + " path translates", 0, 0};
  std::unordered_map<GroupElement, std::size_t> owner;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (const auto& v : paths[i]) {
      if (!owner.emplace(v, i).second) {
        r.fail("vertex " + v.to_string() + " lies on two path translates");
        return r;
      }
    }
  }
  EdgeSet contracted;
  for (const auto& [a, b] : e) {
    ++r.checked;
    const auto ia = owner.find(a);
    const auto ib = owner.find(b);
    if (ia == owner.end() || ib == owner.end()) {
      r.fail("edge " + edge_str(a, b) + " has an endpoint on no path translate");
      return r;
    }
    if (ia->second == ib->second) continue;
    const auto& ra = paths[ia->second].front();
    const auto& rb = paths[ib->second].front();
    if (!contracted.insert(ra, rb)) {
      r.fail("contraction creates a parallel edge " + edge_str(ra, rb));
      return r;
    }
  }
  if (contracted != expected) {
    const auto extra = edge_difference(contracted, expected);
    const auto missing = edge_difference(expected, contracted);
    if (!extra.empty()) {
      r.fail("contracted edge " + edge_str(extra.begin()->first, extra.begin()->second) + " is not expected");
    } else {
      r.fail("expected edge " + edge_str(missing.begin()->first, missing.begin()->second) + " is missing");
    }
  }
  return r;
}

bool brute_force_hamiltonian(const FiniteGraph& g) {
  const std::size_t n = g.size();
  if (n > 12) throw ConfigError("brute_force_hamiltonian is limited to 12 vertices");
  if (n < 3) return false;
  // reach[mask][v]: a path from vertex 0 through exactly `mask` ending at v.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::vector<char>> reach(full + 1, std::vector<char>(n, 0));
  reach[1][0] = 1;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if ((mask & 1) == 0) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (!reach[mask][v]) continue;
      for (int w : g.neighbours(static_cast<int>(v))) {
        const auto bit = std::size_t{1} << static_cast<std::size_t>(w);
        if (mask & bit) continue;
        reach[mask | bit][static_cast<std::size_t>(w)] = 1;
      }
    }
  }
  for (std::size_t v = 1; v < n; ++v) {
    if (reach[full][v] && g.adjacent(static_cast<int>(v), 0)) return true;
  }
  return false;
}

}  // namespace dray
