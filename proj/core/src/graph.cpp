#include "dray/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace dray {

Edge make_edge(GroupElement a, GroupElement b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

EdgeSet::EdgeSet(const std::vector<Edge>& edges) {
  for (const auto& e : edges) insert(e.first, e.second);
}

bool EdgeSet::insert(const GroupElement& a, const GroupElement& b) {
  if (a == b) throw StructureError("loop at " + a.to_string() + " cannot be an edge");
  return edges_.insert(make_edge(a, b)).second;
}

bool EdgeSet::erase(const GroupElement& a, const GroupElement& b) {
  return edges_.erase(make_edge(a, b)) > 0;
}

bool EdgeSet::contains(const GroupElement& a, const GroupElement& b) const {
  return edges_.count(make_edge(a, b)) > 0;
}

std::vector<GroupElement> EdgeSet::vertices() const {
  std::vector<GroupElement> out;
  out.reserve(edges_.size() * 2);
  for (const auto& [a, b] : edges_) {
    out.push_back(a);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::unordered_map<GroupElement, int> EdgeSet::degrees() const {
  std::unordered_map<GroupElement, int> deg;
  for (const auto& [a, b] : edges_) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out = a;
  for (const auto& e : b) out.insert(e);
  return out;
}

EdgeSet edge_intersection(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  for (const auto& e : a) {
    if (b.contains(e)) out.insert(e);
  }
  return out;
}

EdgeSet edge_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  for (const auto& e : a) {
    if (!b.contains(e)) out.insert(e);
  }
  return out;
}

FiniteGraph::FiniteGraph(AbelianGroup group, std::vector<GroupElement> vertices)
    : group_(std::move(group)), vertices_(std::move(vertices)) {
  index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], static_cast<int>(i)).second) {
      throw StructureError("duplicate vertex " + vertices_[i].to_string());
    }
  }
  adj_.resize(vertices_.size());
  labels_.resize(vertices_.size());
}

bool FiniteGraph::add_edge(int u, int v, int label) {
  if (u == v) throw StructureError("loop at " + vertex(u).to_string());
  if (adjacent(u, v)) return false;
  adj_[static_cast<std::size_t>(u)].push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
  labels_[static_cast<std::size_t>(u)].push_back(label);
  labels_[static_cast<std::size_t>(v)].push_back(label);
  ++edge_count_;
  return true;
}

int FiniteGraph::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

bool FiniteGraph::adjacent(int u, int v) const { return slot_of(u, v) >= 0; }

int FiniteGraph::slot_of(int v, int u) const {
  const auto& nb = adj_[static_cast<std::size_t>(v)];
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (nb[i] == u) return static_cast<int>(i);
  }
  return -1;
}

EdgeSet FiniteGraph::edges() const {
  EdgeSet out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (int v : adj_[u]) {
      if (static_cast<int>(u) < v) out.insert(vertices_[u], vertices_[static_cast<std::size_t>(v)]);
    }
  }
  return out;
}

WindowedGraph::WindowedGraph(FiniteGraph graph, std::vector<int> ambient_degree, int margin,
                             int radius)
    : graph_(std::move(graph)), ambient_(std::move(ambient_degree)), margin_(margin),
      radius_(radius) {
  if (margin_ < 0) throw ConfigError("margin must be non-negative");
  if (ambient_.size() != graph_.size()) throw ConfigError("ambient degree list has wrong length");
  for (std::size_t v = 0; v < graph_.size(); ++v) {
    if (ambient_[v] < static_cast<int>(graph_.degree(static_cast<int>(v)))) {
      throw StructureError("ambient degree below window degree at " + graph_.vertex(static_cast<int>(v)).to_string());
    }
  }
  // Multi-source BFS from the frontier.
  constexpr int kFar = std::numeric_limits<int>::max() / 2;
  boundary_dist_.assign(graph_.size(), kFar);
  std::deque<int> queue;
  for (std::size_t v = 0; v < graph_.size(); ++v) {
    if (is_frontier(static_cast<int>(v))) {
      boundary_dist_[v] = 0;
      queue.push_back(static_cast<int>(v));
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : graph_.neighbours(u)) {
      auto& d = boundary_dist_[static_cast<std::size_t>(w)];
      if (d == kFar) {
        d = boundary_dist_[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
}

std::vector<int> WindowedGraph::frontier() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (is_frontier(static_cast<int>(v))) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<int> WindowedGraph::interior() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (is_interior(static_cast<int>(v))) out.push_back(static_cast<int>(v));
  }
  return out;
}

WindowedGraph build_grid_window(std::size_t d, int radius, int margin) {
  if (d < 1) throw ConfigError("dimension must be >= 1");
  if (margin < 0) throw ConfigError("margin must be >= 0");
  if (radius <= margin) {
    throw ConfigError("radius (" + std::to_string(radius) + ") must exceed margin (" +
                      std::to_string(margin) + ")");
  }
  const std::int64_t side = 2 * static_cast<std::int64_t>(radius) + 1;
  std::int64_t count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= side;

  // Lexicographic enumeration of the box.
  std::vector<GroupElement> vertices;
  vertices.reserve(static_cast<std::size_t>(count));
  std::vector<std::int64_t> c(d, -radius);
  for (std::int64_t n = 0; n < count; ++n) {
    vertices.emplace_back(c);
    for (std::size_t i = d; i-- > 0;) {
      if (++c[i] <= radius) break;
      c[i] = -radius;
    }
  }

  FiniteGraph g(AbelianGroup::lattice(d), std::move(vertices));
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t i = 0; i < d; ++i) {
      if (g.vertex(static_cast<int>(v)).free[i] == radius) continue;
      auto w = g.vertex(static_cast<int>(v));
      ++w.free[i];
      g.add_edge(static_cast<int>(v), g.index_of(w), static_cast<int>(i));
    }
  }
  std::vector<int> ambient(g.size(), static_cast<int>(2 * d));
  return WindowedGraph(std::move(g), std::move(ambient), margin, radius);
}

FiniteGraph build_cayley_finite(const std::vector<std::int64_t>& moduli,
                                const std::vector<GroupElement>& generators) {
  if (moduli.empty()) throw ConfigError("finite Cayley graph needs at least one modulus");
  AbelianGroup group(0, moduli);
  std::vector<GroupElement> gens;
  gens.reserve(generators.size());
  for (const auto& s : generators) gens.push_back(group.reduce(s));

  // Enumerate the whole group in mixed-radix order.
  const std::int64_t order = group.torsion_order();
  std::vector<GroupElement> vertices;
  vertices.reserve(static_cast<std::size_t>(order));
  std::vector<std::int64_t> r(moduli.size(), 0);
  for (std::int64_t n = 0; n < order; ++n) {
    vertices.emplace_back(std::vector<std::int64_t>{}, r);
    for (std::size_t j = moduli.size(); j-- > 0;) {
      if (++r[j] < moduli[j]) break;
      r[j] = 0;
    }
  }
  FiniteGraph g(group, std::move(vertices));
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const auto w = group.add(g.vertex(static_cast<int>(v)), gens[s]);
      const int wi = g.index_of(w);
      if (wi != static_cast<int>(v)) g.add_edge(static_cast<int>(v), wi, static_cast<int>(s));
    }
  }
  // Orbit closure of 0 must be everything.
  const auto dist = bfs_distances(g, 0);
  if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) {
    throw ConfigError("generators do not generate the group");
  }
  return g;
}

std::vector<int> bfs_distances(const FiniteGraph& g, int source) {
  std::vector<int> dist(g.size(), kUnreachable);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbours(u)) {
      if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

FiniteGraph graph_power(const FiniteGraph& g, int k) {
  if (k < 1) throw ConfigError("graph power exponent must be >= 1");
  FiniteGraph out(g.group(), g.vertices());
  std::vector<int> dist(g.size(), kUnreachable);
  std::vector<int> touched;
  for (std::size_t s = 0; s < g.size(); ++s) {
    const int src = static_cast<int>(s);
    touched.assign(1, src);
    dist[s] = 0;
    for (std::size_t head = 0; head < touched.size(); ++head) {
      const int u = touched[head];
      if (dist[static_cast<std::size_t>(u)] == k) continue;
      for (int w : g.neighbours(u)) {
        if (dist[static_cast<std::size_t>(w)] != kUnreachable) continue;
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        touched.push_back(w);
      }
    }
    for (int w : touched) {
      if (w > src) out.add_edge(src, w);
      dist[static_cast<std::size_t>(w)] = kUnreachable;
    }
  }
  return out;
}

int graph_distance(const FiniteGraph& g, int u, int v) {
  if (u == v) return 0;
  return bfs_distances(g, u)[static_cast<std::size_t>(v)];
}

int graph_distance(const FiniteGraph& g, const GroupElement& u, const GroupElement& v) {
  const int ui = g.index_of(u);
  const int vi = g.index_of(v);
  if (ui < 0 || vi < 0) throw StructureError("graph_distance: vertex not in graph");
  return graph_distance(g, ui, vi);
}

bool within_distance(const FiniteGraph& g, int u, int v, int k) {
  if (u == v) return true;
  std::vector<std::pair<int, int>> frontier{{u, 0}};
  std::vector<int> seen{u};
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const auto [x, d] = frontier[head];
    if (d == k) continue;
    for (int w : g.neighbours(x)) {
      if (w == v) return true;
      if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
      seen.push_back(w);
      frontier.emplace_back(w, d + 1);
    }
  }
  return false;
}

TranslatedEdges translate_edge_set(const EdgeSet& edges, const GroupElement& g,
                                   const AbelianGroup& group, const FiniteGraph* carrier) {
  TranslatedEdges out;
  for (const auto& [a, b] : edges) {
    auto ta = group.add(a, g);
    auto tb = group.add(b, g);
    if (carrier != nullptr && (!carrier->contains(ta) || !carrier->contains(tb))) {
      ++out.dropped;
      continue;
    }
    out.edges.insert(ta, tb);
  }
  return out;
}

}  // namespace dray
