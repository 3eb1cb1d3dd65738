#include "dray/spanning_tree.hpp"

#include <algorithm>
#include <string>

namespace dray {

namespace {

void require_connected(const FiniteGraph& g) {
  if (g.size() == 0) throw StructureError("empty window");
  const auto dist = bfs_distances(g, 0);
  if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) {
    throw StructureError("window is disconnected");
  }
}

/// Wilson's algorithm. Walks run until they hit `in_tree`; a walk at v steps
/// to each window neighbour with weight 1 and to `sink` with weight
/// `sink_weight[v]`. The resulting parent pointers are written to `parent`.
void wilson(const FiniteGraph& g, std::vector<bool>& in_tree, std::vector<int>& parent,
            const std::vector<int>& sink_weight, int sink, Rng& rng) {
  const std::size_t n = g.size();
  std::vector<int> next(parent.size(), kNoParent);
  for (std::size_t start = 0; start < n; ++start) {
    int u = static_cast<int>(start);
    while (!in_tree[static_cast<std::size_t>(u)]) {
      const auto nb = g.neighbours(u);
      const int extra = sink_weight.empty() ? 0 : sink_weight[static_cast<std::size_t>(u)];
      const int total = static_cast<int>(nb.size()) + extra;
      const int r = std::uniform_int_distribution<int>(0, total - 1)(rng);
      const int step = r < static_cast<int>(nb.size()) ? nb[static_cast<std::size_t>(r)] : sink;
      next[static_cast<std::size_t>(u)] = step;
      u = step;
    }
    // Following the last exits from `start` retraces the loop erasure.
    u = static_cast<int>(start);
    while (!in_tree[static_cast<std::size_t>(u)]) {
      in_tree[static_cast<std::size_t>(u)] = true;
      parent[static_cast<std::size_t>(u)] = next[static_cast<std::size_t>(u)];
      u = next[static_cast<std::size_t>(u)];
    }
  }
}

}  // namespace

SpanningTreeWithEnds::SpanningTreeWithEnds(const WindowedGraph& window, std::vector<int> parent,
                                           int ends)
    : window_(&window), n_(window.size()), ends_(ends), parent_(std::move(parent)) {
  if (ends_ != 1 && ends_ != 2) throw StructureError("a tree must have 1 or 2 ends");
  const std::size_t total = n_ + static_cast<std::size_t>(ends_);
  if (parent_.size() != total) throw StructureError("parent map has wrong length");
  const int d1 = end_vertex(0);
  if (parent_[static_cast<std::size_t>(d1)] != kNoParent) throw StructureError("∂1 must be the root");

  const auto& g = window.graph();
  for (std::size_t x = 0; x < total; ++x) {
    if (static_cast<int>(x) == d1) continue;
    const int p = parent_[x];
    if (p < 0 || p >= static_cast<int>(total)) {
      throw StructureError("vertex " + std::to_string(x) + " has no valid parent");
    }
    const bool x_end = is_end(static_cast<int>(x));
    const bool p_end = is_end(p);
    if (x_end && p_end) throw StructureError("end-vertices cannot be adjacent");
    if (!x_end && !p_end && !g.adjacent(static_cast<int>(x), p)) {
      throw StructureError("tree edge " + g.vertex(static_cast<int>(x)).to_string() + "-" +
                           g.vertex(p).to_string() + " is not a window edge");
    }
    if (ends_ == 2 && p == end_vertex(1)) throw StructureError("∂2 must be a leaf");
  }

  // Every vertex must reach ∂1 without revisiting (acyclic + connected).
  std::vector<char> state(total, 0);  // 0 unseen, 1 on current chain, 2 reaches root
  state[static_cast<std::size_t>(d1)] = 2;
  std::vector<int> chain;
  for (std::size_t s = 0; s < total; ++s) {
    int x = static_cast<int>(s);
    chain.clear();
    while (state[static_cast<std::size_t>(x)] == 0) {
      state[static_cast<std::size_t>(x)] = 1;
      chain.push_back(x);
      x = parent_[static_cast<std::size_t>(x)];
    }
    if (state[static_cast<std::size_t>(x)] == 1) throw StructureError("parent map contains a cycle");
    for (int c : chain) state[static_cast<std::size_t>(c)] = 2;
  }

  children_.assign(total, {});
  for (std::size_t x = 0; x < total; ++x) {
    if (parent_[x] != kNoParent) children_[static_cast<std::size_t>(parent_[x])].push_back(static_cast<int>(x));
  }
  for (int e = 0; e < ends_; ++e) {
    if (children_[static_cast<std::size_t>(end_vertex(e))].empty() && e == 0) {
      throw StructureError("∂1 is not attached to the window");
    }
  }

  trunk_.assign(total, false);
  if (ends_ == 2) {
    for (int x = end_vertex(1); x != kNoParent; x = parent_[static_cast<std::size_t>(x)]) {
      trunk_[static_cast<std::size_t>(x)] = true;
    }
  }

  inf_.assign(n_, {});
  fin_.assign(n_, {});
  for (std::size_t v = 0; v < n_; ++v) {
    inf_[v].push_back(parent_[v]);
    for (int c : children_[v]) {
      (trunk_[static_cast<std::size_t>(c)] ? inf_[v] : fin_[v]).push_back(c);
    }
  }

  // Heights bottom-up along a BFS order from ∂1.
  std::vector<int> order{d1};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int c : children_[static_cast<std::size_t>(order[head])]) order.push_back(c);
  }
  height_.assign(n_, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (is_end(v)) continue;
    int h = 0;
    for (int c : fin_[static_cast<std::size_t>(v)]) h = std::max(h, height_[static_cast<std::size_t>(c)] + 1);
    height_[static_cast<std::size_t>(v)] = h;
  }
}

std::vector<int> SpanningTreeWithEnds::neighbours(int x) const {
  std::vector<int> out;
  if (parent(x) != kNoParent) out.push_back(parent(x));
  const auto ch = children(x);
  out.insert(out.end(), ch.begin(), ch.end());
  return out;
}

std::vector<int> SpanningTreeWithEnds::end_attachments(int i) const {
  if (i >= ends_) return {};
  const int e = end_vertex(i);
  if (i == 0) {
    const auto ch = children(e);
    return {ch.begin(), ch.end()};
  }
  return {parent(e)};
}

std::vector<int> SpanningTreeWithEnds::finite_subtree(int v) const {
  std::vector<int> out{v};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int c : fin_[static_cast<std::size_t>(out[head])]) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int SpanningTreeWithEnds::finite_class_root(int v) const {
  while (!on_trunk(v)) {
    const int p = parent(v);
    if (is_end(p)) break;
    v = p;
  }
  return v;
}

std::vector<std::pair<int, int>> SpanningTreeWithEnds::trunk_edges() const {
  std::vector<std::pair<int, int>> out;
  if (ends_ != 2) return out;
  for (int x = parent(end_vertex(1)); x != kNoParent; x = parent(x)) {
    const int p = parent(x);
    if (p == kNoParent || is_end(p)) break;
    out.emplace_back(p, x);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> SpanningTreeWithEnds::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t x = 0; x < parent_.size(); ++x) {
    if (parent_[x] != kNoParent) out.emplace_back(static_cast<int>(x), parent_[x]);
  }
  return out;
}

SpanningTreeWithEnds wilson_wired_ust(const WindowedGraph& window, Rng& rng) {
  const auto& g = window.graph();
  require_connected(g);
  const std::size_t n = g.size();
  std::vector<int> sink_weight(n);
  bool any = false;
  for (std::size_t v = 0; v < n; ++v) {
    sink_weight[v] = window.outside_degree(static_cast<int>(v));
    any = any || sink_weight[v] > 0;
  }
  if (!any) throw StructureError("window has no frontier to wire");
  std::vector<int> parent(n + 1, kNoParent);
  std::vector<bool> in_tree(n + 1, false);
  in_tree[n] = true;
  wilson(g, in_tree, parent, sink_weight, static_cast<int>(n), rng);
  return SpanningTreeWithEnds(window, std::move(parent), 1);
}

SpanningTreeWithEnds two_ended_tree(const WindowedGraph& window, std::size_t axis, Rng& rng) {
  const auto& g = window.graph();
  const auto& group = g.group();
  if (axis >= group.rank()) throw ConfigError("axis index exceeds window dimension");
  require_connected(g);

  // Collect the axis line through the origin and require it to be contiguous.
  std::vector<std::pair<std::int64_t, int>> line;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto& x = g.vertex(static_cast<int>(v));
    bool on_axis = std::all_of(x.torsion.begin(), x.torsion.end(), [](auto t) { return t == 0; });
    for (std::size_t i = 0; i < x.free.size() && on_axis; ++i) {
      if (i != axis && x.free[i] != 0) on_axis = false;
    }
    if (on_axis) line.emplace_back(x.free[axis], static_cast<int>(v));
  }
  if (line.empty()) throw ConfigError("axis line does not meet the window");
  std::sort(line.begin(), line.end());
  for (std::size_t i = 1; i < line.size(); ++i) {
    if (line[i].first != line[i - 1].first + 1) throw ConfigError("axis line is not contained in the window");
  }
  if (!window.is_frontier(line.front().second) || !window.is_frontier(line.back().second)) {
    throw ConfigError("axis line does not reach the window frontier");
  }

  const std::size_t n = g.size();
  std::vector<int> parent(n + 2, kNoParent);
  std::vector<bool> in_tree(n + 2, false);
  in_tree[n] = in_tree[n + 1] = true;
  parent[static_cast<std::size_t>(line.front().second)] = static_cast<int>(n);
  in_tree[static_cast<std::size_t>(line.front().second)] = true;
  for (std::size_t i = 1; i < line.size(); ++i) {
    parent[static_cast<std::size_t>(line[i].second)] = line[i - 1].second;
    in_tree[static_cast<std::size_t>(line[i].second)] = true;
  }
  parent[n + 1] = line.back().second;
  wilson(g, in_tree, parent, {}, -1, rng);
  return SpanningTreeWithEnds(window, std::move(parent), 2);
}

std::vector<int> wilson_rooted_parents(const FiniteGraph& g, int root, Rng& rng) {
  require_connected(g);
  std::vector<int> parent(g.size(), kNoParent);
  std::vector<bool> in_tree(g.size(), false);
  in_tree[static_cast<std::size_t>(root)] = true;
  wilson(g, in_tree, parent, {}, -1, rng);
  return parent;
}

WindowedGraph closed_window(FiniteGraph g) {
  std::vector<int> ambient(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) ambient[v] = static_cast<int>(g.degree(static_cast<int>(v)));
  return WindowedGraph(std::move(g), std::move(ambient), 0);
}

SpanningTreeWithEnds rooted_tree(const WindowedGraph& window,
                                 const std::vector<std::pair<int, int>>& tree_edges, int root) {
  const std::size_t n = window.size();
  if (tree_edges.size() + 1 != n) throw StructureError("a spanning tree needs n - 1 edges");
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : tree_edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> parent(n + 1, kNoParent);
  std::vector<bool> seen(n, false);
  std::vector<int> queue{root};
  seen[static_cast<std::size_t>(root)] = true;
  parent[static_cast<std::size_t>(root)] = static_cast<int>(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      parent[static_cast<std::size_t>(w)] = u;
      queue.push_back(w);
    }
  }
  if (queue.size() != n) throw StructureError("tree edges do not span the graph");
  return SpanningTreeWithEnds(window, std::move(parent), 1);
}

std::vector<int> infinite_neighbours(const SpanningTreeWithEnds& t, int v) {
  const auto s = t.infinite_neighbours(v);
  return {s.begin(), s.end()};
}

std::vector<int> finite_subtree(const SpanningTreeWithEnds& t, int v) { return t.finite_subtree(v); }

int subtree_height(const SpanningTreeWithEnds& t, int v) { return t.subtree_height(v); }

EdgeSet trunk_double_ray(const SpanningTreeWithEnds& t) {
  EdgeSet out;
  const auto& g = t.window().graph();
  for (auto [u, v] : t.trunk_edges()) out.insert(g.vertex(u), g.vertex(v));
  return out;
}

}  // namespace dray
