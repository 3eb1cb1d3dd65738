#include "dray/cube_ray.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace dray {

OrderAssignment::OrderAssignment(std::vector<std::vector<int>> ranks) : ranks_(std::move(ranks)) {
  for (const auto& r : ranks_) {
    std::vector<int> sorted(r);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i)) throw StructureError("vertex order is not a permutation");
    }
  }
}

OrderAssignment sample_orders(const WindowedGraph& g, Rng& rng) {
  std::vector<std::vector<int>> ranks(g.size());
  std::vector<int> perm;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto slots = static_cast<std::size_t>(g.ambient_degree(static_cast<int>(v)));
    perm.resize(slots);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ranks[v].assign(slots, 0);
    for (std::size_t pos = 0; pos < slots; ++pos) ranks[v][static_cast<std::size_t>(perm[pos])] = static_cast<int>(pos);
  }
  return OrderAssignment(std::move(ranks));
}

int order_key(const SpanningTreeWithEnds& t, const OrderAssignment& orders, int v, int u) {
  const auto& g = t.window().graph();
  if (!t.is_end(u)) {
    const int slot = g.slot_of(v, u);
    if (slot < 0) throw StructureError("order_key: not a neighbour");
    return orders.rank(v, static_cast<std::size_t>(slot));
  }
  const std::size_t slot = g.degree(v) + static_cast<std::size_t>(u - t.end_vertex(0));
  if (slot < orders.slots(v)) return orders.rank(v, slot);
  return INT_MAX - 2 + (u - t.end_vertex(0));
}

std::vector<int> ordered_finite_neighbours(const SpanningTreeWithEnds& t, const OrderAssignment& orders, int v) {
  const auto fin = t.finite_neighbours(v);
  std::vector<std::pair<int, int>> keyed;
  keyed.reserve(fin.size());
  for (int u : fin) keyed.emplace_back(order_key(t, orders, v, u), u);
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  out.reserve(keyed.size());
  for (const auto& [k, u] : keyed) out.push_back(u);
  return out;
}

int kth_child(const SpanningTreeWithEnds& t, const OrderAssignment& orders, int v, std::size_t i) {
  const auto ch = ordered_finite_neighbours(t, orders, v);
  if (i < 1 || i > ch.size()) throw std::out_of_range("kth_child index out of range");
  return ch[i - 1];
}

int dagger(const SpanningTreeWithEnds& t, const OrderAssignment& orders, int v) {
  const auto fin = t.finite_neighbours(v);
  if (fin.empty()) return v;
  int best = fin.front();
  int best_key = order_key(t, orders, v, best);
  for (int u : fin) {
    const int k = order_key(t, orders, v, u);
    if (k > best_key) {
      best = u;
      best_key = k;
    }
  }
  return best;
}

std::vector<int> all_daggers(const SpanningTreeWithEnds& t, const OrderAssignment& orders) {
  std::vector<int> out(t.window_size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = dagger(t, orders, static_cast<int>(v));
  return out;
}

const char* rule_tag(PhiRule r) {
  switch (r) {
    case PhiRule::Up: return "i";
    case PhiRule::Across: return "ii";
    case PhiRule::TrunkBoth: return "iii-a";
    case PhiRule::TrunkOne: return "iii-b";
    case PhiRule::TrunkNeither: return "iii-c";
  }
  return "?";
}

EdgeSet PhiResult::edge_set() const {
  EdgeSet out;
  const auto& g = window->graph();
  for (const auto& e : edges) out.insert(g.vertex(e.a), g.vertex(e.b));
  return out;
}

std::size_t PhiResult::count(PhiRule r) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [r](const PhiEdge& e) { return e.rule == r; }));
}

PhiResult phi_edges(const SpanningTreeWithEnds& t, const OrderAssignment& orders, EndMode mode) {
  const std::size_t n = t.window_size();
  if (orders.size() != n) throw StructureError("order assignment does not match the tree's window");
  if (mode == EndMode::OneEnded && t.end_count() != 1) {
    throw ConfigError("one-ended mode needs a one-ended tree");
  }

  PhiResult out;
  out.window = &t.window();
  out.dagger = all_daggers(t, orders);
  const auto& dag = out.dagger;

  for (std::size_t vi = 0; vi < n; ++vi) {
    const int v = static_cast<int>(vi);
    const auto ch = ordered_finite_neighbours(t, orders, v);
    if (ch.empty()) continue;
    out.edges.push_back({v, dag[static_cast<std::size_t>(ch.front())], PhiRule::Up, v});
    for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
      out.edges.push_back({ch[i], dag[static_cast<std::size_t>(ch[i + 1])], PhiRule::Across, v});
    }
  }

  if (mode == EndMode::Auto) {
    auto max_infinite = [&](int v) {
      const auto inf = t.infinite_neighbours(v);
      int best = inf.front();
      for (int u : inf) {
        if (order_key(t, orders, v, u) > order_key(t, orders, v, best)) best = u;
      }
      return best;
    };
    for (auto [u, v] : t.trunk_edges()) {
      const bool u_plain = max_infinite(u) == v;  // u-side attaches at u itself
      const bool v_plain = max_infinite(v) == u;
      const int a = u_plain ? u : dag[static_cast<std::size_t>(u)];
      const int b = v_plain ? v : dag[static_cast<std::size_t>(v)];
      const PhiRule rule = (u_plain && v_plain)   ? PhiRule::TrunkBoth
                           : (u_plain || v_plain) ? PhiRule::TrunkOne
                                                  : PhiRule::TrunkNeither;
      out.edges.push_back({a, b, rule, u, v});
    }
  }

  out.boundary_affected.assign(n, false);
  for (std::size_t vi = 0; vi < n; ++vi) {
    const int v = static_cast<int>(vi);
    bool touches_end = t.is_end(t.parent(v));
    for (int c : t.children(v)) touches_end = touches_end || t.is_end(c);
    if (touches_end) {
      out.boundary_affected[vi] = true;
      out.boundary_affected[static_cast<std::size_t>(dag[vi])] = true;
    }
  }
  return out;
}

EdgeSet finite_hamilton_cycle(const SpanningTreeWithEnds& rooted, const OrderAssignment& orders) {
  const std::size_t n = rooted.window_size();
  if (n < 3) throw StructureError("a Hamilton cycle needs at least 3 vertices");
  if (rooted.end_count() != 1) throw StructureError("finite construction needs a rooted (one-ended) tree");
  const auto att = rooted.end_attachments(0);
  if (att.size() != 1) throw StructureError("the end must be attached to the root only");
  const int root = att.front();

  const auto phi = phi_edges(rooted, orders, EndMode::OneEnded);
  auto cycle = phi.edge_set();
  if (cycle.size() != phi.edges.size()) throw StructureError("rules emitted a repeated edge");
  const auto& g = rooted.window().graph();
  if (!cycle.insert(g.vertex(root), g.vertex(phi.dagger[static_cast<std::size_t>(root)]))) {
    throw StructureError("closing edge already present");
  }
  return cycle;
}

}  // namespace dray
