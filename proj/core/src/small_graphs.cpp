#include "dray/small_graphs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>

#include "dray/checks.hpp"
#include "dray/random.hpp"

namespace dray {

int pair_bit(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

bool SmallGraph::has(int i, int j) const { return i != j && ((bits >> pair_bit(i, j)) & 1U) != 0; }

std::size_t SmallGraph::edge_count() const { return static_cast<std::size_t>(std::popcount(bits)); }

std::vector<std::pair<int, int>> SmallGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (has(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool SmallGraph::connected() const {
  if (n <= 1) return true;
  unsigned seen = 1;
  unsigned frontier = 1;
  while (frontier != 0) {
    unsigned next = 0;
    for (int v = 0; v < n; ++v) {
      if (!((frontier >> v) & 1U)) continue;
      for (int w = 0; w < n; ++w) {
        if (has(v, w) && !((seen >> w) & 1U)) next |= 1U << w;
      }
    }
    seen |= next;
    frontier = next;
  }
  return seen == (1U << n) - 1;
}

SmallGraph canonical_form(const SmallGraph& g) {
  const auto es = g.edges();
  std::array<int, kMaxSmallVertices> perm{};
  std::iota(perm.begin(), perm.begin() + g.n, 0);
  std::uint32_t best = g.bits;
  do {
    std::uint32_t b = 0;
    for (const auto& [i, j] : es) b |= 1U << pair_bit(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    best = std::min(best, b);
  } while (std::next_permutation(perm.begin(), perm.begin() + g.n));
  return {g.n, best};
}

std::vector<SmallGraph> connected_graphs(int n) {
  if (n < 1 || n > kMaxSmallVertices) throw ConfigError("connected_graphs supports 1..7 vertices");
  std::vector<SmallGraph> level{{1, 0}};
  for (int k = 2; k <= n; ++k) {
    // Every connected graph has a vertex whose removal keeps it connected.
    std::set<SmallGraph> next;
    for (const auto& g : level) {
      for (unsigned s = 1; s < (1U << (k - 1)); ++s) {
        SmallGraph h{k, g.bits};
        for (int i = 0; i < k - 1; ++i) {
          if ((s >> i) & 1U) h.bits |= 1U << pair_bit(i, k - 1);
        }
        next.insert(canonical_form(h));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return level;
}

FiniteGraph to_finite_graph(const SmallGraph& g) {
  std::vector<GroupElement> vs;
  for (int i = 0; i < g.n; ++i) vs.push_back(GroupElement{i});
  FiniteGraph out(AbelianGroup::lattice(1), std::move(vs));
  for (const auto& [i, j] : g.edges()) out.add_edge(i, j);
  return out;
}

std::vector<std::vector<std::pair<int, int>>> spanning_trees(const SmallGraph& g) {
  const auto es = g.edges();
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> chosen;
  const auto need = static_cast<std::size_t>(std::max(0, g.n - 1));

  using Parents = std::array<int, kMaxSmallVertices>;
  auto find = [](Parents& p, int x) {
    while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)];
    return x;
  };
  auto rec = [&](auto&& self, std::size_t from, Parents p) -> void {
    if (chosen.size() == need) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t k = from; k + (need - chosen.size()) <= es.size(); ++k) {
      const auto [a, b] = es[k];
      const int ra = find(p, a);
      const int rb = find(p, b);
      if (ra == rb) continue;
      Parents q = p;
      q[static_cast<std::size_t>(rb)] = ra;
      chosen.push_back(es[k]);
      self(self, k + 1, q);
      chosen.pop_back();
    }
  };
  Parents p{};
  std::iota(p.begin(), p.end(), 0);
  rec(rec, 0, p);
  return out;
}

std::vector<OrderAssignment> child_orders(const SpanningTreeWithEnds& rooted) {
  const auto& g = rooted.window().graph();
  const std::size_t n = rooted.window_size();
  std::vector<std::vector<std::vector<int>>> per_vertex(n);  // all rank vectors of v
  for (std::size_t vi = 0; vi < n; ++vi) {
    const int v = static_cast<int>(vi);
    const auto fin = rooted.finite_neighbours(v);
    const std::size_t slots = static_cast<std::size_t>(rooted.window().ambient_degree(v));
    std::vector<int> child_slots;
    for (int u : fin) child_slots.push_back(g.slot_of(v, u));
    std::vector<int> others;
    for (std::size_t s = 0; s < slots; ++s) {
      if (std::find(child_slots.begin(), child_slots.end(), static_cast<int>(s)) == child_slots.end()) {
        others.push_back(static_cast<int>(s));
      }
    }
    std::vector<int> pos(fin.size());
    std::iota(pos.begin(), pos.end(), 0);
    do {
      std::vector<int> ranks(slots);
      for (std::size_t c = 0; c < child_slots.size(); ++c) ranks[static_cast<std::size_t>(child_slots[c])] = pos[c];
      for (std::size_t o = 0; o < others.size(); ++o) {
        ranks[static_cast<std::size_t>(others[o])] = static_cast<int>(child_slots.size() + o);
      }
      per_vertex[vi].push_back(std::move(ranks));
    } while (std::next_permutation(pos.begin(), pos.end()));
  }

  std::vector<OrderAssignment> out;
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::vector<std::vector<int>> ranks(n);
    for (std::size_t v = 0; v < n; ++v) ranks[v] = per_vertex[v][digit[v]];
    out.emplace_back(std::move(ranks));
    std::size_t v = 0;
    while (v < n && ++digit[v] == per_vertex[v].size()) digit[v++] = 0;
    if (v == n) break;
  }
  return out;
}

namespace {

/// Hamilton-cycle-of-G^3 check on index pairs; empty string when valid.
std::string cycle_defect(const EdgeSet& cycle, const FiniteGraph& g, const std::vector<std::vector<int>>& dist) {
  const std::size_t n = g.size();
  if (cycle.size() != n) return "cycle has " + std::to_string(cycle.size()) + " edges on " + std::to_string(n) + " vertices";
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : cycle) {
    const int ia = g.index_of(a);
    const int ib = g.index_of(b);
    if (ia < 0 || ib < 0) return "edge leaves the graph";
    if (dist[static_cast<std::size_t>(ia)][static_cast<std::size_t>(ib)] > 3) {
      return "edge " + a.to_string() + "-" + b.to_string() + " is longer than 3";
    }
    adj[static_cast<std::size_t>(ia)].push_back(ib);
    adj[static_cast<std::size_t>(ib)].push_back(ia);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() != 2) return "vertex " + std::to_string(v) + " has degree " + std::to_string(adj[v].size());
  }
  // 2-regular with n edges: a Hamilton cycle iff the walk from 0 returns after n steps.
  int prev = -1;
  int cur = 0;
  for (std::size_t step = 0; step < n; ++step) {
    const auto& nb = adj[static_cast<std::size_t>(cur)];
    const int next = nb[0] != prev ? nb[0] : nb[1];
    prev = cur;
    cur = next;
    if (cur == 0 && step + 1 < n) return "cycle closes after " + std::to_string(step + 1) + " steps";
  }
  return cur == 0 ? std::string{} : "walk does not close";
}

}  // namespace

SweepReport sweep_finite_cycles(int max_vertices, int exhaustive_up_to, std::size_t random_orders,
                                std::uint64_t seed) {
  if (max_vertices > kMaxSmallVertices) throw ConfigError("sweep supports at most 7 vertices");
  SweepReport report;
  report.graphs_per_size.assign(static_cast<std::size_t>(std::max(0, max_vertices)) + 1, 0);

  for (int n = 3; n <= max_vertices; ++n) {
    const auto graphs = connected_graphs(n);
    report.graphs_per_size[static_cast<std::size_t>(n)] = graphs.size();
    struct PerGraph {
      std::size_t trees = 0;
      std::size_t cycles = 0;
      bool agree = false;
      std::vector<SweepFailure> failures;
    };
    std::vector<PerGraph> results(graphs.size());
    const bool exhaustive = n <= exhaustive_up_to;

    parallel_for(graphs.size(), [&](std::size_t gi) {
      auto& res = results[gi];
      const auto& sg = graphs[gi];
      const auto window = closed_window(to_finite_graph(sg));
      const auto& g = window.graph();
      std::vector<std::vector<int>> dist;
      for (std::size_t v = 0; v < g.size(); ++v) dist.push_back(bfs_distances(g, static_cast<int>(v)));
      const bool brute = brute_force_hamiltonian(graph_power(g, 3));
      const auto trees = spanning_trees(sg);
      res.trees = trees.size();
      const std::uint64_t graph_seed = split_seed(split_seed(seed, static_cast<std::uint64_t>(n)), gi);

      bool all_ok = true;
      for (std::size_t ti = 0; ti < trees.size(); ++ti) {
        std::vector<int> roots;
        if (exhaustive) {
          roots.resize(static_cast<std::size_t>(n));
          std::iota(roots.begin(), roots.end(), 0);
        } else {
          roots.push_back(static_cast<int>(ti % static_cast<std::size_t>(n)));
        }
        for (int root : roots) {
          const auto rooted = rooted_tree(window, trees[ti], root);
          std::vector<OrderAssignment> orders;
          if (exhaustive) {
            orders = child_orders(rooted);
          } else {
            Rng rng = make_rng(graph_seed, ti * static_cast<std::size_t>(kMaxSmallVertices) + static_cast<std::size_t>(root));
            for (std::size_t k = 0; k < random_orders; ++k) orders.push_back(sample_orders(window, rng));
          }
          for (const auto& o : orders) {
            std::string defect;
            try {
              defect = cycle_defect(finite_hamilton_cycle(rooted, o), g, dist);
            } catch (const StructureError& e) {
              defect = e.what();
            }
            ++res.cycles;
            if (!defect.empty()) {
              all_ok = false;
              if (res.failures.size() < 4) res.failures.push_back({sg, trees[ti], root, defect});
            }
          }
        }
      }
      if (!brute) {
        all_ok = false;
        res.failures.push_back({sg, {}, 0, "brute force finds no Hamilton cycle of G^3"});
      }
      res.agree = all_ok && brute;
    });

    for (auto& r : results) {
      ++report.graphs;
      report.trees += r.trees;
      report.cycles += r.cycles;
      report.brute_force_agree += r.agree ? 1 : 0;
      for (auto& f : r.failures) {
        if (report.failures.size() < 50) report.failures.push_back(std::move(f));
      }
    }
  }
  return report;
}

}  // namespace dray
