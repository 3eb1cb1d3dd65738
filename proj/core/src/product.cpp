#include "dray/product.hpp"

#include <algorithm>
#include <unordered_map>

namespace dray {

namespace {

using Adjacency = std::unordered_map<GroupElement, std::vector<GroupElement>>;

Adjacency adjacency_of(const EdgeSet& e) {
  Adjacency adj;
  for (const auto& [a, b] : e) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

/// Odometer over [-r, r]^d in lexicographic order.
template <typename Fn>
void for_each_box_point(std::size_t d, std::int64_t r, Fn&& fn) {
  if (r < 0) return;
  std::vector<std::int64_t> c(d, -r);
  while (true) {
    fn(GroupElement(c));
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (c[i] < r) {
        ++c[i];
        break;
      }
      c[i] = -r;
      if (i == 0) return;
    }
    if (d == 0) return;
  }
}

GroupElement map_vertex(const LineMap& f, const GroupElement& v) {
  const auto& head = f.at(v.free[0]);
  std::vector<std::int64_t> out{head.free[0], head.free[1]};
  out.insert(out.end(), v.free.begin() + 1, v.free.end());
  return GroupElement(std::move(out));
}

}  // namespace

TrustedRegion box_interior(std::size_t d, int radius, int margin) {
  std::vector<GroupElement> vs;
  for_each_box_point(d, radius - margin, [&](GroupElement g) { vs.push_back(std::move(g)); });
  return TrustedRegion(std::move(vs), "box [-" + std::to_string(radius - margin) + "," +
                                          std::to_string(radius - margin) + "]^" + std::to_string(d));
}

LatticeSample sample_z2_ray(const TileWindow& tw, int margin, Rng& rng) {
  if (margin < 6) throw ConfigError("tiling samples need margin >= 6");
  if (tw.radius - margin < 1) throw ConfigError("tiling window too small for its margin");
  const auto s = sample_tiling(tw, rng, true);
  LatticeSample out;
  out.dimension = 2;
  out.edges = s.classes().solid;
  out.trusted = box_interior(2, tw.radius, margin);
  out.construction = "tiling(radius=" + std::to_string(tw.radius) + ",shift=(" + std::to_string(s.shift.x) + "," +
                     std::to_string(s.shift.y) + "),class=solid)";
  return out;
}

LineMap line_map(const LatticeSample& r12, bool heads) {
  const GroupElement origin{0, 0};
  const auto adj = adjacency_of(r12.edges);
  const auto it = adj.find(origin);
  if (!r12.trusted.contains(origin) || it == adj.end() || it->second.size() != 2) {
    throw StructureError("origin is not a trusted degree-2 vertex of R12");
  }
  auto nbrs = it->second;
  std::sort(nbrs.begin(), nbrs.end());
  if (!heads) std::swap(nbrs[0], nbrs[1]);

  auto walk = [&](GroupElement cur) {
    std::vector<GroupElement> seq;
    GroupElement prev = origin;
    while (cur != origin && r12.trusted.contains(cur)) {
      const auto& nb = adj.at(cur);
      if (nb.size() != 2) break;
      seq.push_back(cur);
      GroupElement next = nb[0] == prev ? nb[1] : nb[0];
      prev = std::move(cur);
      cur = std::move(next);
    }
    return seq;
  };
  const auto forward = walk(nbrs[0]);
  const auto backward = walk(nbrs[1]);

  LineMap f;
  f.lo = -static_cast<std::int64_t>(backward.size());
  f.image.assign(backward.rbegin(), backward.rend());
  f.image.push_back(origin);
  f.image.insert(f.image.end(), forward.begin(), forward.end());
  return f;
}

LatticeSample product_ray(const LatticeSample& r12, const LatticeSample& inner, bool heads) {
  if (r12.dimension != 2) throw ConfigError("R12 must be a Z^2 sample");
  if (inner.dimension < 2) throw ConfigError("inner sample must have dimension >= 2");
  const LineMap f = line_map(r12, heads);

  LatticeSample out;
  out.dimension = inner.dimension + 1;
  for (const auto& [a, b] : inner.edges) {
    if (!f.defined(a.free[0]) || !f.defined(b.free[0])) {
      ++out.dropped;
      continue;
    }
    out.edges.insert(map_vertex(f, a), map_vertex(f, b));
  }
  std::vector<GroupElement> trusted;
  for (const auto& v : inner.trusted.vertices()) {
    const auto a = v.free[0];
    if (f.defined(a - 1) && f.defined(a + 1)) trusted.push_back(map_vertex(f, v));
  }
  out.trusted = TrustedRegion(std::move(trusted), "image of the inner trusted region under f x id, f defined on [" +
                                                      std::to_string(f.lo) + "," + std::to_string(f.hi()) + "]");
  out.construction = "product(" + std::string(heads ? "heads" : "tails") + ", R12=" + r12.construction +
                     ", inner=" + inner.construction + ")";
  return out;
}

LatticeSample product_ray_z3(const LatticeSample& r12, const LatticeSample& r3, bool heads) {
  if (r3.dimension != 2) throw ConfigError("R3 must be a Z^2 sample");
  return product_ray(r12, r3, heads);
}

LatticeSample spanning_copy(const LatticeSample& r12, const LatticeSample& h) {
  auto vertex_set = [](const LatticeSample& s) {
    auto vs = s.edges.vertices();
    vs.insert(vs.end(), s.trusted.vertices().begin(), s.trusted.vertices().end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  };
  auto join = [](const GroupElement& x, const GroupElement& y) {
    std::vector<std::int64_t> c = x.free;
    c.insert(c.end(), y.free.begin(), y.free.end());
    return GroupElement(std::move(c));
  };
  const auto xs = vertex_set(r12);
  const auto hs = vertex_set(h);

  LatticeSample out;
  out.dimension = r12.dimension + h.dimension;
  for (const auto& [a, b] : r12.edges) {
    for (const auto& y : hs) out.edges.insert(join(a, y), join(b, y));
  }
  for (const auto& x : xs) {
    for (const auto& [a, b] : h.edges) out.edges.insert(join(x, a), join(x, b));
  }
  std::vector<GroupElement> trusted;
  for (const auto& x : r12.trusted.vertices()) {
    for (const auto& y : h.trusted.vertices()) trusted.push_back(join(x, y));
  }
  out.trusted = TrustedRegion(std::move(trusted), "R12 trusted x H trusted");
  out.construction = "copy(R12=" + r12.construction + ", H=" + h.construction + ")";
  return out;
}

LatticeSample grid_structure(std::size_t d, int radius) {
  LatticeSample out;
  out.dimension = d;
  std::vector<GroupElement> inner;
  for_each_box_point(d, radius, [&](const GroupElement& g) {
    for (std::size_t i = 0; i < d; ++i) {
      if (g.free[i] < radius) {
        auto h = g;
        ++h.free[i];
        out.edges.insert(g, h);
      }
    }
    const bool interior = std::all_of(g.free.begin(), g.free.end(),
                                      [radius](std::int64_t c) { return c > -radius && c < radius; });
    if (interior) inner.push_back(g);
  });
  out.trusted = TrustedRegion(std::move(inner), "grid interior, radius " + std::to_string(radius));
  out.construction = "grid(d=" + std::to_string(d) + ",radius=" + std::to_string(radius) + ")";
  return out;
}

ProductSample product_ray_zd(std::size_t d, int radius, int margin, Rng& rng, int copy_radius) {
  if (d < 3) throw ConfigError("product construction needs d >= 3");
  const auto tw = build_tile_window(radius);

  ProductSample out;
  LatticeSample level = sample_z2_ray(tw, margin, rng);
  LatticeSample r12;
  for (std::size_t k = 3; k <= d; ++k) {
    r12 = sample_z2_ray(tw, margin, rng);
    const bool heads = coin_flip(rng);
    level = product_ray(r12, level, heads);
    ++out.depth;
  }
  out.copy = spanning_copy(r12, grid_structure(d - 2, copy_radius));
  out.ray = std::move(level);
  return out;
}

}  // namespace dray
