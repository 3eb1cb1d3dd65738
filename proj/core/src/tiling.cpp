#include "dray/tiling.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dray {

namespace {

constexpr std::array<Point, 4> kTileSteps{{{2, 2}, {2, -2}, {-2, 2}, {-2, -2}}};

std::array<Segment, 8> rectangle_boundary(Point lo, Point hi) {
  std::array<Segment, 8> out{};
  std::size_t k = 0;
  for (auto x = lo.x; x < hi.x; ++x) {
    out[k++] = make_segment({x, lo.y}, {x + 1, lo.y});
    out[k++] = make_segment({x, hi.y}, {x + 1, hi.y});
  }
  for (auto y = lo.y; y < hi.y; ++y) {
    out[k++] = make_segment({lo.x, y}, {lo.x, y + 1});
    out[k++] = make_segment({hi.x, y}, {hi.x, y + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Tile& template_tile() {
  static const Tile t{{0, 0}, rectangle_boundary({-1, 0}, {0, 3}), rectangle_boundary({-2, 1}, {1, 2})};
  return t;
}

std::string str(const Point& p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

/// Template edges lying in one of the tile's four attachment squares.
const std::set<Segment>& template_square_edges() {
  static const std::set<Segment> edges = [] {
    std::set<Segment> out;
    const Tile& t = template_tile();
    for (const auto& step : kTileSteps) {
      const auto sq = attachment(t, make_tile(step));
      for (const auto& e : sq.edges) {
        if (t.contains(e)) out.insert(e);
      }
    }
    return out;
  }();
  return edges;
}

}  // namespace

Segment make_segment(Point a, Point b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

GroupElement to_element(const Point& p) { return GroupElement{p.x, p.y}; }

Point to_point(const GroupElement& g) {
  if (g.free.size() != 2 || !g.torsion.empty()) throw StructureError("not a Z^2 vertex: " + g.to_string());
  return {g.free[0], g.free[1]};
}

Edge to_edge(const Segment& s) { return make_edge(to_element(s.a), to_element(s.b)); }

const char* to_string(Colour c) { return c == Colour::Solid ? "solid" : "dotted"; }

std::size_t Z2Box::edge_count() const {
  const auto r = static_cast<std::size_t>(radius_);
  return 2 * (2 * r) * (2 * r + 1);
}

std::size_t Z2Box::id(const Segment& s) const {
  const auto r = static_cast<std::int64_t>(radius_);
  const auto w = 2 * r;
  if (s.a.y == s.b.y) return static_cast<std::size_t>((s.a.y + r) * w + (s.a.x + r));
  const auto horizontal = w * (w + 1);
  return static_cast<std::size_t>(horizontal + (s.a.x + r) * w + (s.a.y + r));
}

Segment Z2Box::segment(std::size_t id) const {
  const auto r = static_cast<std::int64_t>(radius_);
  const auto w = 2 * r;
  const auto horizontal = static_cast<std::size_t>(w * (w + 1));
  if (id < horizontal) {
    const auto i = static_cast<std::int64_t>(id);
    const Point a{i % w - r, i / w - r};
    return {a, {a.x + 1, a.y}};
  }
  const auto i = static_cast<std::int64_t>(id - horizontal);
  const Point a{i / w - r, i % w - r};
  return {a, {a.x, a.y + 1}};
}

std::vector<Point> Tile::vertices() const {
  std::vector<Point> out;
  for (const auto& cls : {solid, dotted}) {
    for (const auto& s : cls) {
      out.push_back(s.a);
      out.push_back(s.b);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Tile::contains(const Segment& s) const {
  return std::binary_search(solid.begin(), solid.end(), s) ||
         std::binary_search(dotted.begin(), dotted.end(), s);
}

Tile make_tile(Point base) {
  if (!in_tile_lattice(base)) throw StructureError("tile base " + str(base) + " is not in the tile lattice");
  Tile t = template_tile();
  t.base = base;
  for (auto& s : t.solid) s = s + base;
  for (auto& s : t.dotted) s = s + base;
  return t;
}

std::pair<EdgeSet, EdgeSet> tile_template() {
  EdgeSet solid;
  EdgeSet dotted;
  for (const auto& s : template_tile().solid) solid.insert(to_edge(s));
  for (const auto& s : template_tile().dotted) dotted.insert(to_edge(s));
  return {solid, dotted};
}

bool in_tile_lattice(const Point& p) {
  return p.x % 2 == 0 && p.y % 2 == 0 && (p.x + p.y) % 4 == 0;
}

const std::array<Point, 8>& coset_representatives() {
  static const std::array<Point, 8> reps = [] {
    std::array<Point, 8> out{};
    std::size_t k = 0;
    for (std::int64_t x = 0; x < 4 && k < 8; ++x) {
      for (std::int64_t y = 0; y < 4 && k < 8; ++y) {
        const Point p{x, y};
        const bool fresh = std::none_of(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k),
                                        [&](const Point& q) { return in_tile_lattice(p - q); });
        if (fresh) out[k++] = p;
      }
    }
    return out;
  }();
  return reps;
}

AttachmentSquare attachment(const Tile& t, const Tile& u) {
  const Point d = u.base - t.base;
  if (!((d.x == 2 || d.x == -2) && (d.y == 2 || d.y == -2))) {
    throw StructureError("tiles at " + str(t.base) + " and " + str(u.base) + " are not adjacent");
  }
  const auto tv = t.vertices();
  const auto uv = u.vertices();
  std::vector<Point> shared;
  std::set_intersection(tv.begin(), tv.end(), uv.begin(), uv.end(), std::back_inserter(shared));
  if (shared.size() != 2) {
    throw StructureError("adjacent tiles share " + std::to_string(shared.size()) + " vertices, expected 2");
  }
  const Point diff = shared[1] - shared[0];
  if (std::abs(diff.x) != 1 || std::abs(diff.y) != 1) {
    throw StructureError("attachment vertices are not opposite corners of a unit square");
  }
  const Point lo{std::min(shared[0].x, shared[1].x), std::min(shared[0].y, shared[1].y)};
  AttachmentSquare sq;
  sq.tile_a = std::min(t.base, u.base);
  sq.tile_b = std::max(t.base, u.base);
  sq.attachment = {shared[0], shared[1]};
  sq.edges = {make_segment(lo, {lo.x + 1, lo.y}), make_segment(lo, {lo.x, lo.y + 1}),
              make_segment({lo.x + 1, lo.y}, {lo.x + 1, lo.y + 1}),
              make_segment({lo.x, lo.y + 1}, {lo.x + 1, lo.y + 1})};
  std::sort(sq.edges.begin(), sq.edges.end());
  return sq;
}

TwoColouring::TwoColouring(int radius) : box_(radius), colour_(box_.edge_count(), -1) {}

std::optional<Colour> TwoColouring::colour(const Segment& s) const {
  if (!box_.contains(s)) return std::nullopt;
  const auto c = colour_[box_.id(s)];
  if (c < 0) return std::nullopt;
  return static_cast<Colour>(c);
}

void TwoColouring::set(const Segment& s, Colour c) {
  if (!box_.contains(s)) throw StructureError("edge outside the colouring window");
  colour_[box_.id(s)] = static_cast<std::int8_t>(c);
}

void TwoColouring::swap(const Segment& s) {
  const auto c = colour(s);
  if (!c) throw StructureError("cannot swap the colour of an untiled edge");
  set(s, other(*c));
}

EdgeSet TwoColouring::edges_of(Colour c) const {
  EdgeSet out;
  for (std::size_t id = 0; id < colour_.size(); ++id) {
    if (colour_[id] == static_cast<std::int8_t>(c)) out.insert(to_edge(box_.segment(id)));
  }
  return out;
}

std::size_t TwoColouring::tiled_count() const {
  return static_cast<std::size_t>(std::count_if(colour_.begin(), colour_.end(), [](auto c) { return c >= 0; }));
}

int TileWindow::tile_index(const Point& base) const { return graph.graph().index_of(to_element(base)); }

bool TileWindow::is_internal(const Segment& s) const {
  const Z2Box box(radius);
  return box.contains(s) && internal[box.id(s)];
}

std::vector<Tile> tiles_in_window(int radius) {
  std::vector<Tile> out;
  // Template x-range is [-2, 1], y-range [0, 3].
  for (std::int64_t x = -radius + 2; x <= radius - 1; ++x) {
    for (std::int64_t y = -radius; y <= radius - 3; ++y) {
      if (in_tile_lattice({x, y})) out.push_back(make_tile({x, y}));
    }
  }
  return out;
}

TileWindow build_tile_window(int radius) {
  if (radius < 4) throw ConfigError("tiling window radius must be at least 4");
  TileWindow tw;
  tw.radius = radius;
  tw.tiles = tiles_in_window(radius);

  std::vector<GroupElement> bases;
  bases.reserve(tw.tiles.size());
  for (const auto& t : tw.tiles) bases.push_back(to_element(t.base));
  FiniteGraph g(AbelianGroup::lattice(2), std::move(bases));
  for (std::size_t i = 0; i < tw.tiles.size(); ++i) {
    for (int k = 0; k < 2; ++k) {
      const int j = g.index_of(to_element(tw.tiles[i].base + kTileSteps[static_cast<std::size_t>(k)]));
      if (j >= 0) g.add_edge(static_cast<int>(i), j, k);
    }
  }
  tw.graph = WindowedGraph(std::move(g), std::vector<int>(tw.tiles.size(), 4), 0);

  const Z2Box box(radius);
  tw.owner.assign(box.edge_count(), -1);
  tw.internal.assign(box.edge_count(), false);
  const auto& square_edges = template_square_edges();
  for (std::size_t i = 0; i < tw.tiles.size(); ++i) {
    const auto& t = tw.tiles[i];
    for (const auto& cls : {t.solid, t.dotted}) {
      for (const auto& s : cls) {
        const auto id = box.id(s);
        if (tw.owner[id] >= 0) throw StructureError("tiles overlap on an edge");
        tw.owner[id] = static_cast<int>(i);
        tw.internal[id] = square_edges.count(s + Point{-t.base.x, -t.base.y}) == 0;
      }
    }
  }
  return tw;
}

TwoColouring base_colouring(const TileWindow& tw) {
  TwoColouring c(tw.radius);
  for (const auto& t : tw.tiles) {
    for (const auto& s : t.solid) c.set(s, Colour::Solid);
    for (const auto& s : t.dotted) c.set(s, Colour::Dotted);
  }
  return c;
}

TwoColouring swap_at_squares(TwoColouring c, const std::vector<AttachmentSquare>& squares) {
  std::set<Segment> used;
  for (const auto& sq : squares) {
    for (const auto& e : sq.edges) {
      if (!used.insert(e).second) throw StructureError("attachment squares overlap");
    }
  }
  for (const auto& sq : squares) {
    for (const auto& e : sq.edges) c.swap(e);
  }
  return c;
}

std::vector<AttachmentSquare> tree_squares(const TileWindow& tw, const SpanningTreeWithEnds& tile_tree) {
  if (tile_tree.window_size() != tw.tiles.size()) throw StructureError("tile tree does not match the tile window");
  std::vector<AttachmentSquare> out;
  for (auto [child, parent] : tile_tree.edges()) {
    if (tile_tree.is_end(child) || tile_tree.is_end(parent)) continue;
    out.push_back(attachment(tw.tiles[static_cast<std::size_t>(child)], tw.tiles[static_cast<std::size_t>(parent)]));
  }
  return out;
}

TwoColouring tiling_colouring(const SpanningTreeWithEnds& tile_tree, const TileWindow& tw) {
  return swap_at_squares(base_colouring(tw), tree_squares(tw, tile_tree));
}

ColourClasses tiling_double_rays(const SpanningTreeWithEnds& tile_tree, const TileWindow& tw) {
  const auto c = tiling_colouring(tile_tree, tw);
  return {c.edges_of(Colour::Solid), c.edges_of(Colour::Dotted)};
}

ColourClasses randomize_coset(const ColourClasses& sample, Rng& rng, Point* chosen) {
  const auto& reps = coset_representatives();
  const Point p = reps[std::uniform_int_distribution<std::size_t>(0, reps.size() - 1)(rng)];
  if (chosen != nullptr) *chosen = p;
  const auto z2 = AbelianGroup::lattice(2);
  const auto g = to_element(p);
  return {translate_edge_set(sample.solid, g, z2).edges, translate_edge_set(sample.dotted, g, z2).edges};
}

ColourClasses TilingSample::classes() const {
  ColourClasses raw{colouring.edges_of(Colour::Solid), colouring.edges_of(Colour::Dotted)};
  if (shift == Point{}) return raw;
  const auto z2 = AbelianGroup::lattice(2);
  const auto g = to_element(shift);
  return {translate_edge_set(raw.solid, g, z2).edges, translate_edge_set(raw.dotted, g, z2).edges};
}

TilingSample sample_tiling(const TileWindow& tw, Rng& rng, bool randomize) {
  const auto tree = wilson_wired_ust(tw.graph, rng);
  TilingSample s{tiling_colouring(tree, tw), Point{}, {}};
  if (randomize) {
    const auto& reps = coset_representatives();
    s.shift = reps[std::uniform_int_distribution<std::size_t>(0, reps.size() - 1)(rng)];
  }
  s.tile_parent.reserve(tw.tiles.size() + 1);
  for (std::size_t x = 0; x <= tw.tiles.size(); ++x) s.tile_parent.push_back(tree.parent(static_cast<int>(x)));
  return s;
}

}  // namespace dray
