// Edge tiling of Z^2 by 16-edge tiles, the two-colouring of each tile, colour
// swaps at attachment squares and the resulting pair of double rays.
//
// The tile template is the union of two rectangle boundaries:
//   solid:  1x3 rectangle with corners (-1,0), (0,0), (0,3), (-1,3)
//   dotted: 3x1 rectangle with corners (-2,1), (1,1), (1,2), (-2,2)
// Tiles are its translates by the index-8 sublattice generated by (2,2) and
// (2,-2); two tiles whose bases differ by (+-2,+-2) share exactly two
// vertices, the diagonal of a unit square (their attachment square).
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dray/graph.hpp"
#include "dray/random.hpp"
#include "dray/spanning_tree.hpp"

namespace dray {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const Point&) const = default;
  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};

/// Unit edge of Z^2, stored with a < b.
struct Segment {
  Point a;
  Point b;
  auto operator<=>(const Segment&) const = default;
  Segment operator+(const Point& p) const { return {a + p, b + p}; }
};

Segment make_segment(Point a, Point b);
GroupElement to_element(const Point& p);
Point to_point(const GroupElement& g);
Edge to_edge(const Segment& s);

enum class Colour : std::int8_t { Solid = 0, Dotted = 1 };
inline Colour other(Colour c) { return c == Colour::Solid ? Colour::Dotted : Colour::Solid; }
const char* to_string(Colour c);

/// Dense indexing of the unit edges of the box [-radius, radius]^2.
class Z2Box {
 public:
  explicit Z2Box(int radius) : radius_(radius) {}
  int radius() const { return radius_; }
  bool contains(const Point& p) const {
    return p.x >= -radius_ && p.x <= radius_ && p.y >= -radius_ && p.y <= radius_;
  }
  bool contains(const Segment& s) const { return contains(s.a) && contains(s.b); }
  std::size_t edge_count() const;
  /// Requires contains(s) and s a unit edge.
  std::size_t id(const Segment& s) const;
  Segment segment(std::size_t id) const;

  bool operator==(const Z2Box&) const = default;

 private:
  int radius_;
};

struct Tile {
  Point base;
  std::array<Segment, 8> solid;
  std::array<Segment, 8> dotted;

  std::vector<Point> vertices() const;
  bool contains(const Segment& s) const;
};

/// The Γ-translate of the template at `base` (base must lie in Γ).
Tile make_tile(Point base);
/// Template classes as edge sets: (solid, dotted).
std::pair<EdgeSet, EdgeSet> tile_template();

/// Γ = <(2,2),(2,-2)> = {(a,b) : a, b even, a + b divisible by 4}.
bool in_tile_lattice(const Point& p);
/// The 8 coset representatives of Γ in Z^2, lexicographically smallest first:
/// {0,1} x {0,1,2,3}.
const std::array<Point, 8>& coset_representatives();

struct AttachmentSquare {
  Point tile_a;  // bases, tile_a < tile_b
  Point tile_b;
  std::array<Point, 2> attachment;  // sorted
  std::array<Segment, 4> edges;     // sorted
};

/// Throws StructureError unless tile bases differ by (+-2, +-2).
AttachmentSquare attachment(const Tile& t, const Tile& u);

/// Assigns a colour to every tiled edge of a Z^2 box; untiled edges have none.
class TwoColouring {
 public:
  explicit TwoColouring(int radius = 0);

  const Z2Box& box() const { return box_; }
  std::optional<Colour> colour(const Segment& s) const;
  void set(const Segment& s, Colour c);
  void swap(const Segment& s);
  /// Edges of class c, as group-element pairs.
  EdgeSet edges_of(Colour c) const;
  std::size_t tiled_count() const;

  bool operator==(const TwoColouring&) const = default;

 private:
  Z2Box box_;
  std::vector<std::int8_t> colour_;
};

/// All tiles of a box together with the tile graph Cay(Γ, {(+-2,+-2)})
/// restricted to them. Tile i is vertex i of `graph`.
struct TileWindow {
  int radius = 0;
  std::vector<Tile> tiles;
  WindowedGraph graph;
  /// Per box edge id: owning tile index or -1 when the edge is not tiled.
  std::vector<int> owner;
  /// Per box edge id: the edge is internal to its tile.
  std::vector<bool> internal;

  int tile_index(const Point& base) const;
  bool is_internal(const Segment& s) const;
};

/// Tiles whose 16 edges all lie inside [-radius, radius]^2.
std::vector<Tile> tiles_in_window(int radius);
TileWindow build_tile_window(int radius);

/// Template colours on every tile of the window.
TwoColouring base_colouring(const TileWindow& tw);

/// Exchanges the colours on the 4 edges of each square. Throws
/// StructureError if two squares share an edge or a square is not tiled.
TwoColouring swap_at_squares(TwoColouring c, const std::vector<AttachmentSquare>& squares);

/// Attachment squares of the tree edges between two tiles.
std::vector<AttachmentSquare> tree_squares(const TileWindow& tw, const SpanningTreeWithEnds& tile_tree);

struct ColourClasses {
  EdgeSet solid;
  EdgeSet dotted;
};

/// Swaps at the attachment square of every tile-tree edge and returns the
/// colouring. The tile tree must span `tw.graph`.
TwoColouring tiling_colouring(const SpanningTreeWithEnds& tile_tree, const TileWindow& tw);
ColourClasses tiling_double_rays(const SpanningTreeWithEnds& tile_tree, const TileWindow& tw);

/// Translates both classes by a uniformly chosen coset representative.
/// `chosen` receives the representative when non-null.
ColourClasses randomize_coset(const ColourClasses& sample, Rng& rng, Point* chosen = nullptr);

/// One draw of the tiling construction: wired UST on the tile graph, swaps,
/// and optionally a random coset shift. The colour of e in the shifted
/// picture is colouring.colour(e - shift).
struct TilingSample {
  TwoColouring colouring;
  Point shift;
  std::vector<int> tile_parent;  // parent map of the tile tree (∂1 = tiles.size())

  std::optional<Colour> colour_at(const Segment& e) const { return colouring.colour(e + Point{-shift.x, -shift.y}); }
  ColourClasses classes() const;
};

TilingSample sample_tiling(const TileWindow& tw, Rng& rng, bool randomize);

}  // namespace dray
