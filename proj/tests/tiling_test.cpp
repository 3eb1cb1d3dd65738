#include <gtest/gtest.h>

#include <map>
#include <set>

#include "dray/checks.hpp"
#include "dray/product.hpp"
#include "dray/tiling.hpp"

using namespace dray;

namespace {

// The two rectangles, written out independently of the library.
std::vector<Segment> rectangle(Point lo, Point hi) {
  std::vector<Segment> out;
  for (auto x = lo.x; x < hi.x; ++x) {
    out.push_back(make_segment({x, lo.y}, {x + 1, lo.y}));
    out.push_back(make_segment({x, hi.y}, {x + 1, hi.y}));
  }
  for (auto y = lo.y; y < hi.y; ++y) {
    out.push_back(make_segment({lo.x, y}, {lo.x, y + 1}));
    out.push_back(make_segment({hi.x, y}, {hi.x, y + 1}));
  }
  return out;
}

const std::vector<Segment> kSolid = rectangle({-1, 0}, {0, 3});
const std::vector<Segment> kDotted = rectangle({-2, 1}, {1, 2});

bool in_gamma(Point p) { return p.x % 2 == 0 && p.y % 2 == 0 && (p.x + p.y) % 4 == 0; }

Point random_shift(Rng& rng) {
  return {std::uniform_int_distribution<std::int64_t>(-8, 8)(rng),
          std::uniform_int_distribution<std::int64_t>(-8, 8)(rng)};
}

// Independent cycles; a disjoint union of k cycles has k.
std::size_t cycle_rank(const EdgeSet& e) { return check_cycle_count(e, 0).value; }

}  // namespace

TEST(TileTemplate, ClassesAreTheTwoRectangles) {
  const auto [solid, dotted] = tile_template();
  EXPECT_TRUE(solid.contains(to_edge(make_segment({-1, 0}, {0, 0}))));
  EXPECT_TRUE(dotted.contains(to_edge(make_segment({-2, 1}, {-2, 2}))));
  EXPECT_EQ(solid.size(), 8u);
  EXPECT_EQ(dotted.size(), 8u);
  EXPECT_TRUE(edge_intersection(solid, dotted).empty());
  for (const auto& s : kSolid) EXPECT_TRUE(solid.contains(to_edge(s)));
  for (const auto& s : kDotted) EXPECT_TRUE(dotted.contains(to_edge(s)));
  for (const auto* cls : {&solid, &dotted}) {
    for (const auto& [v, d] : cls->degrees()) EXPECT_EQ(d, 2);
    EXPECT_EQ(check_cycle_count(*cls, 1).value, 1u);
    EXPECT_EQ(cls->vertices().size(), 8u);
  }
}

TEST(TileLattice, IndexAndCosetRepresentatives) {
  const auto& reps = coset_representatives();
  EXPECT_EQ(reps.front(), (Point{0, 0}));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(in_gamma(reps[i] - reps[j]));
  }
  // Oracle: residue classes of [0,8)^2 modulo Γ.
  std::vector<Point> classes;
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      bool fresh = true;
      for (const auto& c : classes) fresh = fresh && !in_gamma(Point{x, y} - c);
      if (fresh) classes.push_back({x, y});
    }
  }
  EXPECT_EQ(classes.size(), 8u);
  for (int x = -5; x <= 5; ++x) {
    for (int y = -5; y <= 5; ++y) EXPECT_EQ(in_tile_lattice({x, y}), in_gamma({x, y}));
  }
}

TEST(Tiles, PartitionEveryInteriorEdge) {
  constexpr int kRadius = 10;
  const auto tiles = tiles_in_window(kRadius);
  std::map<Segment, int> cover;
  for (const auto& t : tiles) {
    EXPECT_TRUE(in_gamma(t.base));
    for (const auto& s : t.solid) cover[s]++;
    for (const auto& s : t.dotted) cover[s]++;
  }
  // Oracle: all Γ-translates of the hand-written template.
  std::map<Segment, int> oracle;
  for (int x = -kRadius - 4; x <= kRadius + 4; ++x) {
    for (int y = -kRadius - 4; y <= kRadius + 4; ++y) {
      if (!in_gamma({x, y})) continue;
      for (const auto* cls : {&kSolid, &kDotted}) {
        for (const auto& s : *cls) oracle[s + Point{x, y}]++;
      }
    }
  }
  const Z2Box inner(kRadius - 4);
  for (std::size_t id = 0; id < inner.edge_count(); ++id) {
    const auto s = inner.segment(id);
    EXPECT_EQ(oracle[s], 1);
    EXPECT_EQ(cover[s], 1) << "edge " << s.a.x << "," << s.a.y;
  }
  const Z2Box box(kRadius);
  for (const auto& [s, c] : cover) EXPECT_TRUE(box.contains(s));
}

TEST(Tiles, OriginEdgeIsDottedInTileAtTwoMinusTwo) {
  const auto t = make_tile({2, -2});
  EXPECT_TRUE(t.contains(make_segment({0, 0}, {1, 0})));
  const auto e = make_segment({0, 0}, {1, 0});
  EXPECT_NE(std::find(t.dotted.begin(), t.dotted.end(), e), t.dotted.end());
}

TEST(Attachment, DiagonalNeighbour) {
  const auto a = make_tile({0, 0});
  const auto b = make_tile({2, 2});
  const auto sq = attachment(a, b);
  EXPECT_EQ(sq.attachment[0], (Point{0, 3}));
  EXPECT_EQ(sq.attachment[1], (Point{1, 2}));
  const std::set<Segment> expected{make_segment({0, 2}, {1, 2}), make_segment({1, 2}, {1, 3}),
                                   make_segment({0, 3}, {1, 3}), make_segment({0, 2}, {0, 3})};
  EXPECT_EQ(std::set<Segment>(sq.edges.begin(), sq.edges.end()), expected);
  const auto back = attachment(b, a);
  EXPECT_EQ(back.attachment, sq.attachment);
  EXPECT_EQ(back.edges, sq.edges);
  EXPECT_THROW(attachment(a, make_tile({4, 0})), StructureError);
}

TEST(Attachment, FourSquaresAndFourInternalEdgesPerColour) {
  const auto t = make_tile({0, 0});
  std::set<Segment> squared;
  for (Point d : {Point{2, 2}, Point{2, -2}, Point{-2, 2}, Point{-2, -2}}) {
    const auto u = make_tile(d);
    // Exactly two shared vertices.
    const auto tv = t.vertices();
    const auto uv = u.vertices();
    std::vector<Point> shared;
    for (const auto& p : tv) {
      if (std::find(uv.begin(), uv.end(), p) != uv.end()) shared.push_back(p);
    }
    EXPECT_EQ(shared.size(), 2u);
    const auto sq = attachment(t, u);
    for (const auto& e : sq.edges) {
      if (t.contains(e)) squared.insert(e);
    }
  }
  int internal_solid = 0, internal_dotted = 0;
  for (const auto& s : t.solid) internal_solid += squared.count(s) ? 0 : 1;
  for (const auto& s : t.dotted) internal_dotted += squared.count(s) ? 0 : 1;
  EXPECT_EQ(internal_solid, 4);
  EXPECT_EQ(internal_dotted, 4);
}

TEST(BaseColouring, MatchesTemplateAndIsGammaPeriodic) {
  const auto tw = build_tile_window(16);
  const auto c = base_colouring(tw);
  const auto& t0 = tw.tiles[static_cast<std::size_t>(tw.tile_index({0, 0}))];
  for (const auto& s : t0.solid) EXPECT_EQ(c.colour(s), Colour::Solid);
  for (const auto& s : t0.dotted) EXPECT_EQ(c.colour(s), Colour::Dotted);
  const Z2Box inner(8);
  for (std::size_t id = 0; id < inner.edge_count(); ++id) {
    const auto s = inner.segment(id);
    EXPECT_EQ(c.colour(s), c.colour(s + Point{2, 2}));
    EXPECT_EQ(c.colour(s), c.colour(s + Point{2, -2}));
  }
  // Each class is a disjoint union of 8-cycles.
  for (auto col : {Colour::Solid, Colour::Dotted}) {
    const auto e = c.edges_of(col);
    for (const auto& [v, d] : e.degrees()) EXPECT_EQ(d, 2);
    EXPECT_EQ(e.size(), 8 * tw.tiles.size());
    EXPECT_EQ(check_cycle_count(e, tw.tiles.size()).value, tw.tiles.size());
  }
}

TEST(BaseColouring, EveryVertexTouchesInternalEdgesOfBothColours) {
  const auto tw = build_tile_window(20);
  const auto c = base_colouring(tw);
  for (int x = -12; x <= 12; ++x) {
    for (int y = -12; y <= 12; ++y) {
      bool solid = false, dotted = false;
      const Point p{x, y};
      for (Point d : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
        const auto s = make_segment(p, p + d);
        if (!tw.is_internal(s)) continue;
        solid = solid || c.colour(s) == Colour::Solid;
        dotted = dotted || c.colour(s) == Colour::Dotted;
      }
      EXPECT_TRUE(solid && dotted) << x << "," << y;
    }
  }
}

TEST(Swaps, EmptyInvolutionAndOverlap) {
  const auto tw = build_tile_window(12);
  const auto c = base_colouring(tw);
  EXPECT_EQ(swap_at_squares(c, {}), c);
  const auto sq = attachment(make_tile({0, 0}), make_tile({2, 2}));
  const auto once = swap_at_squares(c, {sq});
  EXPECT_NE(once, c);
  EXPECT_EQ(swap_at_squares(once, {sq}), c);
  EXPECT_THROW(swap_at_squares(c, {sq, sq}), StructureError);
}

TEST(Swaps, SingleSwapJoinsTwoEightCyclesIntoSixteenCycle) {
  const auto tw = build_tile_window(12);
  const auto a = make_tile({0, 0});
  const auto b = make_tile({2, 2});
  const auto c = swap_at_squares(base_colouring(tw), {attachment(a, b)});
  for (auto col : {Colour::Solid, Colour::Dotted}) {
    EdgeSet joined;
    for (const auto* t : {&a, &b}) {
      for (const auto& s : t->solid) if (c.colour(s) == col) joined.insert(to_edge(s));
      for (const auto& s : t->dotted) if (c.colour(s) == col) joined.insert(to_edge(s));
    }
    EXPECT_EQ(joined.size(), 16u);
    for (const auto& [v, d] : joined.degrees()) EXPECT_EQ(d, 2);
    EXPECT_EQ(cycle_rank(joined), 1u);
  }
}

TEST(TilingDoubleRays, SwapsPreserveDegreesAndGiveInteriorDoubleRays) {
  const auto tw = build_tile_window(24);
  const auto base = base_colouring(tw);
  const auto trusted = box_interior(2, 24, 6);
  Rng rng(31);
  for (int sample = 0; sample < 10; ++sample) {
    const auto tree = wilson_wired_ust(tw.graph, rng);
    const auto c = tiling_colouring(tree, tw);
    for (auto col : {Colour::Solid, Colour::Dotted}) {
      auto before = base.edges_of(col).degrees();
      auto after = c.edges_of(col).degrees();
      EXPECT_EQ(before, after);
      const auto e = c.edges_of(col);
      EXPECT_TRUE(check_two_regular(e, trusted).pass);
      EXPECT_TRUE(check_acyclic(e, trusted).pass);
      EXPECT_TRUE(check_connected_spanning(e, trusted).pass);
    }
  }
}

TEST(TilingDoubleRays, InternalEdgesOnPathForSmallSubtrees) {
  const auto tw = build_tile_window(24);
  Rng rng(32);
  std::map<std::size_t, int> sizes_seen;
  for (int sample = 0; sample < 10; ++sample) {
    const auto tree = wilson_wired_ust(tw.graph, rng);
    const auto c = tiling_colouring(tree, tw);
    for (int t = 0; t < static_cast<int>(tw.tiles.size()); ++t) {
      const auto size = tree.finite_subtree(t).size();
      if (size > 20) continue;
      sizes_seen[size]++;
      const auto r = check_internal_edges_on_path(tw, tree, c, t);
      EXPECT_TRUE(r.pass) << r.witness;
    }
  }
  EXPECT_GT(sizes_seen[1], 0);
  EXPECT_GT(sizes_seen[2], 0);
  EXPECT_GT(sizes_seen[5], 0);
}

TEST(Randomize, ShiftIsACosetRepresentative) {
  const auto tw = build_tile_window(12);
  Rng rng(6);
  const auto tree = wilson_wired_ust(tw.graph, rng);
  const auto classes = tiling_double_rays(tree, tw);
  const auto z2 = AbelianGroup::lattice(2);
  std::set<Point> chosen_seen;
  for (int i = 0; i < 200; ++i) {
    Point chosen;
    const auto shifted = randomize_coset(classes, rng, &chosen);
    chosen_seen.insert(chosen);
    EXPECT_EQ(shifted.solid, translate_edge_set(classes.solid, to_element(chosen), z2).edges);
    EXPECT_EQ(shifted.dotted, translate_edge_set(classes.dotted, to_element(chosen), z2).edges);
  }
  const auto& reps = coset_representatives();
  EXPECT_EQ(chosen_seen, std::set<Point>(reps.begin(), reps.end()));
}

TEST(Randomize, SampleColourAtFollowsShift) {
  const auto tw = build_tile_window(12);
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto s = sample_tiling(tw, rng, true);
    const auto shift = random_shift(rng);
    const auto seg = make_segment(shift, shift + Point{1, 0});
    EXPECT_EQ(s.colour_at(seg + s.shift), s.colouring.colour(seg));
    const auto raw = sample_tiling(tw, rng, false);
    EXPECT_EQ(raw.shift, (Point{0, 0}));
  }
}
