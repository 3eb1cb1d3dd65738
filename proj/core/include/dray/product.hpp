// Double rays of Z^d for d >= 3 built from Z^2 samples by the product
// construction, plus the spanning copies of Z^{d-1} it carries along.
//
// Coordinates. A level-k sample lives in Z^k. The product step takes a Z^2
// ray R12 and a ray D of Z^{k-1} whose first coordinate is the line Z_0 and
// maps (a, rest) to (f(a), rest), where f walks R12 from the origin. The
// resulting Z^{k+1} ray is D_{k+1} = (f x id)(D_k).
//
// Finite windows. f is only defined on the stretch of R12 around the origin
// that stays inside R12's trusted region; D-edges leaving that stretch are
// dropped and counted, and the trusted region of the output is the image of
// D's trusted vertices whose line neighbours are still in range.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dray/graph.hpp"
#include "dray/random.hpp"
#include "dray/tiling.hpp"
#include "dray/trusted.hpp"

namespace dray {

/// A finite piece of a spanning structure (double ray or spanning copy) of Z^d.
struct LatticeSample {
  std::size_t dimension = 0;
  EdgeSet edges;
  TrustedRegion trusted;
  std::size_t dropped = 0;
  /// Nested description of how the sample was produced.
  std::string construction;
};

/// Vertices of [-(radius - margin), radius - margin]^d.
TrustedRegion box_interior(std::size_t d, int radius, int margin);

/// Solid class of a coset-randomized tiling sample on the radius-r Z^2 box.
/// Throws ConfigError if margin < 6 (the tiling frontier needs that much).
LatticeSample sample_z2_ray(const TileWindow& tw, int margin, Rng& rng);

/// f restricted to its trusted stretch: line[a - lo] = f(a) for lo <= a <= hi.
struct LineMap {
  std::int64_t lo = 0;
  std::vector<GroupElement> image;

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(image.size()) - 1; }
  bool defined(std::int64_t a) const { return a >= lo && a <= hi(); }
  const GroupElement& at(std::int64_t a) const { return image[static_cast<std::size_t>(a - lo)]; }
};

/// Walks R12 from the origin; heads sends +1 to the smaller neighbour of the
/// origin. Stops before the first untrusted vertex in each direction. Throws
/// StructureError if the origin is not a trusted degree-2 vertex of R12.
LineMap line_map(const LatticeSample& r12, bool heads);

/// (f x id)(inner) for an inner sample whose first coordinate is the line.
LatticeSample product_ray(const LatticeSample& r12, const LatticeSample& inner, bool heads);

/// The d = 3 step: R = phi(R3) with both inputs Z^2 rays.
LatticeSample product_ray_z3(const LatticeSample& r12, const LatticeSample& r3, bool heads);

/// R12 x H on the product of their vertex sets.
LatticeSample spanning_copy(const LatticeSample& r12, const LatticeSample& h);

/// The whole Z^{d-2} box of the given radius as a spanning structure.
LatticeSample grid_structure(std::size_t d, int radius);

struct ProductSample {
  LatticeSample ray;
  /// R12 x Z^{d-2}: the spanning copy of Z^{d-1} carried by the induction.
  LatticeSample copy;
  std::size_t depth = 0;
};

/// Recursive construction for d >= 3 (depth d - 2); Z^2 pieces use a tile
/// window of `radius`, the Z^{d-2} factor of the copy a box of `copy_radius`.
/// Throws ConfigError for d < 3.
ProductSample product_ray_zd(std::size_t d, int radius, int margin, Rng& rng, int copy_radius = 2);

}  // namespace dray
