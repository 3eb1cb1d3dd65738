// Invariant double rays in Cayley graphs of finitely generated Abelian groups.
//
// Given G = Cay(Γ, S), S' ⊆ S is a maximal set of infinite-order generators
// with linearly independent free parts; Γ' = <S'> ≅ Z^r has finite index and
// Cay(Γ', S') is the standard grid in S'-coordinates. A double ray D of that
// grid is split into two matchings M1, M2; a path P from 0 through one vertex
// of every coset of Γ' (endpoint p) is laid down at every γ ∈ Γ', and
//   R = M1 ∪ (M2 + p) ∪ {P + γ : γ ∈ Γ'}.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dray/graph.hpp"
#include "dray/product.hpp"
#include "dray/random.hpp"
#include "dray/trusted.hpp"

namespace dray {

using CoinFlip = bool;

/// P = path[0] = 0, ..., path.back() = p, one vertex per coset of Γ'.
struct CosetPath {
  std::vector<GroupElement> path;
  /// Canonical representative of each visited coset, in visiting order.
  std::vector<GroupElement> cosets;

  const GroupElement& endpoint() const { return path.back(); }
};

struct MatchingPair {
  EdgeSet m1;
  EdgeSet m2;
};

/// Alternates the edges of every component of R (paths and even cycles).
/// At the component's anchor (the origin when present, else its smallest
/// vertex) the edge towards the larger neighbour is class 0; heads makes class
/// 0 into M1. Throws StructureError on a vertex of degree > 2, a trusted vertex
/// of degree != 2, or an odd cycle.
MatchingPair matching_split(const EdgeSet& r, CoinFlip heads, const TrustedRegion& trusted);

/// The subgroup Γ' = <S'> with coset arithmetic.
class SubLattice {
 public:
  /// Picks S' greedily in generator order. Throws ConfigError unless the
  /// infinite-order generators span a full-rank lattice.
  SubLattice(AbelianGroup group, std::vector<GroupElement> generators);

  const AbelianGroup& group() const { return group_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  /// Indices into the generator list forming S'.
  const std::vector<std::size_t>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  /// sum_i c_i s'_i.
  GroupElement embed(const std::vector<std::int64_t>& coeffs) const;
  /// Coefficients of x in S' when x ∈ Γ', empty otherwise.
  std::vector<std::int64_t> coefficients(const GroupElement& x) const;
  bool contains(const GroupElement& x) const;
  /// Unique coset representative with free part in the half-open
  /// fundamental parallelepiped of S'.
  GroupElement canonical(const GroupElement& x) const;

 private:
  /// floor(B^{-1} v) for the free part v.
  std::vector<std::int64_t> floor_coefficients(const std::vector<std::int64_t>& v) const;

  AbelianGroup group_;
  std::vector<GroupElement> generators_;
  std::vector<std::size_t> basis_;
  std::vector<std::vector<std::int64_t>> adjugate_;  // adj(B), B columns = free parts of S'
  std::int64_t det_ = 1;
};

/// Cayley graph of Γ/Γ' on canonical representatives. Edge labels are
/// 2*i for +s_i and 2*i+1 for -s_i (the first label found is kept).
FiniteGraph quotient_graph(const SubLattice& lattice);

/// Hamilton path of a connected graph from vertex 0 by backtracking.
/// Throws StructureError if none exists.
std::vector<int> quotient_hamilton_path(const FiniteGraph& q);

/// Lifts consecutive quotient steps to G-edges with the same generator.
/// Throws StructureError if a step has no generator.
CosetPath lift_coset_path(const std::vector<int>& path, const FiniteGraph& q, const SubLattice& lattice);

struct AbelianSample {
  EdgeSet edges;
  TrustedRegion trusted;
  /// The Γ'-double ray in Γ coordinates.
  EdgeSet base_ray;
  MatchingPair matching;
  CosetPath coset_path;
  /// Translates γ + P for every γ on the base ray.
  std::vector<std::vector<GroupElement>> translates;
  std::string construction;
};

/// M1 ∪ (M2 + p) ∪ {P + γ : γ ∈ base vertices}. Throws StructureError on a
/// vertex of degree > 2.
AbelianSample assemble_abelian(const MatchingPair& m, const CosetPath& p, const SubLattice& lattice,
                               const EdgeSet& base_ray, const TrustedRegion& base_trusted);

/// Each trusted vertex v has exactly one j with v - P_j ∈ Γ'.
struct CoverageReport {
  bool pass = true;
  std::string witness;
  std::size_t checked = 0;
};
CoverageReport check_unique_translate(const AbelianSample& s, const SubLattice& lattice);

/// A double ray of Cay(Γ', S') in S'-coefficients: the line for rank 1, the
/// tiling class for rank 2, the product construction for rank >= 3.
LatticeSample sample_grid_ray(std::size_t rank, int radius, int margin, Rng& rng);

/// Full pipeline for Cay(Z^rank x Z_moduli, generators).
AbelianSample sample_abelian(std::size_t rank, const std::vector<std::int64_t>& moduli,
                             const std::vector<GroupElement>& generators, int radius, int margin, Rng& rng);

/// Standard generators: free units followed by torsion units.
std::vector<GroupElement> standard_generators(const AbelianGroup& group);

}  // namespace dray
