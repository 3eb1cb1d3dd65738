// Finitely generated Abelian groups Z^r x Z_{m_1} x ... x Z_{m_k} and their
// elements. Every vertex of every graph in this library is a GroupElement.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dray {

/// Raised for invalid construction parameters (window sizes, moduli, flags).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input violates a structural precondition of an operation.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of Z^r x (torsion part). Torsion entries are kept reduced by the
/// owning AbelianGroup; two elements are equal iff all components are equal.
struct GroupElement {
  std::vector<std::int64_t> free;
  std::vector<std::int64_t> torsion;

  GroupElement() = default;
  GroupElement(std::vector<std::int64_t> f, std::vector<std::int64_t> t = {})
      : free(std::move(f)), torsion(std::move(t)) {}
  GroupElement(std::initializer_list<std::int64_t> f) : free(f) {}

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;

  /// Free coordinates followed by torsion residues.
  std::vector<std::int64_t> flat() const;
  std::string to_string() const;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

class AbelianGroup {
 public:
  AbelianGroup() = default;
  AbelianGroup(std::size_t rank, std::vector<std::int64_t> moduli = {});

  /// Z^d with no torsion.
  static AbelianGroup lattice(std::size_t d) { return AbelianGroup(d); }

  std::size_t rank() const { return rank_; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  /// Product of the moduli (1 when torsion-free).
  std::int64_t torsion_order() const;

  GroupElement zero() const;
  /// i-th free unit vector, i < rank.
  GroupElement free_unit(std::size_t i) const;
  /// Generator 1 of the j-th cyclic factor.
  GroupElement torsion_unit(std::size_t j) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, std::int64_t k) const;
  GroupElement reduce(GroupElement a) const;

  /// True iff `a` has the right shape and reduced residues.
  bool is_element(const GroupElement& a) const;
  /// Splits a flat coordinate list back into free and torsion parts.
  GroupElement from_flat(const std::vector<std::int64_t>& coords) const;

  bool operator==(const AbelianGroup&) const = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> moduli_;
};

}  // namespace dray

template <>
struct std::hash<dray::GroupElement> : dray::GroupElementHash {};
