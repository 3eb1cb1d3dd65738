#include "dray/group.hpp"

#include <sstream>

namespace dray {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::vector<std::int64_t> GroupElement::flat() const {
  std::vector<std::int64_t> out(free);
  out.insert(out.end(), torsion.begin(), torsion.end());
  return out;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  const auto coords = flat();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) os << ',';
    os << coords[i];
  }
  os << ')';
  return os.str();
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (g.free.size() * 31 + g.torsion.size());
  auto mix = [&h](std::int64_t v) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (auto v : g.free) mix(v);
  for (auto v : g.torsion) mix(v);
  return static_cast<std::size_t>(h);
}

AbelianGroup::AbelianGroup(std::size_t rank, std::vector<std::int64_t> moduli)
    : rank_(rank), moduli_(std::move(moduli)) {
  for (auto m : moduli_) {
    if (m < 2) throw ConfigError("torsion modulus must be >= 2, got " + std::to_string(m));
  }
}

std::int64_t AbelianGroup::torsion_order() const {
  std::int64_t n = 1;
  for (auto m : moduli_) n *= m;
  return n;
}

GroupElement AbelianGroup::zero() const {
  return GroupElement(std::vector<std::int64_t>(rank_, 0),
                      std::vector<std::int64_t>(moduli_.size(), 0));
}

GroupElement AbelianGroup::free_unit(std::size_t i) const {
  if (i >= rank_) throw ConfigError("free unit index out of range");
  auto g = zero();
  g.free[i] = 1;
  return g;
}

GroupElement AbelianGroup::torsion_unit(std::size_t j) const {
  if (j >= moduli_.size()) throw ConfigError("torsion unit index out of range");
  auto g = zero();
  g.torsion[j] = 1;
  return g;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < rank_; ++i) out.free[i] += b.free[i];
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    out.torsion[j] = mod(a.torsion[j] + b.torsion[j], moduli_[j]);
  }
  return out;
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, negate(b));
}

GroupElement AbelianGroup::negate(const GroupElement& a) const { return scale(a, -1); }

GroupElement AbelianGroup::scale(const GroupElement& a, std::int64_t k) const {
  GroupElement out = a;
  for (auto& v : out.free) v *= k;
  for (std::size_t j = 0; j < moduli_.size(); ++j) out.torsion[j] = mod(a.torsion[j] * k, moduli_[j]);
  return out;
}

GroupElement AbelianGroup::reduce(GroupElement a) const {
  if (a.free.size() != rank_ || a.torsion.size() != moduli_.size()) {
    throw StructureError("element " + a.to_string() + " has wrong shape for this group");
  }
  for (std::size_t j = 0; j < moduli_.size(); ++j) a.torsion[j] = mod(a.torsion[j], moduli_[j]);
  return a;
}

bool AbelianGroup::is_element(const GroupElement& a) const {
  if (a.free.size() != rank_ || a.torsion.size() != moduli_.size()) return false;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (a.torsion[j] < 0 || a.torsion[j] >= moduli_[j]) return false;
  }
  return true;
}

GroupElement AbelianGroup::from_flat(const std::vector<std::int64_t>& coords) const {
  if (coords.size() != rank_ + moduli_.size()) {
    throw StructureError("coordinate list has wrong length for this group");
  }
  GroupElement g(std::vector<std::int64_t>(coords.begin(), coords.begin() + rank_),
                 std::vector<std::int64_t>(coords.begin() + rank_, coords.end()));
  return reduce(std::move(g));
}

}  // namespace dray
