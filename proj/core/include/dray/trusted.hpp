#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "dray/graph.hpp"

namespace dray {

/// The vertices on which a finite sample is expected to look like the
/// infinite object. Every structural check quantifies over one of these.
class TrustedRegion {
 public:
  TrustedRegion() = default;
  TrustedRegion(std::vector<GroupElement> vertices, std::string description);

  /// Vertices at distance > margin from the window frontier.
  static TrustedRegion interior_of(const WindowedGraph& w);
  static TrustedRegion everything(const FiniteGraph& g);

  bool contains(const GroupElement& v) const { return set_.count(v) > 0; }
  const std::vector<GroupElement>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const std::string& description() const { return description_; }

 private:
  std::vector<GroupElement> vertices_;
  std::unordered_set<GroupElement> set_;
  std::string description_;
};

}  // namespace dray
