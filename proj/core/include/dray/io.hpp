// JSON documents for graphs, trees, edge sets, samples and reports.
//
// Objects keep insertion order and carry no timestamps, so equal inputs give
// byte-identical files. Vertices are integer arrays (free coordinates followed
// by torsion residues).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dray/checks.hpp"
#include "dray/cube_ray.hpp"
#include "dray/graph.hpp"
#include "dray/invariance.hpp"
#include "dray/spanning_tree.hpp"
#include "dray/trusted.hpp"

namespace dray {

using Json = nlohmann::ordered_json;

Json element_json(const GroupElement& g);
GroupElement element_from_json(const Json& j, const AbelianGroup& group);

Json edges_json(const EdgeSet& e);
EdgeSet edges_from_json(const Json& j, const AbelianGroup& group);

Json group_json(const AbelianGroup& group);
AbelianGroup group_from_json(const Json& j);

/// {"moduli", "dimension", "radius", "margin", "vertices", "ambient_degree", "edges"}.
Json graph_json(const WindowedGraph& w);
/// Accepts the full form above, or {"dimension", "radius", "margin"} alone
/// for a lattice box. Without "ambient_degree" the window is closed.
WindowedGraph graph_from_json(const Json& j);

/// {"ends": k, "parent": {vertex: parent}} with "∂1"/"∂2" naming the ends.
Json tree_json(const SpanningTreeWithEnds& t);
SpanningTreeWithEnds tree_from_json(const Json& j, const WindowedGraph& w);

Json orders_json(const OrderAssignment& o);
OrderAssignment orders_from_json(const Json& j);

/// φ edges with their rule tags and sources.
Json phi_json(const PhiResult& phi);

Json trusted_json(const TrustedRegion& t);
TrustedRegion trusted_from_json(const Json& j, const AbelianGroup& group);

Json report_json(const CheckReport& r);
Json report_json(const InvarianceReport& r);
Json report_json(const CalibrationReport& r);

/// {"construction", "seed", "window"}.
Json provenance_json(const std::string& construction, std::uint64_t seed, const Json& window);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);
void write_text(const std::string& path, const std::string& text);
Json read_json(const std::string& path);

}  // namespace dray
