#include "dray/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace dray {

namespace {

const char* const kEndNames[2] = {"∂1", "∂2"};

}  // namespace

Json element_json(const GroupElement& g) { return Json(g.flat()); }

GroupElement element_from_json(const Json& j, const AbelianGroup& group) {
  auto g = group.from_flat(j.get<std::vector<std::int64_t>>());
  if (!group.is_element(g)) throw ConfigError("not an element of the group: " + j.dump());
  return g;
}

Json edges_json(const EdgeSet& e) {
  Json out = Json::array();
  for (const auto& [a, b] : e) out.push_back(Json::array({element_json(a), element_json(b)}));
  return out;
}

EdgeSet edges_from_json(const Json& j, const AbelianGroup& group) {
  EdgeSet out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw ConfigError("edge must be a vertex pair: " + pair.dump());
    out.insert(element_from_json(pair[0], group), element_from_json(pair[1], group));
  }
  return out;
}

Json group_json(const AbelianGroup& group) {
  Json out;
  out["rank"] = group.rank();
  out["moduli"] = group.moduli();
  return out;
}

AbelianGroup group_from_json(const Json& j) {
  return AbelianGroup(j.at("rank").get<std::size_t>(), j.value("moduli", std::vector<std::int64_t>{}));
}

Json graph_json(const WindowedGraph& w) {
  const auto& g = w.graph();
  Json out;
  out["moduli"] = g.group().moduli();
  out["dimension"] = g.group().rank();
  out["radius"] = w.radius();
  out["margin"] = w.margin();
  Json vs = Json::array();
  for (const auto& v : g.vertices()) vs.push_back(element_json(v));
  out["vertices"] = std::move(vs);
  Json amb = Json::array();
  for (std::size_t v = 0; v < g.size(); ++v) amb.push_back(w.ambient_degree(static_cast<int>(v)));
  out["ambient_degree"] = std::move(amb);
  out["edges"] = edges_json(g.edges());
  return out;
}

WindowedGraph graph_from_json(const Json& j) {
  const auto dim = j.at("dimension").get<std::size_t>();
  const auto moduli = j.value("moduli", std::vector<std::int64_t>{});
  const int margin = j.value("margin", 0);
  const int radius = j.value("radius", -1);
  if (!j.contains("edges")) {
    if (!moduli.empty()) throw ConfigError("a lattice box cannot have torsion");
    if (radius < 0) throw ConfigError("graph document needs either edges or a radius");
    return build_grid_window(dim, radius, margin);
  }
  const AbelianGroup group(dim, moduli);
  const auto edges = edges_from_json(j.at("edges"), group);
  std::vector<GroupElement> vertices;
  if (j.contains("vertices")) {
    for (const auto& v : j.at("vertices")) vertices.push_back(element_from_json(v, group));
  } else {
    vertices = edges.vertices();
  }
  FiniteGraph g(group, vertices);
  for (const auto& [a, b] : edges) {
    const int ia = g.index_of(a);
    const int ib = g.index_of(b);
    if (ia < 0 || ib < 0) throw ConfigError("edge endpoint missing from the vertex list");
    g.add_edge(ia, ib);
  }
  std::vector<int> ambient;
  if (j.contains("ambient_degree")) {
    ambient = j.at("ambient_degree").get<std::vector<int>>();
    if (ambient.size() != g.size()) throw ConfigError("ambient_degree has the wrong length");
  } else {
    for (std::size_t v = 0; v < g.size(); ++v) ambient.push_back(static_cast<int>(g.degree(static_cast<int>(v))));
  }
  return WindowedGraph(std::move(g), std::move(ambient), margin, radius);
}

Json tree_json(const SpanningTreeWithEnds& t) {
  const auto& g = t.window().graph();
  auto name = [&](int x) -> std::string {
    if (t.is_end(x)) return kEndNames[x - t.end_vertex(0)];
    return g.vertex(x).to_string();
  };
  Json parent = Json::object();
  for (std::size_t x = 0; x < t.window_size() + static_cast<std::size_t>(t.end_count()); ++x) {
    const int p = t.parent(static_cast<int>(x));
    parent[name(static_cast<int>(x))] = p == kNoParent ? Json(nullptr) : Json(name(p));
  }
  Json out;
  out["ends"] = t.end_count();
  out["parent"] = std::move(parent);
  return out;
}

SpanningTreeWithEnds tree_from_json(const Json& j, const WindowedGraph& w) {
  const int ends = j.at("ends").get<int>();
  if (ends < 1 || ends > 2) throw ConfigError("a tree has 1 or 2 ends");
  const auto& g = w.graph();
  const int n = static_cast<int>(g.size());
  std::unordered_map<std::string, int> index;
  for (int v = 0; v < n; ++v) index.emplace(g.vertex(v).to_string(), v);
  for (int e = 0; e < ends; ++e) index.emplace(kEndNames[e], n + e);

  std::vector<int> parent(static_cast<std::size_t>(n + ends), kNoParent);
  std::vector<bool> seen(parent.size(), false);
  for (const auto& [key, value] : j.at("parent").items()) {
    const auto it = index.find(key);
    if (it == index.end()) throw ConfigError("tree names unknown vertex " + key);
    seen[static_cast<std::size_t>(it->second)] = true;
    if (value.is_null()) continue;
    const auto pt = index.find(value.get<std::string>());
    if (pt == index.end()) throw ConfigError("tree names unknown parent " + value.get<std::string>());
    parent[static_cast<std::size_t>(it->second)] = pt->second;
  }
  for (std::size_t x = 0; x < seen.size(); ++x) {
    if (!seen[x]) throw ConfigError("tree omits a vertex");
  }
  return SpanningTreeWithEnds(w, std::move(parent), ends);
}

Json orders_json(const OrderAssignment& o) {
  Json out = Json::array();
  for (std::size_t v = 0; v < o.size(); ++v) out.push_back(o.ranks(static_cast<int>(v)));
  return out;
}

OrderAssignment orders_from_json(const Json& j) {
  return OrderAssignment(j.get<std::vector<std::vector<int>>>());
}

Json phi_json(const PhiResult& phi) {
  const auto& g = phi.window->graph();
  Json out = Json::array();
  for (const auto& e : phi.edges) {
    Json item;
    item["edge"] = Json::array({element_json(g.vertex(e.a)), element_json(g.vertex(e.b))});
    item["rule"] = rule_tag(e.rule);
    item["source"] = element_json(g.vertex(e.source));
    if (e.source_other >= 0) item["source_other"] = element_json(g.vertex(e.source_other));
    out.push_back(std::move(item));
  }
  return out;
}

Json trusted_json(const TrustedRegion& t) {
  Json out;
  out["description"] = t.description();
  Json vs = Json::array();
  for (const auto& v : t.vertices()) vs.push_back(element_json(v));
  out["vertices"] = std::move(vs);
  return out;
}

TrustedRegion trusted_from_json(const Json& j, const AbelianGroup& group) {
  std::vector<GroupElement> vs;
  for (const auto& v : j.at("vertices")) vs.push_back(element_from_json(v, group));
  return TrustedRegion(std::move(vs), j.value("description", std::string{}));
}

Json report_json(const CheckReport& r) {
  Json out;
  out["name"] = r.name;
  out["pass"] = r.pass;
  out["witness"] = r.witness;
  out["region"] = r.region;
  out["checked"] = r.checked;
  out["value"] = r.value;
  return out;
}

Json report_json(const InvarianceReport& r) {
  Json out;
  out["event"] = r.event;
  out["samples_per_translate"] = r.samples_per_translate;
  out["alpha"] = r.alpha;
  out["critical_z"] = r.critical_z;
  out["seed"] = r.seed;
  Json rows = Json::array();
  for (std::size_t j = 0; j < r.translates.size(); ++j) {
    Json row;
    row["translate"] = element_json(r.translates[j]);
    row["hits"] = r.hits[j];
    row["frequency"] = r.frequency[j];
    row["z"] = r.z[j];
    row["reject"] = static_cast<bool>(r.reject[j]);
    rows.push_back(std::move(row));
  }
  out["translates"] = std::move(rows);
  out["rejections"] = r.rejections();
  out["decision"] = r.invariant_not_rejected() ? "not rejected" : "rejected";
  return out;
}

Json report_json(const CalibrationReport& r) {
  Json out;
  out["campaigns"] = r.campaigns;
  out["rejected"] = r.rejected;
  out["rate"] = r.rate();
  out["alpha"] = r.alpha;
  out["upper_tail"] = r.upper_tail;
  out["level"] = r.level;
  out["pass"] = r.pass();
  return out;
}

Json provenance_json(const std::string& construction, std::uint64_t seed, const Json& window) {
  Json out;
  out["construction"] = construction;
  out["seed"] = seed;
  out["window"] = window;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
  if (!out) throw ConfigError("failed writing " + path);
}

Json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace dray
