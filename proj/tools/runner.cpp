#include "runner.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <memory>
#include <sstream>

#include "dray/abelian.hpp"
#include "dray/checks.hpp"
#include "dray/cube_ray.hpp"
#include "dray/invariance.hpp"
#include "dray/product.hpp"
#include "dray/small_graphs.hpp"
#include "dray/svg.hpp"
#include "dray/tiling.hpp"

namespace dray::runner {

namespace {

/// Stream tag separating verifier randomness from sampler randomness.
constexpr std::uint64_t kVerifyStream = 0x7665726966790000ULL;

CheckReport passed(std::string name, std::string region, std::size_t checked) {
  return {std::move(name), true, {}, std::move(region), checked, 0};
}

CheckReport renamed(CheckReport r, const std::string& suffix) {
  r.name += suffix;
  return r;
}

/// Folds many reports of one check into a single report.
CheckReport fold(const std::string& name, const std::string& region, const std::vector<CheckReport>& parts) {
  CheckReport out = passed(name, region, 0);
  for (const auto& p : parts) {
    out.checked += 1;
    if (!p.pass) out.fail(p.witness);
  }
  return out;
}

CheckReport same_json(const std::string& name, const Json& stored, const Json& recomputed) {
  CheckReport r = passed(name, "whole sample", 1);
  if (stored != recomputed) r.fail("stored sample differs from the one re-derived from its inputs");
  return r;
}

std::uint64_t doc_seed(const Json& doc) { return doc.at("provenance").at("seed").get<std::uint64_t>(); }
std::size_t doc_index(const Json& doc) { return doc.at("provenance").at("window").value("sample", std::size_t{0}); }

std::string out_dir(const ExperimentConfig& c) {
  if (!c.out_dir.empty()) return c.out_dir;
  if (const char* env = std::getenv("DRAY_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return ".";
}

std::string artifact(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

}  // namespace

Json config_json(const ExperimentConfig& c) {
  Json j;
  j["command"] = c.command;
  j["seed"] = c.seed;
  j["radius"] = c.radius;
  j["margin"] = c.margin;
  j["samples"] = c.samples;
  j["out_dir"] = c.out_dir;
  j["suite"] = c.suite;
  j["alpha"] = c.alpha;
  j["verify"] = c.verify;
  j["svg"] = c.svg;
  j["graph"] = c.graph_path;
  j["ends"] = c.ends;
  j["dim"] = c.dimension;
  j["rank"] = c.rank;
  j["moduli"] = c.moduli;
  j["max_vertices"] = c.max_vertices;
  j["exhaustive_orders"] = c.exhaustive_orders;
  j["random_orders"] = c.random_orders;
  j["construction"] = c.construction;
  j["N"] = c.n;
  j["in"] = c.in_path;
  return j;
}

void apply_config_json(const Json& j, ExperimentConfig& c) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::vector<std::string> known{"command", "seed", "radius", "margin", "samples", "out_dir", "suite",
                                              "alpha", "verify", "svg", "graph", "ends", "dim", "rank", "moduli",
                                              "max_vertices", "exhaustive_orders", "random_orders", "construction",
                                              "N", "in"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError("unknown config key '" + key + "'");
  }
  try {
    c.command = j.value("command", c.command);
    c.seed = j.value("seed", c.seed);
    c.radius = j.value("radius", c.radius);
    c.margin = j.value("margin", c.margin);
    c.samples = j.value("samples", c.samples);
    c.out_dir = j.value("out_dir", c.out_dir);
    c.suite = j.value("suite", c.suite);
    c.alpha = j.value("alpha", c.alpha);
    c.verify = j.value("verify", c.verify);
    c.svg = j.value("svg", c.svg);
    c.graph_path = j.value("graph", c.graph_path);
    c.ends = j.value("ends", c.ends);
    c.dimension = j.value("dim", c.dimension);
    c.rank = j.value("rank", c.rank);
    c.moduli = j.value("moduli", c.moduli);
    c.max_vertices = j.value("max_vertices", c.max_vertices);
    c.exhaustive_orders = j.value("exhaustive_orders", c.exhaustive_orders);
    c.random_orders = j.value("random_orders", c.random_orders);
    c.construction = j.value("construction", c.construction);
    c.n = j.value("N", c.n);
    c.in_path = j.value("in", c.in_path);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
}

void validate(const ExperimentConfig& c) {
  static const std::vector<std::string> commands{"sample-tiling", "sample-cube", "sample-product", "sample-abelian",
                                                 "sweep-cube", "invariance", "verify"};
  if (std::find(commands.begin(), commands.end(), c.command) == commands.end()) {
    throw ConfigError("unknown command '" + c.command + "'");
  }
  if (c.margin < 1) throw ConfigError("margin must be positive");
  if (c.radius <= c.margin) throw ConfigError("radius must exceed margin");
  if (c.samples == 0) throw ConfigError("samples must be positive");
  if (!(c.alpha > 0.0 && c.alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  const bool tiled = c.command == "sample-tiling" || c.command == "sample-product" ||
                     (c.command == "sample-abelian" && c.rank >= 2) ||
                     (c.command == "invariance" && c.construction != "bernoulli");
  if (tiled && c.margin < 6) throw ConfigError("tiling-based constructions need margin >= 6");
  if (c.command == "sample-cube" && c.ends != 1 && c.ends != 2) throw ConfigError("--ends must be 1 or 2");
  if (c.command == "sample-product" && c.dimension < 3) throw ConfigError("--dim must be at least 3");
  if (c.command == "sample-abelian" && c.rank < 1) throw ConfigError("--rank must be at least 1");
  if (c.command == "sweep-cube" && (c.max_vertices < 3 || c.max_vertices > kMaxSmallVertices)) {
    throw ConfigError("--max-vertices must lie in 3..7");
  }
  if (c.command == "invariance") {
    if (c.n == 0) throw ConfigError("--N must be positive");
    if (c.construction != "tiling" && c.construction != "tiling-raw" && c.construction != "bernoulli") {
      throw ConfigError("--construction must be tiling, tiling-raw or bernoulli");
    }
  }
  if (c.command == "verify" && c.in_path.empty()) throw ConfigError("verify needs --in");
}

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& r) { return r.pass; });
}

Json SuiteResult::json() const {
  Json out;
  out["suite"] = suite;
  out["pass"] = pass();
  Json list = Json::array();
  for (const auto& r : checks) list.push_back(report_json(r));
  out["checks"] = std::move(list);
  return out;
}

// ---------------------------------------------------------------- tiling

Json tiling_document(int radius, int margin, std::uint64_t seed, std::size_t index) {
  const auto tw = build_tile_window(radius);
  Rng rng = make_rng(seed, index);
  const auto s = sample_tiling(tw, rng, true);
  const auto classes = s.classes();
  Json window;
  window["radius"] = radius;
  window["margin"] = margin;
  window["sample"] = index;
  Json doc;
  doc["kind"] = "tiling";
  doc["provenance"] = provenance_json("wired UST on the tile graph, swaps at attachment squares, random coset shift",
                                      seed, window);
  doc["shift"] = Json::array({s.shift.x, s.shift.y});
  doc["tile_parent"] = s.tile_parent;
  doc["solid"] = edges_json(classes.solid);
  doc["dotted"] = edges_json(classes.dotted);
  return doc;
}

SuiteResult verify_tiling(const Json& doc) {
  SuiteResult out{"tiling", {}};
  const auto& window = doc.at("provenance").at("window");
  const int radius = window.at("radius").get<int>();
  const int margin = window.at("margin").get<int>();
  const auto tw = build_tile_window(radius);
  const SpanningTreeWithEnds tree(tw.graph, doc.at("tile_parent").get<std::vector<int>>(), 1);
  const auto colouring = tiling_colouring(tree, tw);
  const auto shift = doc.at("shift").get<std::vector<std::int64_t>>();

  TilingSample resampled{colouring, Point{shift.at(0), shift.at(1)}, {}};
  const auto classes = resampled.classes();
  out.checks.push_back(same_json("resample_matches", Json::array({doc.at("solid"), doc.at("dotted")}),
                                 Json::array({edges_json(classes.solid), edges_json(classes.dotted)})));

  const auto base = base_colouring(tw);
  CheckReport preserve = passed("swap_degree_preservation", "whole tiled box", 0);
  for (Colour c : {Colour::Solid, Colour::Dotted}) {
    const auto before = base.edges_of(c).degrees();
    const auto after = colouring.edges_of(c).degrees();
    preserve.checked += before.size();
    if (before != after) preserve.fail(std::string("degrees of the ") + to_string(c) + " class changed under the swaps");
  }
  out.checks.push_back(preserve);

  const auto trusted = box_interior(2, radius, margin);
  for (const auto& [name, e] : {std::pair<std::string, const EdgeSet*>{"solid", &classes.solid},
                                std::pair<std::string, const EdgeSet*>{"dotted", &classes.dotted}}) {
    out.checks.push_back(renamed(check_two_regular(*e, trusted), "/" + name));
    out.checks.push_back(renamed(check_acyclic(*e, trusted), "/" + name));
    out.checks.push_back(renamed(check_connected_spanning(*e, trusted), "/" + name));
  }

  // Random finite subtrees of bounded size.
  const std::size_t tiles = tw.tiles.size();
  std::vector<std::size_t> size(tiles + 1, 1);
  std::vector<int> order{tree.end_vertex(0)};
  for (std::size_t h = 0; h < order.size(); ++h) {
    for (int c : tree.children(order[h])) order.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int p = tree.parent(*it);
    if (p != kNoParent) size[static_cast<std::size_t>(p)] += size[static_cast<std::size_t>(*it)];
  }
  std::vector<int> candidates;
  for (std::size_t t = 0; t < tiles; ++t) {
    if (size[t] <= kTilingSubtreeMax) candidates.push_back(static_cast<int>(t));
  }
  Rng rng = make_rng(split_seed(doc_seed(doc), kVerifyStream), doc_index(doc));
  std::vector<CheckReport> parts;
  std::uniform_int_distribution<std::size_t> pick(0, candidates.empty() ? 0 : candidates.size() - 1);
  for (std::size_t k = 0; k < kTilingSubtrees && !candidates.empty(); ++k) {
    parts.push_back(check_internal_edges_on_path(tw, tree, colouring, candidates[pick(rng)]));
  }
  out.checks.push_back(fold("internal_edges_on_path", "random finite subtrees of <= " +
                                                          std::to_string(kTilingSubtreeMax) + " tiles",
                            parts));
  return out;
}

// ------------------------------------------------------------------ cube

Json cube_document(const Json& graph, int ends, std::uint64_t seed, std::size_t index) {
  const auto window = graph_from_json(graph);
  Rng rng = make_rng(seed, index);
  const auto tree = ends == 1 ? wilson_wired_ust(window, rng) : two_ended_tree(window, 0, rng);
  const auto orders = sample_orders(window, rng);
  const auto phi = phi_edges(tree, orders);

  Json win;
  win["graph"] = graph;
  win["ends"] = ends;
  win["sample"] = index;
  Json doc;
  doc["kind"] = "cube";
  doc["provenance"] = provenance_json(ends == 1 ? "wired UST, uniform vertex orders, phi rules"
                                                : "two-ended trunk tree, uniform vertex orders, phi rules",
                                      seed, win);
  doc["tree"] = tree_json(tree);
  doc["orders"] = orders_json(orders);
  doc["edges"] = phi_json(phi);
  return doc;
}

SuiteResult verify_cube(const Json& doc) {
  SuiteResult out{"cube", {}};
  const auto window = graph_from_json(doc.at("provenance").at("window").at("graph"));
  const auto tree = tree_from_json(doc.at("tree"), window);
  const auto orders = orders_from_json(doc.at("orders"));
  const auto phi = phi_edges(tree, orders);
  out.checks.push_back(same_json("resample_matches", doc.at("edges"), phi_json(phi)));

  const auto& g = window.graph();
  const auto e = phi.edge_set();
  const auto trusted = TrustedRegion::interior_of(window);
  out.checks.push_back(check_two_regular(e, trusted));
  out.checks.push_back(check_acyclic(e, trusted));
  out.checks.push_back(check_power_bound(e, g, 3));

  const auto adjacency = index_adjacency(e, g);
  std::vector<CheckReport> parts;
  for (int v : window.interior()) {
    const auto sub = tree.finite_subtree(v);
    const bool inside = std::all_of(sub.begin(), sub.end(), [&](int x) { return window.is_interior(x); });
    if (inside) parts.push_back(check_subpath_property(tree, phi.dagger, adjacency, v));
  }
  out.checks.push_back(fold("subpath_property", "interior v with interior finite subtree", parts));

  CheckReport separate = passed("trunk_rule_outside_finite_subtrees", "all rule-(iii) edges", 0);
  for (const auto& pe : phi.edges) {
    if (pe.rule == PhiRule::Up || pe.rule == PhiRule::Across) continue;
    ++separate.checked;
    if (tree.finite_class_root(pe.a) == tree.finite_class_root(pe.b)) {
      separate.fail("rule-(iii) edge " + g.vertex(pe.a).to_string() + "-" + g.vertex(pe.b).to_string() +
                    " lies inside one finite subtree");
    }
  }
  out.checks.push_back(separate);

  if (tree.end_count() == 2) {
    CheckReport per_edge = passed("one_trunk_rule_per_trunk_edge", "trunk", 0);
    std::vector<std::pair<int, int>> emitted;
    for (const auto& pe : phi.edges) {
      if (pe.rule != PhiRule::Up && pe.rule != PhiRule::Across) emitted.emplace_back(pe.source, pe.source_other);
    }
    auto trunk = tree.trunk_edges();
    per_edge.checked = trunk.size();
    std::sort(emitted.begin(), emitted.end());
    std::sort(trunk.begin(), trunk.end());
    if (emitted != trunk) {
      per_edge.fail(std::to_string(emitted.size()) + " rule-(iii) edges for " + std::to_string(trunk.size()) +
                    " trunk edges");
    }
    out.checks.push_back(per_edge);
  }
  return out;
}

// --------------------------------------------------------------- product

Json product_document(int dimension, int radius, int margin, std::uint64_t seed, std::size_t index) {
  Rng rng = make_rng(seed, index);
  const auto ps = product_ray_zd(static_cast<std::size_t>(dimension), radius, margin, rng);
  Json win;
  win["dimension"] = dimension;
  win["radius"] = radius;
  win["margin"] = margin;
  win["sample"] = index;
  Json doc;
  doc["kind"] = "product";
  doc["provenance"] = provenance_json(ps.ray.construction, seed, win);
  doc["depth"] = ps.depth;
  doc["dropped"] = ps.ray.dropped;
  doc["edges"] = edges_json(ps.ray.edges);
  doc["trusted"] = trusted_json(ps.ray.trusted);
  return doc;
}

SuiteResult verify_product(const Json& doc) {
  SuiteResult out{"product", {}};
  const auto& win = doc.at("provenance").at("window");
  const int dimension = win.at("dimension").get<int>();
  const auto group = AbelianGroup::lattice(static_cast<std::size_t>(dimension));
  const auto e = edges_from_json(doc.at("edges"), group);
  const auto trusted = trusted_from_json(doc.at("trusted"), group);

  Rng rng = make_rng(doc_seed(doc), doc_index(doc));
  const auto ps = product_ray_zd(static_cast<std::size_t>(dimension), win.at("radius").get<int>(),
                                 win.at("margin").get<int>(), rng);
  out.checks.push_back(same_json("resample_matches", doc.at("edges"), edges_json(ps.ray.edges)));
  CheckReport depth = passed("recursion_depth", "construction", 1);
  if (ps.depth != static_cast<std::size_t>(dimension - 2)) depth.fail("depth " + std::to_string(ps.depth));
  out.checks.push_back(depth);

  CheckReport nonempty = passed("trusted_region_nonempty", trusted.description(), trusted.size());
  if (trusted.size() == 0) nonempty.fail("no trusted vertex");
  out.checks.push_back(nonempty);
  out.checks.push_back(check_two_regular(e, trusted));
  out.checks.push_back(check_acyclic(e, trusted));
  out.checks.push_back(check_connected_spanning(e, trusted));

  // The spanning copy of Z^{d-1}: product degree on its trusted vertices.
  CheckReport copy = passed("spanning_copy_degree", ps.copy.trusted.description(), 0);
  const auto deg = ps.copy.edges.degrees();
  const int want = 2 + 2 * (dimension - 2);
  for (const auto& v : ps.copy.trusted.vertices()) {
    ++copy.checked;
    const auto it = deg.find(v);
    const int d = it == deg.end() ? 0 : it->second;
    if (d != want) {
      copy.fail("vertex " + v.to_string() + " has degree " + std::to_string(d) + " in the copy");
      break;
    }
  }
  out.checks.push_back(copy);
  return out;
}

// --------------------------------------------------------------- abelian

Json abelian_document(int rank, const std::vector<std::int64_t>& moduli, int radius, int margin, std::uint64_t seed,
                      std::size_t index) {
  const AbelianGroup group(static_cast<std::size_t>(rank), moduli);
  const auto gens = standard_generators(group);
  Rng rng = make_rng(seed, index);
  const auto s = sample_abelian(static_cast<std::size_t>(rank), moduli, gens, radius, margin, rng);
  Json win;
  win["group"] = group_json(group);
  win["radius"] = radius;
  win["margin"] = margin;
  win["sample"] = index;
  Json doc;
  doc["kind"] = "abelian";
  doc["provenance"] = provenance_json(s.construction, seed, win);
  Json g = Json::array();
  for (const auto& x : gens) g.push_back(element_json(x));
  doc["generators"] = std::move(g);
  Json path = Json::array();
  for (const auto& x : s.coset_path.path) path.push_back(element_json(x));
  doc["coset_path"] = std::move(path);
  doc["base_ray"] = edges_json(s.base_ray);
  doc["edges"] = edges_json(s.edges);
  doc["trusted"] = trusted_json(s.trusted);
  return doc;
}

SuiteResult verify_abelian(const Json& doc) {
  SuiteResult out{"abelian", {}};
  const auto group = group_from_json(doc.at("provenance").at("window").at("group"));
  std::vector<GroupElement> gens;
  for (const auto& x : doc.at("generators")) gens.push_back(element_from_json(x, group));
  const SubLattice lattice(group, gens);
  const auto e = edges_from_json(doc.at("edges"), group);
  const auto base = edges_from_json(doc.at("base_ray"), group);
  const auto trusted = trusted_from_json(doc.at("trusted"), group);

  AbelianSample s;
  s.edges = e;
  s.trusted = trusted;
  for (const auto& x : doc.at("coset_path")) s.coset_path.path.push_back(element_from_json(x, group));

  CheckReport path = passed("coset_path", "P", s.coset_path.path.size());
  const auto q = quotient_graph(lattice);
  if (s.coset_path.path.size() != q.size()) path.fail("P has " + std::to_string(s.coset_path.path.size()) +
                                                      " vertices for " + std::to_string(q.size()) + " cosets");
  for (std::size_t k = 0; k < s.coset_path.path.size() && path.pass; ++k) {
    for (std::size_t l = 0; l < k; ++l) {
      if (lattice.contains(group.sub(s.coset_path.path[k], s.coset_path.path[l]))) {
        path.fail("P visits the coset of " + s.coset_path.path[k].to_string() + " twice");
        break;
      }
    }
  }
  out.checks.push_back(path);

  CheckReport nonempty = passed("trusted_region_nonempty", trusted.description(), trusted.size());
  if (trusted.size() == 0) nonempty.fail("no trusted vertex");
  out.checks.push_back(nonempty);
  out.checks.push_back(check_two_regular(e, trusted));
  out.checks.push_back(check_acyclic(e, trusted));
  out.checks.push_back(check_connected_spanning(e, trusted));

  const auto cover = check_unique_translate(s, lattice);
  CheckReport unique = passed("unique_path_translate", trusted.description(), cover.checked);
  if (!cover.pass) unique.fail(cover.witness);
  out.checks.push_back(unique);

  std::vector<std::vector<GroupElement>> translates;
  for (const auto& gamma : base.vertices()) {
    std::vector<GroupElement> t;
    for (const auto& x : s.coset_path.path) t.push_back(group.add(gamma, x));
    translates.push_back(std::move(t));
  }
  out.checks.push_back(check_contraction(e, translates, base));
  return out;
}

SuiteResult verify_document(const Json& doc, const std::string& suite) {
  const std::string kind = doc.value("kind", std::string{});
  const std::string which = suite.empty() ? kind : suite;
  if (!suite.empty() && !kind.empty() && suite != kind) {
    throw ConfigError("suite '" + suite + "' does not match a '" + kind + "' document");
  }
  if (which == "tiling") return verify_tiling(doc);
  if (which == "cube") return verify_cube(doc);
  if (which == "product") return verify_product(doc);
  if (which == "abelian") return verify_abelian(doc);
  throw ConfigError("unknown suite '" + which + "'");
}

// ------------------------------------------------------------ invariance

std::vector<std::pair<GroupElement, GroupElement>> invariance_edges() {
  return {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, {{1, 1}, {2, 1}}, {{0, 1}, {0, 2}}, {{1, 0}, {1, 1}}};
}

std::vector<GroupElement> coset_translates() {
  std::vector<GroupElement> out;
  for (const auto& p : coset_representatives()) out.push_back(to_element(p));
  return out;
}

namespace {

constexpr int kEventBox = 6;  // events and their translates stay in [-6, 6]^2

std::vector<Segment> event_box_segments() {
  std::vector<Segment> out;
  for (int x = -kEventBox; x <= kEventBox; ++x) {
    for (int y = -kEventBox; y <= kEventBox; ++y) {
      if (x < kEventBox) out.push_back(make_segment({x, y}, {x + 1, y}));
      if (y < kEventBox) out.push_back(make_segment({x, y}, {x, y + 1}));
    }
  }
  return out;
}

}  // namespace

Json invariance_document(const std::string& construction, int radius, int margin, std::size_t n, double alpha,
                         std::uint64_t seed) {
  const auto z2 = AbelianGroup::lattice(2);
  std::vector<TranslatedEvent> events;
  for (const auto& [a, b] : invariance_edges()) events.push_back(edge_event(z2, a, b));
  const auto translates = coset_translates();

  EdgeSampler sampler;
  TrustedRegion trusted;
  std::string description;
  if (construction == "bernoulli") {
    const auto box = build_grid_window(2, kEventBox, 1);
    sampler = bernoulli_bond_sampler(box.graph(), 0.5);
    trusted = TrustedRegion::everything(box.graph());
    description = "i.i.d. Bernoulli(1/2) bond percolation";
  } else {
    const bool randomize = construction == "tiling";
    if (radius - margin < kEventBox) throw ConfigError("invariance window too small for the event box");
    auto tw = std::make_shared<TileWindow>(build_tile_window(radius));
    auto segments = std::make_shared<std::vector<Segment>>(event_box_segments());
    sampler = [tw, segments, randomize](Rng& rng) {
      const auto s = sample_tiling(*tw, rng, randomize);
      EdgeSet solid;
      for (const auto& seg : *segments) {
        if (s.colour_at(seg) == Colour::Solid) solid.insert(to_edge(seg));
      }
      return solid;
    };
    trusted = box_interior(2, radius, margin);
    description = randomize ? "solid class of the coset-randomized tiling" : "solid class of the unshifted tiling";
  }

  const auto reports = invariance_campaign(sampler, events, translates, z2, trusted, n, alpha, seed);
  Json win;
  win["radius"] = radius;
  win["margin"] = margin;
  win["N"] = n;
  win["alpha"] = alpha;
  Json doc;
  doc["kind"] = "invariance";
  doc["provenance"] = provenance_json(description, seed, win);
  doc["construction"] = construction;
  Json list = Json::array();
  std::size_t rejections = 0;
  for (const auto& r : reports) {
    list.push_back(report_json(r));
    rejections += r.rejections();
  }
  doc["reports"] = std::move(list);
  doc["rejections"] = rejections;
  doc["decision"] = rejections == 0 ? "invariance not rejected" : "invariance rejected";
  return doc;
}

Json calibration_document(std::size_t campaigns, std::size_t n, double alpha, std::uint64_t seed) {
  const auto z2 = AbelianGroup::lattice(2);
  const auto box = build_grid_window(2, kEventBox, 1);
  const auto sampler = bernoulli_bond_sampler(box.graph(), 0.5);
  const auto [a, b] = invariance_edges().front();
  const auto report = calibrate(sampler, edge_event(z2, a, b), coset_translates(), z2,
                                TrustedRegion::everything(box.graph()), n, alpha, campaigns, seed);
  Json win;
  win["campaigns"] = campaigns;
  win["N"] = n;
  win["alpha"] = alpha;
  Json doc;
  doc["kind"] = "calibration";
  doc["provenance"] = provenance_json("repeated campaigns on i.i.d. Bernoulli(1/2) bond percolation", seed, win);
  doc["report"] = report_json(report);
  return doc;
}

Json sweep_document(int max_vertices, int exhaustive_up_to, std::size_t random_orders, std::uint64_t seed) {
  const auto r = sweep_finite_cycles(max_vertices, exhaustive_up_to, random_orders, seed);
  Json win;
  win["max_vertices"] = max_vertices;
  win["exhaustive_orders_up_to"] = exhaustive_up_to;
  win["random_orders"] = random_orders;
  Json doc;
  doc["kind"] = "sweep";
  doc["provenance"] = provenance_json("rooted spanning trees of all small connected graphs", seed, win);
  doc["graphs_per_size"] = r.graphs_per_size;
  doc["graphs"] = r.graphs;
  doc["trees"] = r.trees;
  doc["cycles"] = r.cycles;
  doc["brute_force_agree"] = r.brute_force_agree;
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    Json item;
    item["n"] = f.graph.n;
    item["graph_bits"] = f.graph.bits;
    item["tree"] = f.tree;
    item["root"] = f.root;
    item["reason"] = f.reason;
    fails.push_back(std::move(item));
  }
  doc["failures"] = std::move(fails);
  doc["pass"] = r.pass();
  return doc;
}

// ------------------------------------------------------------------- run

int run(const ExperimentConfig& config, std::ostream& log) {
  try {
    validate(config);
  } catch (const ConfigError& e) {
    log << "usage error: " << e.what() << '\n';
    return 2;
  }
  const std::string dir = out_dir(config);
  std::filesystem::create_directories(dir);
  int status = 0;

  auto finish_suite = [&](const SuiteResult& r, const std::string& stem) {
    const auto path = artifact(dir, stem + ".report.json");
    write_text(path, dump(r.json()));
    std::size_t failed = 0;
    for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
    log << "suite " << r.suite << ' ' << stem << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks.size()
        << " checks, " << failed << " failed)";
    if (!r.pass()) {
      log << " report " << path;
      status = 1;
    }
    log << '\n';
  };

  try {
    const std::string tag = std::to_string(config.seed);
    if (config.command == "sample-tiling") {
      for (std::size_t i = 0; i < config.samples; ++i) {
        const std::string stem = "tiling_" + tag + "_" + std::to_string(i);
        const auto doc = tiling_document(config.radius, config.margin, config.seed, i);
        write_text(artifact(dir, stem + ".json"), dump(doc));
        if (config.svg) {
          const auto z2 = AbelianGroup::lattice(2);
          ColourClasses c{edges_from_json(doc["solid"], z2), edges_from_json(doc["dotted"], z2)};
          write_text(artifact(dir, stem + ".svg"), render_colour_classes(c, config.radius));
        }
        if (config.verify) finish_suite(verify_tiling(doc), stem);
      }
    } else if (config.command == "sample-cube") {
      Json graph;
      if (!config.graph_path.empty()) {
        graph = read_json(config.graph_path);
      } else {
        graph["dimension"] = 2;
        graph["radius"] = config.radius;
        graph["margin"] = config.margin;
      }
      for (std::size_t i = 0; i < config.samples; ++i) {
        const std::string stem = "cube_" + std::to_string(config.ends) + "end_" + tag + "_" + std::to_string(i);
        const auto doc = cube_document(graph, config.ends, config.seed, i);
        write_text(artifact(dir, stem + ".json"), dump(doc));
        const auto window = graph_from_json(graph);
        if (config.svg && window.dimension() == 2 && window.graph().group().moduli().empty() && window.radius() > 0) {
          std::vector<SvgLayer> layers;
          std::map<std::string, EdgeSet> by_rule;
          for (const auto& item : doc["edges"]) {
            const auto z2 = AbelianGroup::lattice(2);
            by_rule[item["rule"].get<std::string>()].insert(element_from_json(item["edge"][0], z2),
                                                            element_from_json(item["edge"][1], z2));
          }
          const std::map<std::string, std::string> colour{{"i", "black"},        {"ii", "#2471a3"},
                                                          {"iii-a", "#c0392b"},  {"iii-b", "#d35400"},
                                                          {"iii-c", "#8e44ad"}};
          for (const auto& [rule, edges] : by_rule) layers.push_back({edges, colour.at(rule), "", 1.5});
          write_text(artifact(dir, stem + ".svg"), render_svg(layers, window.radius()));
        } else if (config.svg) {
          const auto tree = tree_from_json(doc["tree"], window);
          const auto phi = phi_edges(tree, orders_from_json(doc["orders"]));
          write_text(artifact(dir, stem + ".dot"), render_dot(window.graph(), phi.edge_set()));
        }
        if (config.verify) finish_suite(verify_cube(doc), stem);
      }
    } else if (config.command == "sample-product") {
      for (std::size_t i = 0; i < config.samples; ++i) {
        const std::string stem = "product_d" + std::to_string(config.dimension) + "_" + tag + "_" + std::to_string(i);
        const auto doc = product_document(config.dimension, config.radius, config.margin, config.seed, i);
        write_text(artifact(dir, stem + ".json"), dump(doc));
        if (config.verify) finish_suite(verify_product(doc), stem);
      }
    } else if (config.command == "sample-abelian") {
      std::string group_tag = "Z" + std::to_string(config.rank);
      for (auto m : config.moduli) group_tag += "xZ" + std::to_string(m);
      for (std::size_t i = 0; i < config.samples; ++i) {
        const std::string stem = "abelian_" + group_tag + "_" + tag + "_" + std::to_string(i);
        const auto doc = abelian_document(config.rank, config.moduli, config.radius, config.margin, config.seed, i);
        write_text(artifact(dir, stem + ".json"), dump(doc));
        if (config.verify) finish_suite(verify_abelian(doc), stem);
      }
    } else if (config.command == "sweep-cube") {
      const auto doc = sweep_document(config.max_vertices, config.exhaustive_orders, config.random_orders, config.seed);
      write_text(artifact(dir, "sweep_cube_" + tag + ".json"), dump(doc));
      log << "suite sweep-cube: " << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << " (" << doc["graphs"] << " graphs, "
          << doc["trees"] << " trees, " << doc["cycles"] << " cycles)\n";
      if (!doc["pass"].get<bool>()) status = 1;
    } else if (config.command == "invariance") {
      const auto doc =
          invariance_document(config.construction, config.radius, config.margin, config.n, config.alpha, config.seed);
      write_text(artifact(dir, "invariance_" + config.construction + "_" + tag + ".json"), dump(doc));
      log << "invariance " << config.construction << ": " << doc["decision"].get<std::string>() << " ("
          << doc["rejections"] << " rejections over " << doc["reports"].size() << " events x "
          << coset_translates().size() << " translates)\n";
    } else if (config.command == "verify") {
      const auto doc = read_json(config.in_path);
      const auto result = verify_document(doc, config.suite);
      const auto stem = std::filesystem::path(config.in_path).stem().string();
      finish_suite(result, "verify_" + stem);
    }
  } catch (const ConfigError& e) {
    log << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const StructureError& e) {
    log << "structure error: " << e.what() << '\n';
    return 1;
  }
  return status;
}

}  // namespace dray::runner
