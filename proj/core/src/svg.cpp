#include "dray/svg.hpp"

#include <sstream>

namespace dray {

std::string render_svg(const std::vector<SvgLayer>& layers, int radius, int cell) {
  const int pad = cell;
  const int side = 2 * radius * cell + 2 * pad;
  auto px = [&](std::int64_t x) { return pad + (x + radius) * cell; };
  auto py = [&](std::int64_t y) { return pad + (radius - y) * cell; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
     << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g stroke=\"#dddddd\" stroke-width=\"0.5\">\n";
  for (int k = -radius; k <= radius; ++k) {
    os << "<line x1=\"" << px(k) << "\" y1=\"" << py(-radius) << "\" x2=\"" << px(k) << "\" y2=\"" << py(radius)
       << "\"/>\n";
    os << "<line x1=\"" << px(-radius) << "\" y1=\"" << py(k) << "\" x2=\"" << px(radius) << "\" y2=\"" << py(k)
       << "\"/>\n";
  }
  os << "</g>\n";
  for (const auto& layer : layers) {
    os << "<g stroke=\"" << layer.colour << "\" stroke-width=\"" << layer.width << "\" stroke-linecap=\"round\"";
    if (!layer.dash.empty()) os << " stroke-dasharray=\"" << layer.dash << '"';
    os << ">\n";
    for (const auto& [a, b] : layer.edges) {
      if (a.free.size() != 2 || !a.torsion.empty()) continue;
      os << "<line x1=\"" << px(a.free[0]) << "\" y1=\"" << py(a.free[1]) << "\" x2=\"" << px(b.free[0])
         << "\" y2=\"" << py(b.free[1]) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_colour_classes(const ColourClasses& classes, int radius, int cell) {
  return render_svg({{classes.solid, "black", "", 2.5}, {classes.dotted, "#c0392b", "3,3", 2.0}}, radius, cell);
}

std::string render_dot(const FiniteGraph& g, const EdgeSet& highlight) {
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    os << "  v" << v << " [label=\"" << g.vertex(static_cast<int>(v)).to_string() << "\"];\n";
  }
  for (const auto& [a, b] : g.edges()) {
    if (highlight.contains(a, b)) continue;
    os << "  v" << g.index_of(a) << " -- v" << g.index_of(b) << " [color=gray];\n";
  }
  for (const auto& [a, b] : highlight) {
    const int ia = g.index_of(a);
    const int ib = g.index_of(b);
    if (ia < 0 || ib < 0) continue;
    os << "  v" << ia << " -- v" << ib << " [penwidth=2.5];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace dray
