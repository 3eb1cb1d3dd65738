// Plain-text renderings: SVG drawings of planar edge sets over the Z^2 grid
// and Graphviz DOT for arbitrary finite graphs.
#pragma once

#include <string>
#include <vector>

#include "dray/graph.hpp"
#include "dray/tiling.hpp"

namespace dray {

struct SvgLayer {
  EdgeSet edges;
  std::string colour;
  /// SVG stroke-dasharray value; empty for a solid stroke.
  std::string dash;
  double width = 2.0;
};

/// Draws the grid [-radius, radius]^2 in light grey with the layers on top.
/// Only 2-dimensional torsion-free vertices are drawn; y grows upwards.
std::string render_svg(const std::vector<SvgLayer>& layers, int radius, int cell = 16);

/// Solid class as a solid black stroke, dotted class as a dashed red stroke.
std::string render_colour_classes(const ColourClasses& classes, int radius, int cell = 16);

/// DOT text; `highlight` edges are drawn bold even when absent from g.
std::string render_dot(const FiniteGraph& g, const EdgeSet& highlight = {});

}  // namespace dray
