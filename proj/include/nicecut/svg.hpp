#pragma once

// SVG figures of a dissection: the cake with its pieces on the left, the box
// with the moved pieces on the right, y pointing up as in the usual drawings.

#include "nicecut/dissection.hpp"

#include <string>

namespace nicecut {

struct SvgOptions {
  /// Width of one panel in SVG user units.
  double panel_width = 360.0;
  double margin = 24.0;
  double stroke_width = 1.5;
  bool vertex_labels = true;
};

std::string render_svg(const Dissection& d, const SvgOptions& options = {});

}  // namespace nicecut
