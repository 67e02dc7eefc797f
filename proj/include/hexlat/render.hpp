#pragma once

// SVG emission of a diagram in a fundamental domain; arcs are wrap-split at
// the domain boundary rather than clipped with masks, so the output needs no
// tricks from the viewer.

#include "hexlat/diagram.hpp"

#include <string>

namespace hexlat {

struct RenderOptions {
    bool hexagon = false;      // square domain when false
    bool show_foliation = false;
    double scale = 420.0;
    bool labels = true;
};

std::string render_svg(const LatticeDiagram& d, const RenderOptions& opts = {});

} // namespace hexlat
