#pragma once

#include <string>
#include <string_view>

#include "polyarea/instance.hpp"
#include "polyarea/polygon.hpp"

namespace polyarea {

// Standalone SVG 1.1 document: fixed 1000x1040 viewport, instance points as
// dots, the polygon (when given) filled, the caption along the bottom.
// Output bytes are deterministic for identical inputs.
std::string render_svg(const Instance& inst, const Polygon* poly, std::string_view caption);

}  // namespace polyarea
