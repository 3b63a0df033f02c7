#pragma once

#include <string>

#include "mfp/geometry.hpp"

namespace mfp {

// Deterministic SVG: one <rect> per block in (y1, x1) order, integer-scaled
// coordinates, fixed stroke. The y axis is flipped so drawings appear with y
// up. Identical inputs produce byte-identical output.
std::string render_svg(const FloorplanDrawing& f, Coord scale = 40);

} // namespace mfp
