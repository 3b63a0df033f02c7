#pragma once

#include <string>
#include <string_view>

#include "mfp/baxter.hpp"
#include "mfp/geometry.hpp"

namespace mfp {

// ".fp" text format: one block per line as "x1 y1 x2 y2" (y up), '#' starts
// a comment. The bounding box is [0, max x2] x [0, max y2]; the coordinate
// minima must be 0. Duplicate or malformed lines are rejected with the line
// number in the error.
FloorplanDrawing parse_floorplan_text(std::string_view text);
std::string format_floorplan_text(const FloorplanDrawing& f);

// Permutation text: 1-based integers separated by spaces and/or commas.
Permutation parse_permutation_text(std::string_view text);
std::string format_permutation_text(const Permutation& p);

} // namespace mfp
