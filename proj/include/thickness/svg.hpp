#pragma once

#include <string>

#include "thickness/drawing.hpp"

namespace thickness {

// SVG 1.1 rendering of a layered drawing: circular marks for singletons,
// triangular marks for k-tons, one stroke color and dash pattern per layer
// so layers stay distinguishable in print. Output bytes are deterministic
// for fixed input and scale.
std::string drawing_to_svg(const LayeredDrawing& d, double scale = 1.0);

} // namespace thickness
