#pragma once

#include <string>

#include "carpetdim/carpet.hpp"

namespace carpetdim {

/// Renders the depth-n prefractal as an SVG document: one filled rectangle
/// per depth-n word, in lexicographic word order, the unit square mapped to
/// a size x size viewport with the y-axis flipped so row 0 sits at the
/// bottom. Depth 0 is the unit square itself. Throws std::invalid_argument
/// when the rectangle count would exceed 1e6.
std::string render_svg(const CarpetSpec& spec, int depth, int size);

}  // namespace carpetdim
