#pragma once

#include <string>

#include "intervox/box.hpp"
#include "intervox/range.hpp"

namespace intervox {

/// Static SVG with one strip per coordinate of `domain`. Each region is drawn
/// as its projection onto that coordinate, colored by the sign of the partial
/// along it (green +, red -); residue boxes are gray.
std::string plot_svg(const RangeResult& result, const Box& domain);

}  // namespace intervox
