#pragma once

#include <string>

#include "intervox/directed.hpp"
#include "intervox/interval.hpp"

namespace intervox {

/// Shortest decimal string that parses back to the same double.
std::string format_shortest(double v);

/// printf-style %.{digits}g, which trims trailing zeros. -0 prints as 0.
std::string format_significant(double v, int digits);

/// Renderers with a fixed number of significant digits (used for stable
/// text output).
std::string format_interval(const Interval& x, int digits);
std::string format_set(const IntervalSet& set, int digits);

}  // namespace intervox
