#include "intervox/format.hpp"

#include <charconv>
#include <cstdio>

namespace intervox {

std::string format_shortest(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_significant(double v, int digits) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string format_interval(const Interval& x, int digits) {
  return "[" + format_significant(x.lo(), digits) + "," + format_significant(x.hi(), digits) +
         "]";
}

std::string format_set(const IntervalSet& set, int digits) {
  if (set.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += " U ";
    out += format_interval(set[i], digits);
  }
  return out;
}

}  // namespace intervox
