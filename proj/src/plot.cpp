#include "intervox/plot.hpp"

#include <algorithm>
#include <cstdio>

#include "intervox/format.hpp"

namespace intervox {

namespace {

constexpr double kWidth = 640.0;
constexpr double kLeft = 80.0;
constexpr double kStrip = 28.0;
constexpr double kGap = 22.0;
constexpr double kTop = 24.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* color(Sign s) {
  switch (s) {
    case Sign::Pos: return "#4caf50";
    case Sign::Neg: return "#e53935";
    case Sign::Unknown: break;
  }
  return "#9e9e9e";
}

}  // namespace

std::string plot_svg(const RangeResult& result, const Box& domain) {
  const double height = kTop + static_cast<double>(domain.size()) * (kStrip + kGap) + 8.0;
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth + kLeft + 20) +
                    "\" height=\"" + num(height) + "\" font-family=\"monospace\" font-size=\"11\">\n";
  svg += "<text x=\"" + num(kLeft) + "\" y=\"14\">" +
         escape(result.exact ? "exact: " : "enclosure: ") + escape(format_set(result.range, 6)) +
         "</text>\n";

  for (std::size_t i = 0; i < domain.size(); ++i) {
    const Interval& dom = domain[i];
    const double y = kTop + static_cast<double>(i) * (kStrip + kGap);
    const double w = dom.width();
    auto xpos = [&](double v) { return kLeft + (w > 0.0 ? (v - dom.lo()) / w * kWidth : 0.0); };
    auto rect = [&](const Interval& x, const char* fill) {
      const double x0 = xpos(x.lo());
      const double x1 = w > 0.0 ? xpos(x.hi()) : kLeft + kWidth;
      svg += "<rect x=\"" + num(x0) + "\" y=\"" + num(y) + "\" width=\"" + num(std::max(x1 - x0, 0.5)) +
             "\" height=\"" + num(kStrip) + "\" fill=\"" + fill +
             "\" fill-opacity=\"0.35\" stroke=\"" + fill + "\" stroke-width=\"0.5\"/>\n";
    };

    svg += "<text x=\"4\" y=\"" + num(y + kStrip * 0.65) + "\">" + escape(domain.name(i)) + "</text>\n";
    for (const Region& r : result.regions) {
      if (auto j = r.box.find(domain.name(i))) rect(r.box[*j], color(r.signs[*j]));
    }
    for (const Box& b : result.fallback_regions) {
      if (auto j = b.find(domain.name(i))) rect(b[*j], color(Sign::Unknown));
    }
    svg += "<text x=\"" + num(kLeft) + "\" y=\"" + num(y + kStrip + 12) + "\">" +
           escape(format_significant(dom.lo(), 6)) + "</text>\n";
    svg += "<text x=\"" + num(kLeft + kWidth) + "\" y=\"" + num(y + kStrip + 12) +
           "\" text-anchor=\"end\">" + escape(format_significant(dom.hi(), 6)) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace intervox
