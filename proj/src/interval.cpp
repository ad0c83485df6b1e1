#include "intervox/interval.hpp"

#include <algorithm>
#include <cmath>

#include "intervox/errors.hpp"
#include "intervox/format.hpp"

namespace intervox {

namespace {

double normalize_zero(double v) noexcept { return v == 0.0 ? 0.0 : v; }

enum class SignClass { NonNeg, Mixed, NonPos };

// [0,0] is classified NonNeg; the table rows agree on it either way.
SignClass classify(const Interval& x) noexcept {
  if (x.lo() >= 0.0) return SignClass::NonNeg;
  if (x.hi() <= 0.0) return SignClass::NonPos;
  return SignClass::Mixed;
}

}  // namespace

Interval::Interval(double value) : Interval(value, value) {}

Interval::Interval(double lo, double hi) : lo_(normalize_zero(lo)), hi_(normalize_zero(hi)) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidInterval("interval endpoints must be finite");
  }
  if (lo > hi) {
    throw InvalidInterval("interval lower endpoint " + format_shortest(lo) +
                          " exceeds upper endpoint " + format_shortest(hi));
  }
}

double Interval::mid() const noexcept { return lo_ + 0.5 * (hi_ - lo_); }

double Interval::mag() const noexcept { return std::max(std::fabs(lo_), std::fabs(hi_)); }

Interval add(const Interval& x, const Interval& y) {
  return Interval(x.lo() + y.lo(), x.hi() + y.hi());
}

Interval sub(const Interval& x, const Interval& y) {
  return Interval(x.lo() - y.hi(), x.hi() - y.lo());
}

Interval neg(const Interval& x) { return Interval(-x.hi(), -x.lo()); }

Interval mul(const Interval& x, const Interval& y) {
  const double x1 = x.lo(), x2 = x.hi();
  const double y1 = y.lo(), y2 = y.hi();
  switch (classify(x)) {
    case SignClass::NonNeg:
      switch (classify(y)) {
        case SignClass::NonNeg: return Interval(x1 * y1, x2 * y2);
        case SignClass::Mixed: return Interval(x2 * y1, x2 * y2);
        case SignClass::NonPos: return Interval(x2 * y1, x1 * y2);
      }
      break;
    case SignClass::Mixed:
      switch (classify(y)) {
        case SignClass::NonNeg: return Interval(x1 * y2, x2 * y2);
        case SignClass::Mixed:
          return Interval(std::min(x1 * y2, x2 * y1), std::max(x1 * y1, x2 * y2));
        case SignClass::NonPos: return Interval(x2 * y1, x1 * y1);
      }
      break;
    case SignClass::NonPos:
      switch (classify(y)) {
        case SignClass::NonNeg: return Interval(x1 * y2, x2 * y1);
        case SignClass::Mixed: return Interval(x1 * y2, x1 * y1);
        // Upper endpoint is the product of the two most negative endpoints.
        case SignClass::NonPos: return Interval(x2 * y2, x1 * y1);
      }
      break;
  }
  return mul_minmax(x, y);  // unreachable
}

Interval mul_minmax(const Interval& x, const Interval& y) {
  const double s[] = {x.lo() * y.lo(), x.lo() * y.hi(), x.hi() * y.lo(), x.hi() * y.hi()};
  const auto [lo, hi] = std::minmax_element(std::begin(s), std::end(s));
  return Interval(*lo, *hi);
}

Interval recip(const Interval& y) {
  if (y.contains_zero()) {
    throw ZeroInDivisor("divisor " + to_string(y) + " contains zero");
  }
  return Interval(1.0 / y.hi(), 1.0 / y.lo());
}

Interval div(const Interval& x, const Interval& y) {
  if (y.contains_zero()) {
    throw ZeroInDivisor("divisor " + to_string(y) + " contains zero");
  }
  // Direct endpoint quotients keep one rounding per bound instead of two.
  const double q[] = {x.lo() / y.lo(), x.lo() / y.hi(), x.hi() / y.lo(), x.hi() / y.hi()};
  const auto [lo, hi] = std::minmax_element(std::begin(q), std::end(q));
  return Interval(*lo, *hi);
}

Interval scale(double k, const Interval& x) { return mul(Interval(k), x); }

std::optional<Interval> intersect(const Interval& x, const Interval& y) {
  const double lo = std::max(x.lo(), y.lo());
  const double hi = std::min(x.hi(), y.hi());
  if (lo > hi) return std::nullopt;
  return Interval(lo, hi);
}

Interval hull(const Interval& x, const Interval& y) {
  return Interval(std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi()));
}

bool IntervalSet::contains(double x) const noexcept {
  return std::any_of(parts_.begin(), parts_.end(),
                     [x](const Interval& p) { return p.contains(x); });
}

Interval IntervalSet::hull() const {
  if (parts_.empty()) throw Error("hull of an empty interval set");
  return Interval(parts_.front().lo(), parts_.back().hi());
}

IntervalSet union_merge(std::span<const Interval> parts) {
  std::vector<Interval> sorted(parts.begin(), parts.end());
  std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) {
    return a.lo() < b.lo() || (a.lo() == b.lo() && a.hi() < b.hi());
  });
  IntervalSet out;
  for (const Interval& p : sorted) {
    if (!out.parts_.empty() && p.lo() <= out.parts_.back().hi()) {
      Interval& last = out.parts_.back();
      last = Interval(last.lo(), std::max(last.hi(), p.hi()));
    } else {
      out.parts_.push_back(p);
    }
  }
  return out;
}

IntervalSet union_merge(std::initializer_list<Interval> parts) {
  return union_merge(std::span<const Interval>(parts.begin(), parts.size()));
}

double hausdorff(const IntervalSet& set, const Interval& x) {
  if (set.empty()) throw Error("Hausdorff distance to an empty set");
  auto dist_to_set = [&set](double v) {
    double best = INFINITY;
    for (const Interval& p : set) {
      const double d = v < p.lo() ? p.lo() - v : (v > p.hi() ? v - p.hi() : 0.0);
      best = std::min(best, d);
    }
    return best;
  };
  auto dist_to_x = [&x](double v) {
    return v < x.lo() ? x.lo() - v : (v > x.hi() ? v - x.hi() : 0.0);
  };
  // Farthest points of the set from x are its extreme endpoints.
  double d = std::max(dist_to_x(set.hull().lo()), dist_to_x(set.hull().hi()));
  // Farthest points of x from the set are x's endpoints or midpoints of gaps
  // between parts that fall inside x.
  d = std::max({d, dist_to_set(x.lo()), dist_to_set(x.hi())});
  for (std::size_t i = 0; i + 1 < set.size(); ++i) {
    const double a = set[i].hi(), b = set[i + 1].lo();
    const double m = a + 0.5 * (b - a);
    if (x.contains(m)) d = std::max(d, dist_to_set(m));
  }
  return d;
}

std::string to_string(const Interval& x) {
  return "[" + format_shortest(x.lo()) + "," + format_shortest(x.hi()) + "]";
}

std::string to_string(const IntervalSet& set) {
  if (set.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += " U ";
    out += to_string(set[i]);
  }
  return out;
}

}  // namespace intervox
