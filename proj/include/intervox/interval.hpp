#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace intervox {

/// Closed bounded interval [lo, hi] with lo <= hi and finite endpoints.
///
/// Arithmetic uses round-to-nearest doubles with no outward rounding, so
/// results are the endpoint formulas evaluated in floating point. A negative
/// zero endpoint is stored as +0.0.
class Interval {
 public:
  /// Degenerate interval [0, 0].
  constexpr Interval() noexcept = default;

  /// Degenerate interval [value, value].
  explicit Interval(double value);

  /// Throws InvalidInterval if lo > hi or either endpoint is not finite.
  Interval(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

  double width() const noexcept { return hi_ - lo_; }
  double mid() const noexcept;
  /// Largest absolute value of any member.
  double mag() const noexcept;

  bool is_degenerate() const noexcept { return lo_ == hi_; }
  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  bool contains_zero() const noexcept { return lo_ <= 0.0 && 0.0 <= hi_; }
  /// True if *this is a subset of other.
  bool subset_of(const Interval& other) const noexcept {
    return other.lo_ <= lo_ && hi_ <= other.hi_;
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval add(const Interval& x, const Interval& y);
Interval sub(const Interval& x, const Interval& y);
Interval neg(const Interval& x);

/// Product through the nine sign cases of the operands.
Interval mul(const Interval& x, const Interval& y);

/// Product as [min S, max S] over the four endpoint products. Agrees exactly
/// with mul(); kept as the reference form for testing.
Interval mul_minmax(const Interval& x, const Interval& y);

/// Throws ZeroInDivisor if 0 is in y.
Interval recip(const Interval& y);
/// Throws ZeroInDivisor if 0 is in y.
Interval div(const Interval& x, const Interval& y);

/// Scalar multiple k * x.
Interval scale(double k, const Interval& x);

/// Empty result is std::nullopt.
std::optional<Interval> intersect(const Interval& x, const Interval& y);

/// Smallest interval containing both.
Interval hull(const Interval& x, const Interval& y);

inline Interval operator+(const Interval& x, const Interval& y) { return add(x, y); }
inline Interval operator-(const Interval& x, const Interval& y) { return sub(x, y); }
inline Interval operator-(const Interval& x) { return neg(x); }
inline Interval operator*(const Interval& x, const Interval& y) { return mul(x, y); }
inline Interval operator/(const Interval& x, const Interval& y) { return div(x, y); }

/// Sorted union of pairwise disjoint, non-touching intervals.
class IntervalSet {
 public:
  IntervalSet() = default;

  const std::vector<Interval>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  std::size_t size() const noexcept { return parts_.size(); }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }
  const Interval& operator[](std::size_t i) const { return parts_[i]; }

  bool contains(double x) const noexcept;
  /// Requires a nonempty set.
  Interval hull() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
  friend IntervalSet union_merge(std::span<const Interval> parts);

 private:
  std::vector<Interval> parts_;
};

/// Canonicalizes a list of intervals; overlapping or touching parts merge.
IntervalSet union_merge(std::span<const Interval> parts);
IntervalSet union_merge(std::initializer_list<Interval> parts);

/// Hausdorff distance between a nonempty set and an interval.
double hausdorff(const IntervalSet& set, const Interval& x);

/// "[lo,hi]" with shortest round-trip formatting of each endpoint.
std::string to_string(const Interval& x);
/// Parts joined by " U "; "{}" when empty.
std::string to_string(const IntervalSet& set);

}  // namespace intervox
