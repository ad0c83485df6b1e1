#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "intervox/box.hpp"
#include "intervox/expr.hpp"
#include "intervox/interval.hpp"

namespace intervox {

/// Certified sign of a partial derivative over a box.
enum class Sign { Pos, Neg, Unknown };

const char* to_string(Sign s);

/// A sub-box together with the sign of each partial derivative of f over it,
/// aligned with the box's coordinate order.
struct Region {
  Box box;
  std::vector<Sign> signs;

  /// Every sign is Pos or Neg, so f is monotone in each coordinate.
  bool certified() const noexcept;
  Sign sign(const std::string& var) const;
};

struct RangeConfig {
  int max_depth = 40;
  double min_width = 1e-8;
  /// Bound on the number of boxes examined; boxes left unprocessed once it is
  /// reached become residue.
  std::size_t max_boxes = 200000;
  /// When nonempty, only these coordinates are bisected.
  std::vector<std::string> split_only;
};

struct Decomposition {
  std::vector<Region> regions;
  /// Boxes that could not be certified within the configured limits.
  std::vector<Box> residue;
};

struct RangeResult {
  IntervalSet range;
  /// True iff there is no residue, in which case range is the exact image.
  bool exact = false;
  std::vector<Region> regions;
  std::vector<Box> fallback_regions;
};

/// Pos if the interval enclosure of df over box is strictly positive, Neg if
/// strictly negative, Unknown otherwise. Propagates DomainError.
Sign sign_of_partial(const Expr& df, const Box& box);

/// Region-level certificate for coordinate `var` of box.
///
/// Extends sign_of_partial(): an enclosure touching zero from one side (or an
/// evaluation that fails only on the boundary) is accepted when the same
/// partial is strictly signed on the box shrunk by 1e-9 of each width. A
/// degenerate coordinate, or a partial whose enclosure is exactly [0,0],
/// cannot change f along that coordinate and is reported as Pos.
Sign certify_sign(const Expr& df, const Box& box, std::size_t var);

/// Bisects box until every piece is sign-definite for every partial of f or
/// the configured limits are hit. Pieces are emitted in left-to-right
/// depth-first order.
Decomposition decompose(const Expr& f, const Box& box, const RangeConfig& cfg = {});

/// Per coordinate: Pos -> (lo, hi), Neg -> (hi, lo). Throws UncertifiedRegion
/// if any sign is Unknown.
DirectedBox switch_box(const Region& region);

/// Exact image of f over a certified region, from the two switched corners.
Interval range_over_region(const Expr& f, const Region& region);

/// Image of f over box as the union of exact region images, extended by the
/// natural interval extension over any residue.
RangeResult range(const Expr& f, const Box& box, const RangeConfig& cfg = {});

}  // namespace intervox
