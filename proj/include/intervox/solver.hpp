#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intervox/box.hpp"
#include "intervox/expr.hpp"
#include "intervox/interval.hpp"
#include "intervox/range.hpp"

namespace intervox {

/// Name of the right-hand-side variable in inverse expressions.
inline constexpr const char* kRhsVar = "x0";

/// Inverse of f in the unknown, valid on regions whose certified partial
/// signs match `when` (an empty map matches every region).
struct InverseBranch {
  std::map<std::string, Sign> when;
  Expr g;
};

/// f(unknown, params) = rhs, searched for the unknown within `search`.
struct EquationProblem {
  Expr f;
  std::string unknown;
  Box params;
  Interval rhs;
  /// Tried in order; the first branch matching a region is used. When empty
  /// and f is linear in the unknown, g = (x0 - B) / A is synthesized.
  std::vector<InverseBranch> inverses;
  std::optional<Interval> search;
};

enum class SolutionStatus { Exact, NoSolution, PartialEnclosure };

const char* to_string(SolutionStatus s);

struct Solution {
  IntervalSet intervals;
  SolutionStatus status = SolutionStatus::NoSolution;
  /// Sign-definite regions (or sign cases) that contributed a piece.
  std::size_t regions_used = 0;
  /// One line per region or case examined, plus warnings.
  std::vector<std::string> diagnostics;
};

struct SolveConfig {
  RangeConfig range;
  double tol = 1e-7;
};

/// Default search interval when EquationProblem::search is omitted.
inline constexpr double kDefaultSearchHalfWidth = 1e6;

/// Solves A*X + B = C by the sign of the unknown (X >= 0, X <= 0, and X
/// straddling zero). Each case forms the diagonal-matrix equation, switching
/// A by the sign of X and X by the sign of A, and is accepted iff the result
/// is a proper interval that satisfies the case's sign assumption.
/// Throws DivisorContainsZero if 0 is in A.
Solution solve_linear(const Interval& a, const Interval& b, const Interval& c);

/// Solves f(X, params) = rhs on one certified region of unknown x params via
/// the inverse g: params are switched by the signs of f's partials, g is
/// applied componentwise with x0 = (rhs.lo, rhs.hi), and the result is
/// un-switched by the sign of df/dunknown. Returns std::nullopt when the
/// result has first entry > last entry or leaves the region's unknown
/// interval.
///
/// Throws UncertifiedRegion or MissingInverse (no branch matches), and
/// propagates DomainError.
std::optional<Interval> solve_with_inverse(const EquationProblem& p, const Region& region,
                                           double tol = 1e-9);

/// Region-partition solver: decomposes search x params along the unknown,
/// solves each region against f(region) intersected with rhs, and unions the
/// pieces. Status is Exact when the union verifies, PartialEnclosure when
/// uncertified residue may hold solutions.
Solution solve(const EquationProblem& p, const SolveConfig& cfg = {});

/// True iff f(candidate x params) equals rhs within Hausdorff distance tol.
bool verify(const EquationProblem& p, const IntervalSet& candidate, double tol,
            const RangeConfig& cfg = {});

/// The problem with its inverse filled in for f linear in the unknown.
/// Throws MissingInverse if f is not linear in the unknown.
EquationProblem with_linear_inverse(EquationProblem p);

}  // namespace intervox
