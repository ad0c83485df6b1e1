#pragma once

#include <optional>
#include <vector>

#include "intervox/box.hpp"
#include "intervox/directed.hpp"
#include "intervox/expr.hpp"

namespace intervox {

/// Applies an analytic function to diagonal-matrix arguments.
///
/// For args (a_i, b_i) the matrix power series of f collapses to
/// diag(f(a_1..a_n), f(b_1..b_n)), so this evaluates f at the two corner
/// points. Throws DomainError if either corner is outside f's domain and
/// UnboundVariable if f uses a name not in args.
DirectedInterval apply_fn(const Expr& f, const DirectedBox& args);

/// Truncated multivariate Taylor series of f about `center`, evaluated as a
/// polynomial in the diagonal matrices diag(a_i - c_i, b_i - c_i).
///
/// Numerical witness for apply_fn(); convergence is the caller's concern.
/// When center is omitted the midpoint of each argument pair is used.
DirectedInterval taylor_apply(const Expr& f, const DirectedBox& args,
                              const std::optional<std::vector<double>>& center, int order);

}  // namespace intervox
