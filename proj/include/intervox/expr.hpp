#pragma once

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intervox/box.hpp"
#include "intervox/interval.hpp"

namespace intervox {

enum class Op { Const, Var, Neg, Add, Sub, Mul, Div, PowInt, Exp, Ln, Sin, Cos, Sqrt };

/// Immutable expression tree over named real variables.
///
/// Nodes are shared between trees, so copying an Expr is cheap. The
/// elementary function set is {exp, ln, sin, cos, sqrt} plus integer powers.
class Expr {
 public:
  /// The constant 0.
  Expr();

  static Expr constant(double value);
  static Expr variable(std::string name);
  static Expr unary(Op op, Expr arg);
  static Expr binary(Op op, Expr lhs, Expr rhs);
  static Expr pow(Expr base, int exponent);

  Op op() const noexcept;
  /// Const only.
  double value() const noexcept;
  /// Var only.
  const std::string& name() const noexcept;
  /// PowInt only.
  int exponent() const noexcept;
  std::size_t arity() const noexcept;
  const Expr& arg(std::size_t i) const;
  const Expr& lhs() const { return arg(0); }
  const Expr& rhs() const { return arg(1); }

  bool is_constant(double v) const noexcept { return op() == Op::Const && value() == v; }

  /// Structural equality.
  friend bool operator==(const Expr& x, const Expr& y);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Raw builders; no simplification.
Expr operator+(const Expr& x, const Expr& y);
Expr operator-(const Expr& x, const Expr& y);
Expr operator*(const Expr& x, const Expr& y);
Expr operator/(const Expr& x, const Expr& y);
Expr operator-(const Expr& x);
Expr exp(const Expr& x);
Expr ln(const Expr& x);
Expr sin(const Expr& x);
Expr cos(const Expr& x);
Expr sqrt(const Expr& x);
Expr pow(const Expr& x, int k);

/// Throws ParseError with the byte offset and the expected-token set.
///
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := atom ("^" integer)?
///   atom   := number | ident | ident "(" expr ")" | "(" expr ")" | "-" atom
///
/// Unary minus binds tighter than "^": "-x^2" is (-x)^2.
Expr parse(std::string_view text);

/// Text that parse() maps back to the same tree, using the minimal set of
/// parentheses. A negative constant renders as "-c" and parses back as
/// Neg(c).
std::string render(const Expr& e);

std::set<std::string> variables(const Expr& e);
std::size_t node_count(const Expr& e);

/// Replaces every occurrence of variable `name`.
Expr substitute(const Expr& e, const std::string& name, const Expr& replacement);

/// Constant folding and identity elimination applied bottom-up.
Expr simplify(const Expr& e);

/// Symbolic partial derivative, simplified.
Expr differentiate(const Expr& e, const std::string& var);

using Point = std::map<std::string, double>;

/// Real evaluation. Throws UnboundVariable or DomainError (log or sqrt of a
/// negative, division by zero, non-finite result).
double eval_point(const Expr& e, const Point& point);

/// Real evaluation against a coordinate list (names[i] -> values[i]).
double eval_point(const Expr& e, std::span<const std::string> names,
                  std::span<const double> values);

/// Compiled form for repeated point evaluation at fixed variable order.
class PointEvaluator {
 public:
  /// Throws UnboundVariable if e uses a name not in `names`.
  PointEvaluator(const Expr& e, std::span<const std::string> names);
  double operator()(std::span<const double> values) const;

 private:
  struct Instr {
    Op op;
    double value;
    int index;
  };
  std::vector<Instr> code_;
  std::size_t max_stack_ = 0;
  std::size_t arity_ = 0;
};

/// Natural interval extension: an enclosure of the range of e over box.
/// sin and cos give their exact range on each argument interval. Throws
/// DomainError when a divisor contains zero or a log/sqrt argument leaves its
/// domain.
Interval eval_interval(const Expr& e, const Box& box);

namespace detail {
// Scalar kernels shared by every evaluator so corner evaluations agree bit
// for bit.
double ipow(double base, int k);
double apply_unary(Op op, double x, int exponent);
double apply_binary(Op op, double x, double y);
}  // namespace detail

}  // namespace intervox
