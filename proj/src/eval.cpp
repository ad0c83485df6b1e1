#include <algorithm>
#include <cmath>
#include <numbers>

#include "intervox/errors.hpp"
#include "intervox/expr.hpp"
#include "intervox/format.hpp"

namespace intervox {

namespace detail {

double ipow(double base, int k) {
  if (k < 0) {
    if (base == 0.0) throw DomainError("zero raised to a negative power");
    return 1.0 / ipow(base, -k);
  }
  double result = 1.0;
  double b = base;
  unsigned n = static_cast<unsigned>(k);
  while (n) {
    if (n & 1u) result *= b;
    n >>= 1u;
    if (n) b *= b;
  }
  return result;
}

double apply_unary(Op op, double x, int exponent) {
  switch (op) {
    case Op::Neg: return -x;
    case Op::PowInt: return ipow(x, exponent);
    case Op::Exp: return std::exp(x);
    case Op::Ln:
      if (!(x > 0.0)) throw DomainError("ln of non-positive value " + format_shortest(x));
      return std::log(x);
    case Op::Sin: return std::sin(x);
    case Op::Cos: return std::cos(x);
    case Op::Sqrt:
      if (x < 0.0) throw DomainError("sqrt of negative value " + format_shortest(x));
      return std::sqrt(x);
    default:
      throw Error("not a unary operator");
  }
}

double apply_binary(Op op, double x, double y) {
  switch (op) {
    case Op::Add: return x + y;
    case Op::Sub: return x - y;
    case Op::Mul: return x * y;
    case Op::Div:
      if (y == 0.0) throw DomainError("division by zero");
      return x / y;
    default:
      throw Error("not a binary operator");
  }
}

}  // namespace detail

namespace {

double checked(double v) {
  if (!std::isfinite(v)) throw DomainError("evaluation produced a non-finite value");
  return v;
}

template <class Lookup>
double eval_tree(const Expr& e, const Lookup& lookup) {
  switch (e.op()) {
    case Op::Const: return e.value();
    case Op::Var: return lookup(e.name());
    case Op::Add: case Op::Sub: case Op::Mul: case Op::Div:
      return checked(detail::apply_binary(e.op(), eval_tree(e.lhs(), lookup),
                                          eval_tree(e.rhs(), lookup)));
    default:
      return checked(detail::apply_unary(e.op(), eval_tree(e.arg(0), lookup), e.exponent()));
  }
}

}  // namespace

double eval_point(const Expr& e, const Point& point) {
  return eval_tree(e, [&point](const std::string& name) {
    auto it = point.find(name);
    if (it == point.end()) throw UnboundVariable(name);
    return it->second;
  });
}

double eval_point(const Expr& e, std::span<const std::string> names,
                  std::span<const double> values) {
  return eval_tree(e, [&](const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw UnboundVariable(name);
    return values[static_cast<std::size_t>(it - names.begin())];
  });
}

UnboundVariable::UnboundVariable(std::string name)
    : Error("unbound variable '" + name + "'"), name_(std::move(name)) {}

PointEvaluator::PointEvaluator(const Expr& e, std::span<const std::string> names)
    : arity_(names.size()) {
  std::size_t depth = 0;
  auto emit = [&](auto&& self, const Expr& n) -> void {
    for (std::size_t i = 0; i < n.arity(); ++i) self(self, n.arg(i));
    Instr ins{n.op(), 0.0, 0};
    switch (n.op()) {
      case Op::Const:
        ins.value = n.value();
        ++depth;
        break;
      case Op::Var: {
        auto it = std::find(names.begin(), names.end(), n.name());
        if (it == names.end()) throw UnboundVariable(n.name());
        ins.index = static_cast<int>(it - names.begin());
        ++depth;
        break;
      }
      case Op::PowInt:
        ins.index = n.exponent();
        break;
      case Op::Add: case Op::Sub: case Op::Mul: case Op::Div:
        --depth;
        break;
      default:
        break;
    }
    max_stack_ = std::max(max_stack_, depth);
    code_.push_back(ins);
  };
  emit(emit, e);
}

double PointEvaluator::operator()(std::span<const double> values) const {
  if (values.size() != arity_) throw Error("point has the wrong number of coordinates");
  constexpr std::size_t kInline = 32;
  double inline_stack[kInline] = {};
  std::vector<double> heap_stack;
  double* stack = inline_stack;
  if (max_stack_ > kInline) {
    heap_stack.resize(max_stack_);
    stack = heap_stack.data();
  }
  std::size_t top = 0;
  for (const Instr& ins : code_) {
    switch (ins.op) {
      case Op::Const:
        stack[top++] = ins.value;
        break;
      case Op::Var:
        stack[top++] = values[static_cast<std::size_t>(ins.index)];
        break;
      case Op::Add: case Op::Sub: case Op::Mul: case Op::Div: {
        const double y = stack[--top];
        stack[top - 1] = checked(detail::apply_binary(ins.op, stack[top - 1], y));
        break;
      }
      default:
        stack[top - 1] = checked(detail::apply_unary(ins.op, stack[top - 1], ins.index));
        break;
    }
  }
  return stack[0];
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Whether some point offset + 2*pi*k lies in [lo, hi].
bool hits_lattice(double lo, double hi, double offset) {
  const double k = std::ceil((lo - offset) / kTwoPi);
  for (double j = k - 1.0; j <= k + 1.0; j += 1.0) {
    const double p = offset + kTwoPi * j;
    if (lo <= p && p <= hi) return true;
  }
  return false;
}

Interval interval_sin(const Interval& x) {
  if (x.width() >= kTwoPi) return Interval(-1.0, 1.0);
  const double a = std::sin(x.lo()), b = std::sin(x.hi());
  const double hi = hits_lattice(x.lo(), x.hi(), kPi / 2) ? 1.0 : std::max(a, b);
  const double lo = hits_lattice(x.lo(), x.hi(), -kPi / 2) ? -1.0 : std::min(a, b);
  return Interval(lo, hi);
}

Interval interval_cos(const Interval& x) {
  if (x.width() >= kTwoPi) return Interval(-1.0, 1.0);
  const double a = std::cos(x.lo()), b = std::cos(x.hi());
  const double hi = hits_lattice(x.lo(), x.hi(), 0.0) ? 1.0 : std::max(a, b);
  const double lo = hits_lattice(x.lo(), x.hi(), kPi) ? -1.0 : std::min(a, b);
  return Interval(lo, hi);
}

Interval interval_pow(const Interval& x, int k) {
  if (k == 0) return Interval(1.0);
  if (k < 0) {
    if (x.contains_zero()) {
      throw DomainError("negative power of an interval containing zero: " + to_string(x));
    }
    return recip(interval_pow(x, -k));
  }
  const double a = detail::ipow(x.lo(), k);
  const double b = detail::ipow(x.hi(), k);
  if (k % 2 == 1) return Interval(checked(a), checked(b));
  if (x.lo() >= 0.0) return Interval(checked(a), checked(b));
  if (x.hi() <= 0.0) return Interval(checked(b), checked(a));
  return Interval(0.0, checked(detail::ipow(x.mag(), k)));
}

Interval eval_interval_tree(const Expr& e, const Box& box) {
  switch (e.op()) {
    case Op::Const: return Interval(e.value());
    case Op::Var: return box.at(e.name());
    case Op::Neg: return neg(eval_interval_tree(e.arg(0), box));
    case Op::Add: return add(eval_interval_tree(e.lhs(), box), eval_interval_tree(e.rhs(), box));
    case Op::Sub: return sub(eval_interval_tree(e.lhs(), box), eval_interval_tree(e.rhs(), box));
    case Op::Mul: return mul(eval_interval_tree(e.lhs(), box), eval_interval_tree(e.rhs(), box));
    case Op::Div: return div(eval_interval_tree(e.lhs(), box), eval_interval_tree(e.rhs(), box));
    case Op::PowInt: return interval_pow(eval_interval_tree(e.arg(0), box), e.exponent());
    case Op::Exp: {
      const Interval x = eval_interval_tree(e.arg(0), box);
      return Interval(checked(std::exp(x.lo())), checked(std::exp(x.hi())));
    }
    case Op::Ln: {
      const Interval x = eval_interval_tree(e.arg(0), box);
      if (!(x.lo() > 0.0)) throw DomainError("ln of interval " + to_string(x));
      return Interval(std::log(x.lo()), std::log(x.hi()));
    }
    case Op::Sqrt: {
      const Interval x = eval_interval_tree(e.arg(0), box);
      if (x.lo() < 0.0) throw DomainError("sqrt of interval " + to_string(x));
      return Interval(std::sqrt(x.lo()), std::sqrt(x.hi()));
    }
    case Op::Sin: return interval_sin(eval_interval_tree(e.arg(0), box));
    case Op::Cos: return interval_cos(eval_interval_tree(e.arg(0), box));
  }
  throw Error("unknown expression node");
}

}  // namespace

Interval eval_interval(const Expr& e, const Box& box) {
  try {
    return eval_interval_tree(e, box);
  } catch (const InvalidInterval& err) {
    // Overflowed endpoints surface as non-finite interval construction.
    throw DomainError(std::string("interval evaluation overflowed: ") + err.what());
  }
}

}  // namespace intervox
