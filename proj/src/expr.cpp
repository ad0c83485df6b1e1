#include "intervox/expr.hpp"

#include <cmath>

#include "intervox/errors.hpp"
#include "intervox/format.hpp"

namespace intervox {

struct Expr::Node {
  Op op = Op::Const;
  double value = 0.0;
  std::string name;
  int exponent = 0;
  std::vector<Expr> args;
};

Expr::Expr() : node_(std::make_shared<const Node>()) {}

Expr Expr::constant(double value) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::variable(std::string name) {
  if (name.empty()) throw Error("variable name must be nonempty");
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::unary(Op op, Expr arg) {
  switch (op) {
    case Op::Neg: case Op::Exp: case Op::Ln: case Op::Sin: case Op::Cos: case Op::Sqrt:
      break;
    default:
      throw Error("not a unary operator");
  }
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args.push_back(std::move(arg));
  return Expr(std::move(n));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  switch (op) {
    case Op::Add: case Op::Sub: case Op::Mul: case Op::Div:
      break;
    default:
      throw Error("not a binary operator");
  }
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args.push_back(std::move(lhs));
  n->args.push_back(std::move(rhs));
  return Expr(std::move(n));
}

Expr Expr::pow(Expr base, int exponent) {
  auto n = std::make_shared<Node>();
  n->op = Op::PowInt;
  n->exponent = exponent;
  n->args.push_back(std::move(base));
  return Expr(std::move(n));
}

Op Expr::op() const noexcept { return node_->op; }
double Expr::value() const noexcept { return node_->value; }
const std::string& Expr::name() const noexcept { return node_->name; }
int Expr::exponent() const noexcept { return node_->exponent; }
std::size_t Expr::arity() const noexcept { return node_->args.size(); }
const Expr& Expr::arg(std::size_t i) const { return node_->args.at(i); }

bool operator==(const Expr& x, const Expr& y) {
  if (x.node_ == y.node_) return true;
  const Expr::Node& a = *x.node_;
  const Expr::Node& b = *y.node_;
  if (a.op != b.op) return false;
  switch (a.op) {
    case Op::Const: return a.value == b.value;
    case Op::Var: return a.name == b.name;
    case Op::PowInt:
      if (a.exponent != b.exponent) return false;
      break;
    default:
      break;
  }
  return a.args == b.args;
}

Expr operator+(const Expr& x, const Expr& y) { return Expr::binary(Op::Add, x, y); }
Expr operator-(const Expr& x, const Expr& y) { return Expr::binary(Op::Sub, x, y); }
Expr operator*(const Expr& x, const Expr& y) { return Expr::binary(Op::Mul, x, y); }
Expr operator/(const Expr& x, const Expr& y) { return Expr::binary(Op::Div, x, y); }
Expr operator-(const Expr& x) { return Expr::unary(Op::Neg, x); }
Expr exp(const Expr& x) { return Expr::unary(Op::Exp, x); }
Expr ln(const Expr& x) { return Expr::unary(Op::Ln, x); }
Expr sin(const Expr& x) { return Expr::unary(Op::Sin, x); }
Expr cos(const Expr& x) { return Expr::unary(Op::Cos, x); }
Expr sqrt(const Expr& x) { return Expr::unary(Op::Sqrt, x); }
Expr pow(const Expr& x, int k) { return Expr::pow(x, k); }

namespace {

const char* function_name(Op op) {
  switch (op) {
    case Op::Exp: return "exp";
    case Op::Ln: return "ln";
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Sqrt: return "sqrt";
    default: return nullptr;
  }
}

// Binding strength in the grammar: sums < products < powers < unary minus <
// atoms.
int precedence(const Expr& e) {
  switch (e.op()) {
    case Op::Add: case Op::Sub: return 1;
    case Op::Mul: case Op::Div: return 2;
    case Op::PowInt: return 3;
    case Op::Neg: return 4;
    case Op::Const: return std::signbit(e.value()) ? 4 : 5;
    default: return 5;
  }
}

void render_into(const Expr& e, std::string& out);

void render_child(const Expr& e, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(e, out);
  if (parens) out += ')';
}

void render_into(const Expr& e, std::string& out) {
  switch (e.op()) {
    case Op::Const:
      out += format_shortest(e.value());
      return;
    case Op::Var:
      out += e.name();
      return;
    case Op::Neg:
      out += '-';
      render_child(e.arg(0), precedence(e.arg(0)) < 4, out);
      return;
    case Op::Add: case Op::Sub: case Op::Mul: case Op::Div: {
      const int p = precedence(e);
      render_child(e.lhs(), precedence(e.lhs()) < p, out);
      out += e.op() == Op::Add ? '+' : e.op() == Op::Sub ? '-' : e.op() == Op::Mul ? '*' : '/';
      render_child(e.rhs(), precedence(e.rhs()) <= p, out);
      return;
    }
    case Op::PowInt:
      render_child(e.arg(0), precedence(e.arg(0)) < 4, out);
      out += '^';
      out += std::to_string(e.exponent());
      return;
    default:
      out += function_name(e.op());
      out += '(';
      render_into(e.arg(0), out);
      out += ')';
      return;
  }
}

void collect_variables(const Expr& e, std::set<std::string>& out) {
  if (e.op() == Op::Var) {
    out.insert(e.name());
    return;
  }
  for (std::size_t i = 0; i < e.arity(); ++i) collect_variables(e.arg(i), out);
}

bool is_const(const Expr& e) { return e.op() == Op::Const; }

}  // namespace

std::string render(const Expr& e) {
  std::string out;
  render_into(e, out);
  return out;
}

std::set<std::string> variables(const Expr& e) {
  std::set<std::string> out;
  collect_variables(e, out);
  return out;
}

std::size_t node_count(const Expr& e) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < e.arity(); ++i) n += node_count(e.arg(i));
  return n;
}

Expr substitute(const Expr& e, const std::string& name, const Expr& replacement) {
  switch (e.op()) {
    case Op::Const: return e;
    case Op::Var: return e.name() == name ? replacement : e;
    case Op::PowInt: return Expr::pow(substitute(e.arg(0), name, replacement), e.exponent());
    case Op::Add: case Op::Sub: case Op::Mul: case Op::Div:
      return Expr::binary(e.op(), substitute(e.lhs(), name, replacement),
                          substitute(e.rhs(), name, replacement));
    default:
      return Expr::unary(e.op(), substitute(e.arg(0), name, replacement));
  }
}

namespace {

// Constants fold only when the result is a finite real.
std::optional<double> fold(auto&& compute) {
  try {
    const double v = compute();
    if (std::isfinite(v)) return v;
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

Expr s_neg(const Expr& a) {
  if (is_const(a)) return Expr::constant(-a.value());
  if (a.op() == Op::Neg) return a.arg(0);
  return -a;
}

Expr s_add(const Expr& a, const Expr& b) {
  if (is_const(a) && is_const(b)) {
    if (auto v = fold([&] { return a.value() + b.value(); })) return Expr::constant(*v);
  }
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  return a + b;
}

Expr s_sub(const Expr& a, const Expr& b) {
  if (is_const(a) && is_const(b)) {
    if (auto v = fold([&] { return a.value() - b.value(); })) return Expr::constant(*v);
  }
  if (b.is_constant(0.0)) return a;
  if (a.is_constant(0.0)) return s_neg(b);
  return a - b;
}

Expr s_mul(const Expr& a, const Expr& b) {
  if (is_const(a) && is_const(b)) {
    if (auto v = fold([&] { return a.value() * b.value(); })) return Expr::constant(*v);
  }
  if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr::constant(0.0);
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  return a * b;
}

Expr s_div(const Expr& a, const Expr& b) {
  if (is_const(a) && is_const(b)) {
    if (auto v = fold([&] { return detail::apply_binary(Op::Div, a.value(), b.value()); })) {
      return Expr::constant(*v);
    }
  }
  if (b.is_constant(1.0)) return a;
  return a / b;
}

Expr s_pow(const Expr& a, int k) {
  if (k == 0) return Expr::constant(1.0);
  if (k == 1) return a;
  if (is_const(a)) {
    if (auto v = fold([&] { return detail::ipow(a.value(), k); })) return Expr::constant(*v);
  }
  return pow(a, k);
}

Expr s_unary(Op op, const Expr& a) {
  if (op == Op::Neg) return s_neg(a);
  if (is_const(a)) {
    if (auto v = fold([&] { return detail::apply_unary(op, a.value(), 0); })) {
      return Expr::constant(*v);
    }
  }
  return Expr::unary(op, a);
}

Expr s_binary(Op op, const Expr& a, const Expr& b) {
  switch (op) {
    case Op::Add: return s_add(a, b);
    case Op::Sub: return s_sub(a, b);
    case Op::Mul: return s_mul(a, b);
    default: return s_div(a, b);
  }
}

}  // namespace

Expr simplify(const Expr& e) {
  switch (e.op()) {
    case Op::Const: case Op::Var: return e;
    case Op::PowInt: return s_pow(simplify(e.arg(0)), e.exponent());
    case Op::Add: case Op::Sub: case Op::Mul: case Op::Div:
      return s_binary(e.op(), simplify(e.lhs()), simplify(e.rhs()));
    default:
      return s_unary(e.op(), simplify(e.arg(0)));
  }
}

Expr differentiate(const Expr& e, const std::string& var) {
  const auto zero = Expr::constant(0.0);
  switch (e.op()) {
    case Op::Const: return zero;
    case Op::Var: return Expr::constant(e.name() == var ? 1.0 : 0.0);
    case Op::Neg: return s_neg(differentiate(e.arg(0), var));
    case Op::Add: return s_add(differentiate(e.lhs(), var), differentiate(e.rhs(), var));
    case Op::Sub: return s_sub(differentiate(e.lhs(), var), differentiate(e.rhs(), var));
    case Op::Mul: {
      const Expr& u = e.lhs();
      const Expr& v = e.rhs();
      return s_add(s_mul(differentiate(u, var), v), s_mul(u, differentiate(v, var)));
    }
    case Op::Div: {
      const Expr& u = e.lhs();
      const Expr& v = e.rhs();
      const Expr du = differentiate(u, var);
      const Expr dv = differentiate(v, var);
      if (dv.is_constant(0.0)) return s_div(du, v);
      return s_div(s_sub(s_mul(du, v), s_mul(u, dv)), s_pow(v, 2));
    }
    case Op::PowInt: {
      const Expr& u = e.arg(0);
      const int k = e.exponent();
      if (k == 0) return zero;
      return s_mul(s_mul(Expr::constant(k), s_pow(u, k - 1)), differentiate(u, var));
    }
    case Op::Exp: return s_mul(e, differentiate(e.arg(0), var));
    case Op::Ln: return s_div(differentiate(e.arg(0), var), e.arg(0));
    case Op::Sin: return s_mul(s_unary(Op::Cos, e.arg(0)), differentiate(e.arg(0), var));
    case Op::Cos:
      return s_neg(s_mul(s_unary(Op::Sin, e.arg(0)), differentiate(e.arg(0), var)));
    case Op::Sqrt:
      return s_div(differentiate(e.arg(0), var), s_mul(Expr::constant(2.0), e));
  }
  return zero;
}

bool subset_of(const Box& inner, const Box& outer) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    auto j = outer.find(inner.name(i));
    if (!j || !inner[i].subset_of(outer[*j])) return false;
  }
  return true;
}

std::string to_string(const Box& box) {
  std::string out;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (i) out += " x ";
    out += box.name(i) + "=" + to_string(box[i]);
  }
  return out;
}

}  // namespace intervox
