#include <cctype>
#include <charconv>
#include <climits>

#include "intervox/errors.hpp"
#include "intervox/expr.hpp"

namespace intervox {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& what)
    : Error(what), offset_(offset), expected_(std::move(expected)) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::optional<Op> function_op(std::string_view name) {
  if (name == "exp") return Op::Exp;
  if (name == "ln") return Op::Ln;
  if (name == "sin") return Op::Sin;
  if (name == "cos") return Op::Cos;
  if (name == "sqrt") return Op::Sqrt;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"operator", "end of input"});
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string what = "parse error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) what += i + 1 == expected.size() ? " or " : ", ";
      what += expected[i];
    }
    if (pos_ < text_.size()) {
      what += ", found '";
      what += text_[pos_];
      what += "'";
    } else {
      what += ", found end of input";
    }
    throw ParseError(pos_, std::move(expected), what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_expr() {
    Expr e = parse_term();
    for (;;) {
      if (accept('+')) {
        e = e + parse_term();
      } else if (accept('-')) {
        e = e - parse_term();
      } else {
        return e;
      }
    }
  }

  Expr parse_term() {
    Expr e = parse_factor();
    for (;;) {
      if (accept('*')) {
        e = e * parse_factor();
      } else if (accept('/')) {
        e = e / parse_factor();
      } else {
        return e;
      }
    }
  }

  Expr parse_factor() {
    Expr base = parse_atom();
    if (accept('^')) return pow(base, parse_integer());
    return base;
  }

  int parse_integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail({"integer exponent"});
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    long long value = 0;
    const auto res = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    if (res.ec != std::errc() || value > INT_MAX) {
      pos_ = start;
      fail({"integer exponent within int range"});
    }
    return negative ? -static_cast<int>(value) : static_cast<int>(value);
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    if (pos_ == start + 1 && text_[start] == '.') {
      pos_ = start;
      fail({"number"});
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p >= text_.size() || !is_digit(text_[p])) {
        pos_ = p;
        fail({"exponent digits"});
      }
      while (p < text_.size() && is_digit(text_[p])) ++p;
      pos_ = p;
    }
    double value = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc() || res.ptr != text_.data() + pos_) {
      pos_ = start;
      fail({"finite number"});
    }
    return Expr::constant(value);
  }

  Expr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail({"number", "identifier", "'('", "'-'"});
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -parse_atom();
    }
    if (c == '(') {
      ++pos_;
      Expr e = parse_expr();
      if (!accept(')')) fail({"')'"});
      return e;
    }
    if (is_digit(c) || c == '.') return parse_number();
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      const std::size_t after_name = pos_;
      if (accept('(')) {
        auto op = function_op(name);
        if (!op) {
          pos_ = start;
          fail({"function name (exp, ln, sin, cos, sqrt)"});
        }
        Expr arg = parse_expr();
        if (!accept(')')) fail({"')'"});
        return Expr::unary(*op, arg);
      }
      pos_ = after_name;
      return Expr::variable(std::string(name));
    }
    fail({"number", "identifier", "'('", "'-'"});
  }
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace intervox
