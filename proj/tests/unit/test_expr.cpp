#include <gtest/gtest.h>

#include <cmath>

#include "intervox/errors.hpp"
#include "intervox/expr.hpp"
#include "support/oracles.hpp"

using namespace intervox;

namespace {

Expr v(const char* n) { return Expr::variable(n); }
Expr c(double x) { return Expr::constant(x); }

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(parse("x*(1-x)"), Expr::binary(Op::Mul, v("x"), Expr::binary(Op::Sub, c(1), v("x"))));
  EXPECT_EQ(parse("a*x+b"), Expr::binary(Op::Add, Expr::binary(Op::Mul, v("a"), v("x")), v("b")));
  EXPECT_EQ(parse("x^2 - x"), Expr::binary(Op::Sub, Expr::pow(v("x"), 2), v("x")));
}

TEST(Parse, PrecedenceAndFunctions) {
  EXPECT_EQ(parse("1+2*3"), c(1) + c(2) * c(3));
  EXPECT_EQ(parse("a-b-c"), (v("a") - v("b")) - v("c"));
  EXPECT_EQ(parse("a/b/c"), (v("a") / v("b")) / v("c"));
  EXPECT_EQ(parse("x^-2"), Expr::pow(v("x"), -2));
  EXPECT_EQ(parse("sqrt(1-4*x0)"), sqrt(c(1) - c(4) * v("x0")));
  EXPECT_EQ(parse(" exp ( x ) "), exp(v("x")));
  EXPECT_EQ(parse("1.5e3"), c(1500));
}

TEST(Parse, ErrorsCarryOffsetAndExpectation) {
  try {
    parse("x + * y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("(x"), ParseError);
  EXPECT_THROW(parse("x^1.5"), ParseError);
  EXPECT_THROW(parse("foo(x)"), ParseError);
  EXPECT_THROW(parse("x y"), ParseError);
  EXPECT_THROW(parse("1e999"), ParseError);
}

TEST(EvalPoint, Examples) {
  EXPECT_EQ(eval_point(parse("x*(1-x)"), {{"x", 1.0}}), 0.0);
  const double golden = (1 + std::sqrt(5.0)) / 2;
  EXPECT_NEAR(eval_point(parse("x^2-x"), {{"x", golden}}), 1.0, 1e-12);
  EXPECT_EQ(eval_point(parse("a*x+b"), {{"a", 2}, {"b", 7}, {"x", -5}}), -3.0);
  EXPECT_THROW(eval_point(parse("ln(x)"), {{"x", -1}}), DomainError);
  EXPECT_THROW(eval_point(parse("sqrt(x)"), {{"x", -1}}), DomainError);
  EXPECT_THROW(eval_point(parse("1/x"), {{"x", 0}}), DomainError);
  EXPECT_THROW(eval_point(parse("x+y"), {{"x", 0}}), UnboundVariable);
}

TEST(EvalInterval, Examples) {
  EXPECT_EQ(eval_interval(parse("x*(1-x)"), Box{{"x", Interval(0, 1)}}), Interval(0, 1));
  EXPECT_EQ(eval_interval(parse("x+1"), Box{{"x", Interval(0, 1)}}), Interval(1, 2));
  EXPECT_EQ(eval_interval(parse("x-x"), Box{{"x", Interval(0, 1)}}), Interval(-1, 1));
  EXPECT_EQ(eval_interval(parse("x^2"), Box{{"x", Interval(-2, 1)}}), Interval(0, 4));
  EXPECT_EQ(eval_interval(parse("x^3"), Box{{"x", Interval(-2, 1)}}), Interval(-8, 1));
  EXPECT_EQ(eval_interval(parse("x^-1"), Box{{"x", Interval(2, 4)}}), Interval(0.25, 0.5));
  const Interval s = eval_interval(parse("sin(x)"), Box{{"x", Interval(0, 3)}});
  EXPECT_EQ(s.lo(), 0.0);
  EXPECT_EQ(s.hi(), 1.0);
  const Interval k = eval_interval(parse("cos(x)"), Box{{"x", Interval(-1, 4)}});
  EXPECT_EQ(k.lo(), -1.0);
  EXPECT_EQ(k.hi(), 1.0);
  EXPECT_THROW(eval_interval(parse("sqrt(x)"), Box{{"x", Interval(-1, 1)}}), DomainError);
  EXPECT_THROW(eval_interval(parse("1/x"), Box{{"x", Interval(-1, 1)}}), DomainError);
  EXPECT_THROW(eval_interval(parse("y"), Box{{"x", Interval(-1, 1)}}), UnboundVariable);
}

TEST(Differentiate, Examples) {
  EXPECT_EQ(differentiate(parse("a*x+b"), "x"), v("a"));
  EXPECT_EQ(differentiate(parse("a*x+b"), "b"), c(1));
  const Expr d = differentiate(parse("x*(1-x)"), "x");
  for (double x : testsupport::samples(-3, 3, 13)) {
    EXPECT_NEAR(eval_point(d, {{"x", x}}), 1 - 2 * x, 1e-12);
  }
}

TEST(Simplify, FoldsOnlyFiniteConstants) {
  EXPECT_EQ(simplify(parse("0+x*1")), v("x"));
  EXPECT_EQ(simplify(parse("2*3+x^1")), c(6) + v("x"));
  EXPECT_EQ(simplify(parse("0*x")), c(0));
  // 1/0 must stay symbolic so evaluation reports the domain error.
  EXPECT_THROW(eval_point(simplify(parse("1/0")), Point{}), DomainError);
}

TEST(Render, Basics) {
  EXPECT_EQ(render(parse("x*(1-x)")), "x*(1-x)");
  EXPECT_EQ(render(parse("a-(b-c)")), "a-(b-c)");
  EXPECT_EQ(render(parse("(a*b)^2")), "(a*b)^2");
  EXPECT_EQ(variables(parse("a*x+b*sin(x)")), (std::set<std::string>{"a", "b", "x"}));
  EXPECT_EQ(node_count(parse("a*x+b")), 5u);
  EXPECT_EQ(substitute(parse("a*x+b"), "x", c(0)), parse("a*0+b"));
}

TEST(PointEvaluator, MatchesTreeWalk) {
  auto rng = testsupport::make_rng(21);
  const std::vector<std::string> names = {"x", "y", "z"};
  std::uniform_real_distribution<double> d(-3, 3);
  for (int i = 0; i < 500; ++i) {
    const Expr f = testsupport::random_expr(rng, 4, names);
    const PointEvaluator ev(f, names);
    const std::vector<double> pt = {d(rng), d(rng), d(rng)};
    const auto ref = testsupport::ref_eval(f, names, pt);
    if (!ref) {
      EXPECT_THROW(ev(pt), DomainError) << render(f);
      continue;
    }
    ASSERT_NEAR(ev(pt), *ref, 1e-9 * (1 + std::fabs(*ref))) << render(f);
  }
}

TEST(ExprProperties, DerivativeMatchesFiniteDifference) {
  auto rng = testsupport::make_rng(22);
  const std::vector<std::string> names = {"x", "y"};
  std::uniform_real_distribution<double> d(-2, 2);
  int checked = 0;
  while (checked < 200) {
    const Expr f = testsupport::random_expr(rng, 4, names);
    const std::vector<double> pt = {d(rng), d(rng)};
    const std::size_t i = checked % 2;
    const Expr df = differentiate(f, names[i]);
    const auto fd = testsupport::central_difference(f, names, pt, i, 1e-6);
    const auto exact = testsupport::ref_eval(df, names, pt);
    if (!fd || !exact || std::fabs(*exact) > 1e4) continue;
    // The step must stay inside a smooth piece; skip points near singularities.
    const auto fd2 = testsupport::central_difference(f, names, pt, i, 2e-6);
    if (!fd2 || std::fabs(*fd - *fd2) > 1e-3 * (1 + std::fabs(*fd))) continue;
    ASSERT_LE(std::fabs(*exact - *fd), 1e-4 * (1 + std::fabs(*exact))) << render(f) << " d/d" << names[i];
    ++checked;
  }
}

TEST(ExprProperties, InclusionMonotonicity) {
  auto rng = testsupport::make_rng(23);
  const std::vector<std::string> names = {"x", "y"};
  int checked = 0;
  while (checked < 500) {
    const Expr f = testsupport::random_expr(rng, 4, names);
    const Box outer = testsupport::random_box(rng, names, -3, 3);
    Box inner;
    for (std::size_t k = 0; k < outer.size(); ++k) {
      const Interval& o = outer[k];
      inner.push_back(outer.name(k), testsupport::real_interval(rng, o.lo(), o.hi()));
    }
    Interval big, small;
    try {
      big = eval_interval(f, outer);
    } catch (const DomainError&) {
      continue;
    }
    small = eval_interval(f, inner);
    const double slack = 1e-9 * (1 + big.mag());
    ASSERT_GE(small.lo(), big.lo() - slack) << render(f);
    ASSERT_LE(small.hi(), big.hi() + slack) << render(f);
    ++checked;
  }
}

TEST(ExprProperties, EnclosesSampledRange) {
  auto rng = testsupport::make_rng(24);
  const std::vector<std::string> all = {"x", "y", "z"};
  int checked = 0;
  while (checked < 500) {
    const std::vector<std::string> names(all.begin(), all.begin() + 1 + checked % 3);
    const Expr f = testsupport::random_expr(rng, 4, names);
    const Box box = testsupport::random_box(rng, names, -3, 3);
    Interval enc;
    try {
      enc = eval_interval(f, box);
    } catch (const DomainError&) {
      continue;
    }
    const auto grid = testsupport::grid_range(f, box, 50);
    if (!grid) continue;
    const double slack = 1e-9 * (1 + enc.mag());
    ASSERT_LE(enc.lo(), grid->lo + slack) << render(f);
    ASSERT_GE(enc.hi(), grid->hi - slack) << render(f);
    ++checked;
  }
}

TEST(ExprProperties, ParseRenderRoundTrip) {
  auto rng = testsupport::make_rng(25);
  for (int i = 0; i < 1000; ++i) {
    const Expr e = testsupport::random_expr(rng, 4, {"x", "y", "x0"});
    ASSERT_EQ(parse(render(e)), e) << render(e);
  }
}
