#include <gtest/gtest.h>

#include <cmath>

#include "intervox/errors.hpp"
#include "intervox/format.hpp"
#include "intervox/interval.hpp"
#include "support/oracles.hpp"

using namespace intervox;
using testsupport::SignClass;

namespace {

void expect_hull(const Interval& got, const testsupport::Hull& h) {
  EXPECT_EQ(got.lo(), h.lo);
  EXPECT_EQ(got.hi(), h.hi);
}

}  // namespace

TEST(Interval, RejectsReversedAndNonFinite) {
  EXPECT_THROW(Interval(2.0, 1.0), InvalidInterval);
  EXPECT_THROW(Interval(0.0, INFINITY), InvalidInterval);
  EXPECT_THROW(Interval(NAN, 1.0), InvalidInterval);
}

TEST(Interval, NegativeZeroIsNormalized) {
  const Interval z(-0.0, -0.0);
  EXPECT_FALSE(std::signbit(z.lo()));
  EXPECT_FALSE(std::signbit(z.hi()));
  EXPECT_FALSE(std::signbit(neg(Interval(0.0, 1.0)).hi()));
}

TEST(Interval, AddExamples) {
  EXPECT_EQ(Interval(0, 2) + Interval(-1, 1), Interval(-1, 3));
  EXPECT_EQ(Interval(-2.5, 7) + Interval(0, 0), Interval(-2.5, 7));
  const Interval x(1, 2), y(3, 6);
  expect_hull(x + y, testsupport::grid_binary(x, y, 100, [](double a, double b) { return a + b; }));
}

TEST(Interval, SubExamples) {
  EXPECT_EQ(Interval(-1, 0) - Interval(1, 2), Interval(-3, -1));
  EXPECT_EQ(Interval(-2.5, 7) - Interval(0, 0), Interval(-2.5, 7));
  const Interval x(1, 2);
  expect_hull(x - x, testsupport::grid_binary(x, x, 100, [](double a, double b) { return a - b; }));
  EXPECT_EQ(x - x, Interval(-1, 1));
}

TEST(Interval, NegExamples) {
  EXPECT_EQ(-Interval(1, 2), Interval(-2, -1));
  EXPECT_EQ(-Interval(0, 0), Interval(0, 0));
  EXPECT_EQ(-Interval(-3, -1), Interval(1, 3));
  EXPECT_EQ(-(-Interval(-3, 5)), Interval(-3, 5));
}

TEST(Interval, MulExamples) {
  EXPECT_EQ(Interval(-1, 0) * Interval(1, 2), Interval(-2, 0));
  EXPECT_EQ(Interval(0, 0) * Interval(-3, 5), Interval(0, 0));
  const Interval x(-2, 3), y(-1, 4);
  expect_hull(x * y, testsupport::grid_binary(x, y, 2, [](double a, double b) { return a * b; }));
  EXPECT_EQ(x * y, Interval(-8, 12));
}

TEST(Interval, RecipAndDivExamples) {
  const auto r = [](double a, double b) { return a / b; };
  expect_hull(recip(Interval(1, 2)), testsupport::grid_binary(Interval(1), Interval(1, 2), 50, r));
  EXPECT_EQ(recip(Interval(1, 2)), Interval(0.5, 1));
  EXPECT_EQ(recip(Interval(1, 1)), Interval(1, 1));
  EXPECT_EQ(recip(Interval(-2, -1)), Interval(-1, -0.5));
  EXPECT_EQ(Interval(1, 1) / Interval(2, 4), Interval(0.25, 0.5));
  EXPECT_EQ(Interval(-3, 5) / Interval(1, 1), Interval(-3, 5));
  expect_hull(Interval(-8, 4) / Interval(2, 3),
              testsupport::grid_binary(Interval(-8, 4), Interval(2, 3), 2, r));
  EXPECT_EQ(Interval(-8, 4) / Interval(2, 3), Interval(-4, 2));
  EXPECT_THROW(recip(Interval(-1, 1)), ZeroInDivisor);
  EXPECT_THROW(recip(Interval(0, 1)), ZeroInDivisor);
  EXPECT_THROW(Interval(1, 2) / Interval(-1, 0), DomainError);
}

TEST(Interval, IntersectExamples) {
  EXPECT_EQ(intersect(Interval(0, 2), Interval(1, 3)), Interval(1, 2));
  EXPECT_FALSE(intersect(Interval(0, 1), Interval(2, 3)).has_value());
  EXPECT_EQ(intersect(Interval(0, 1), Interval(1, 2)), Interval(1, 1));
}

TEST(IntervalSet, UnionMergeExamples) {
  EXPECT_EQ(union_merge({Interval(0, 0.5), Interval(0.5, 1)}).parts(), std::vector{Interval(0, 1)});
  EXPECT_TRUE(union_merge(std::span<const Interval>{}).empty());
  const IntervalSet s = union_merge({Interval(0, 1), Interval(2, 3), Interval(0.5, 2.5)});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], Interval(0, 3));
  // Membership agrees with the raw parts on a fine grid.
  for (double t : testsupport::samples(-1, 4, 501)) {
    const bool raw = Interval(0, 1).contains(t) || Interval(2, 3).contains(t) || Interval(0.5, 2.5).contains(t);
    EXPECT_EQ(s.contains(t), raw) << t;
  }
}

TEST(IntervalSet, CanonicalForm) {
  auto rng = testsupport::make_rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Interval> parts;
    for (int i = 0; i < 6; ++i) parts.push_back(testsupport::dyadic_interval(rng, SignClass::Any));
    const IntervalSet s = union_merge(parts);
    for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LT(s[i - 1].hi(), s[i].lo());
    for (double t : testsupport::samples(-8, 8, 257)) {
      bool raw = false;
      for (const Interval& p : parts) raw = raw || p.contains(t);
      EXPECT_EQ(s.contains(t), raw);
    }
  }
}

TEST(IntervalSet, Hausdorff) {
  EXPECT_EQ(hausdorff(union_merge({Interval(0, 1)}), Interval(0, 1)), 0.0);
  EXPECT_EQ(hausdorff(union_merge({Interval(0, 1)}), Interval(0, 3)), 2.0);
  // A gap in the set counts: the midpoint of (1,3) is 1 away from the set.
  EXPECT_EQ(hausdorff(union_merge({Interval(0, 1), Interval(3, 4)}), Interval(0, 4)), 1.0);
}

TEST(IntervalProperties, ProductInclusion) {
  auto rng = testsupport::make_rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Interval x = testsupport::real_interval(rng, -10, 10);
    const Interval y = testsupport::real_interval(rng, -10, 10);
    const Interval p = x * y;
    for (double a : testsupport::samples(x.lo(), x.hi(), 20)) {
      for (double b : testsupport::samples(y.lo(), y.hi(), 20)) {
        ASSERT_TRUE(p.contains(a * b)) << to_string(x) << to_string(y);
      }
    }
  }
}

TEST(IntervalProperties, NineCaseMatchesMinMax) {
  auto rng = testsupport::make_rng(2);
  const SignClass cls[] = {SignClass::Pos, SignClass::Neg, SignClass::Mixed};
  for (int i = 0; i < 1000; ++i) {
    const Interval x = i % 2 ? testsupport::dyadic_interval(rng, cls[i % 3])
                             : testsupport::real_interval(rng, -5, 5);
    const Interval y = testsupport::dyadic_interval(rng, cls[(i / 3) % 3]);
    const double c[] = {x.lo() * y.lo(), x.lo() * y.hi(), x.hi() * y.lo(), x.hi() * y.hi()};
    const Interval expect(*std::min_element(c, c + 4), *std::max_element(c, c + 4));
    ASSERT_EQ(mul(x, y), expect) << to_string(x) << to_string(y);
    ASSERT_EQ(mul(x, y), mul_minmax(x, y));
  }
}

TEST(IntervalProperties, Subdistributivity) {
  auto rng = testsupport::make_rng(3);
  int strict = 0;
  for (int i = 0; i < 1000; ++i) {
    const Interval x = testsupport::dyadic_interval(rng, SignClass::Any);
    const Interval y = testsupport::dyadic_interval(rng, SignClass::Any);
    const Interval z = testsupport::dyadic_interval(rng, SignClass::Any);
    const Interval lhs = x * (y + z), rhs = x * y + x * z;
    ASSERT_TRUE(lhs.subset_of(rhs));
    strict += lhs != rhs;
  }
  EXPECT_GT(strict, 0);
}

TEST(IntervalProperties, SubIsAddNeg) {
  auto rng = testsupport::make_rng(4);
  for (int i = 0; i < 1000; ++i) {
    const Interval x = testsupport::real_interval(rng, -100, 100);
    const Interval y = testsupport::real_interval(rng, -100, 100);
    ASSERT_EQ(x - y, x + (-y));
  }
}

TEST(IntervalProperties, DegenerateEmbedding) {
  auto rng = testsupport::make_rng(5);
  std::uniform_real_distribution<double> d(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    const double a = d(rng), b = d(rng);
    ASSERT_EQ(Interval(a) + Interval(b), Interval(a + b));
    ASSERT_EQ(Interval(a) - Interval(b), Interval(a - b));
    ASSERT_EQ(Interval(a) * Interval(b), Interval(a * b));
    if (b != 0.0) ASSERT_EQ(Interval(a) / Interval(b), Interval(a / b));
  }
}

TEST(Format, SignificantDigits) {
  EXPECT_EQ(format_significant(0.25, 12), "0.25");
  EXPECT_EQ(format_significant(-0.0, 12), "0");
  EXPECT_EQ(format_significant(1.61803398874989, 12), "1.61803398875");
  EXPECT_EQ(format_interval(Interval(-5, -3), 12), "[-5,-3]");
  EXPECT_EQ(format_set(IntervalSet{}, 12), "{}");
  EXPECT_EQ(format_set(union_merge({Interval(0, 1), Interval(2, 3)}), 12), "[0,1] U [2,3]");
  EXPECT_EQ(to_string(Interval(0.1, 0.2)), "[0.1,0.2]");
}
