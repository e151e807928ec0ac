#include <gtest/gtest.h>

#include <random>

#include "support/e3.hpp"
#include "zone/canonical.hpp"

using namespace zone;
using namespace zone::testing;

TEST(Orientation, Examples) {
  EXPECT_EQ(orientation(P("0", "0"), P("1", "0"), P("1", "1")), Orientation::left);
  EXPECT_EQ(orientation(P("0", "0"), P("1", "1"), P("2", "2")), Orientation::collinear);
  // det((3/2, 3/2), (1, 0)) = -3/2
  EXPECT_EQ(orientation(P("-1", "0"), P("1/2", "3/2"), P("0", "0")), Orientation::right);
}

TEST(Orientation, SwapFlipsSign) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int k = 0; k < 500; ++k) {
    const Point p{d(rng), d(rng)}, q{d(rng), d(rng)}, r{d(rng), d(rng)};
    EXPECT_EQ(static_cast<int>(orientation(p, q, r)), -static_cast<int>(orientation(p, r, q)));
  }
}

TEST(Line, NormalizesFirstNonzeroToOne) {
  const Line l(2, -4, 6);
  EXPECT_EQ(l.a(), Rational(1));
  EXPECT_EQ(l.b(), Rational(-2));
  EXPECT_EQ(l.c(), Rational(3));
  const Line h(0, -2, 4);
  EXPECT_EQ(h.b(), Rational(1));
  EXPECT_EQ(h.c(), Rational(-2));
  EXPECT_EQ(Line(1, 2, 3), Line(-3, -6, -9));
  EXPECT_THROW(Line(0, 0, 1), Error);
}

TEST(Intersect, Examples) {
  const auto l1 = Line::from_slope(1, 1);
  const auto l2 = Line::from_slope(2, 0);
  const auto l3 = Line::from_slope(-1, 2);
  EXPECT_EQ(intersect(l1, l2), P("1", "2"));
  EXPECT_EQ(intersect(Line::from_slope(1, 0), Line::from_slope(1, 1)), std::nullopt);
  EXPECT_EQ(intersect(l2, l3), P("2/3", "4/3"));
  try {
    intersect(l1, Line(-1, 1, -1));
    FAIL() << "expected CoincidentLines";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::coincident_lines);
  }
}

TEST(Intersect, LiesOnBothLines) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int k = 0; k < 500; ++k) {
    int a1 = d(rng), b1 = d(rng), a2 = d(rng), b2 = d(rng);
    if (a1 == 0 && b1 == 0) a1 = 1;
    if (a2 == 0 && b2 == 0) b2 = 1;
    const Line l1(a1, b1, d(rng)), l2(a2, b2, d(rng));
    if (l1 == l2) continue;
    if (auto p = intersect(l1, l2)) {
      EXPECT_TRUE(l1.contains(*p));
      EXPECT_TRUE(l2.contains(*p));
    }
  }
}

TEST(XIntercept, Examples) {
  EXPECT_EQ(x_intercept(Line::from_slope(1, 1)), Rational(-1));
  EXPECT_EQ(x_intercept(Line::from_slope(2, 0)), Rational(0));
  EXPECT_EQ(x_intercept(Line::from_slope(-1, 2)), Rational(2));
  try {
    x_intercept(Line::horizontal(3));
    FAIL() << "expected NoIntercept";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_intercept);
  }
}

TEST(HalfLine, RunAndInterceptPerSide) {
  const HalfLine up(Line::from_slope(2, 0), Side::above);
  EXPECT_EQ(up.run, Rational(1, 2));
  EXPECT_EQ(up.intercept, Rational(0));
  const HalfLine down(Line::from_slope(2, 0), Side::below);
  EXPECT_EQ(down.run, Rational(-1, 2));
  EXPECT_EQ(up.x_at(4), Rational(2));
  EXPECT_THROW(HalfLine(Line::horizontal(1), Side::above), Error);
}

TEST(Canonicalize, XAxisQueryIsIdentity) {
  const std::vector<Line> in = {Line::from_slope(1, 1)};
  const auto inst = canonicalize(x_axis(), in);
  EXPECT_EQ(inst.to_canonical, AffineMap::identity());
  ASSERT_EQ(inst.lines.size(), 1u);
  EXPECT_EQ(inst.lines[0], in[0]);
}

TEST(Canonicalize, VerticalQuery) {
  const std::vector<Line> in = {Line::from_slope(1, 0)};
  const auto inst = canonicalize(Line(1, 0, 0), in);
  // x = 0 becomes the x-axis
  EXPECT_EQ(inst.to_canonical.apply(P("0", "5")).y, Rational(0));
  ASSERT_EQ(inst.lines.size(), 1u);
  EXPECT_FALSE(inst.lines[0].is_horizontal());
}

TEST(Canonicalize, DedupAndNearestHorizontals) {
  const std::vector<Line> in = {Line::from_slope(1, 1, 0), Line(2, -2, 2, 1), Line::horizontal(3, 2),
                                Line::horizontal(5, 3), Line::horizontal(-2, 4)};
  const auto inst = canonicalize(x_axis(), in);
  ASSERT_EQ(inst.lines.size(), 1u);
  EXPECT_EQ(inst.lines[0], Line::from_slope(1, 1));
  EXPECT_EQ(inst.horizontals_above, Rational(3));
  EXPECT_EQ(inst.horizontals_below, Rational(-2));
  EXPECT_EQ(inst.horizontal_count_above, 2u);
  EXPECT_EQ(inst.horizontal_count_below, 1u);
  ASSERT_EQ(inst.duplicates.size(), 1u);
  EXPECT_EQ(inst.duplicates[0].source_id, 1);
  EXPECT_EQ(inst.duplicates[0].kept_id, 0);
}

TEST(Canonicalize, QueryInInputIsRejected) {
  const std::vector<Line> in = {Line::from_slope(1, 1), Line(0, 3, 0)};
  try {
    canonicalize(x_axis(), in);
    FAIL() << "expected QueryInArrangement";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::query_in_arrangement);
  }
}

TEST(Canonicalize, InverseMapRestoresEveryLine) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    int qa = d(rng), qb = d(rng);
    if (qa == 0 && qb == 0) qb = 1;
    const Line query(qa, qb, d(rng));
    std::vector<Line> in;
    for (int k = 0; k < 8; ++k) {
      int a = d(rng), b = d(rng);
      if (a == 0 && b == 0) a = 1;
      Line l(a, b, d(rng), k);
      if (l == query) continue;
      in.push_back(l);
    }
    const auto inst = canonicalize(query, in);
    EXPECT_EQ(inst.to_canonical.compose(inst.inverse_map), AffineMap::identity());
    EXPECT_EQ(AffineMap::map_line(inst.inverse_map, query), x_axis());
    for (const auto& l : in) {
      const Line there = AffineMap::map_line(inst.inverse_map, l);
      EXPECT_EQ(AffineMap::map_line(inst.to_canonical, there), l);
    }
  }
}

TEST(AffineMap, OrientationSignIsRecorded) {
  const AffineMap m = canonical_map(Line(1, 0, 0));  // vertical query swaps axes
  EXPECT_TRUE(m.reverses_orientation());
  const Point p = P("0", "0"), q = P("1", "0"), r = P("1", "1");
  EXPECT_EQ(static_cast<int>(orientation(m.apply(p), m.apply(q), m.apply(r))),
            -static_cast<int>(orientation(p, q, r)));
  EXPECT_FALSE(canonical_map(Line(1, 2, 3)).reverses_orientation());
}
