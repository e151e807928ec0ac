#include <gtest/gtest.h>

#include <random>

#include "support/e3.hpp"
#include "zone/engine.hpp"

using namespace zone;
using namespace zone::testing;

namespace {

Ray ray(const char* x, const char* y, const char* dx, const char* dy) {
  return Ray{P(x, y), R(dx), R(dy)};
}

std::vector<BoundaryItem> items(std::initializer_list<BoundaryItem> xs) { return xs; }

Zone stitched(std::span<const Line> lines, const Line& query = x_axis()) {
  ZoneOptions options;
  options.stitch = true;
  return zone::zone(query, lines, options);
}

}  // namespace

TEST(Stitch, OffByDefault) {
  const auto lines = e3_lines();
  EXPECT_FALSE(zone::zone(x_axis(), lines).faces.has_value());
}

TEST(Stitch, E3Faces) {
  const auto lines = e3_lines();
  const Zone z = stitched(lines);
  ASSERT_TRUE(z.faces.has_value());
  const auto& faces = *z.faces;
  ASSERT_EQ(faces.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(faces[k].index, k);
    EXPECT_FALSE(faces[k].side.has_value());
    EXPECT_FALSE(faces[k].bounded);
  }
  // base [0, 2]: the triangle above and the wedge below share the sides on
  // y = 2x and y = -x + 2, so the face is the wedge under their crossing
  ASSERT_EQ(faces[2].components.size(), 1u);
  EXPECT_EQ(faces[2].components[0],
            items({ray("2/3", "4/3", "1", "-1"), P("2/3", "4/3"), ray("2/3", "4/3", "-1", "-2")}));
  ASSERT_EQ(faces[1].components.size(), 1u);
  EXPECT_EQ(faces[1].components[0], items({ray("2/3", "4/3", "-1", "-2"), P("2/3", "4/3"), P("1/2", "3/2"),
                                           ray("1/2", "3/2", "-1", "-1")}));
}

TEST(Stitch, ParallelLinesGiveTwoComponents) {
  const std::vector<Line> in = {Line::from_slope(1, 0, 0), Line::from_slope(1, -2, 1)};
  const Zone z = stitched(in);
  ASSERT_EQ(z.faces->size(), 3u);
  const Face& strip = (*z.faces)[1];
  ASSERT_EQ(strip.components.size(), 2u);
  EXPECT_EQ(strip.components[0], items({ray("0", "0", "1", "1"), P("0", "0"), ray("0", "0", "-1", "-1")}));
  EXPECT_EQ(strip.components[1], items({ray("2", "0", "-1", "-1"), P("2", "0"), ray("2", "0", "1", "1")}));
}

TEST(Stitch, ZeroLengthBasesAreOneSided) {
  const std::vector<Line> in = {Line::from_slope(1, 0, 0), Line::from_slope(-1, 0, 1), Line::from_slope(2, 0, 2)};
  const Zone z = stitched(in);
  ASSERT_EQ(z.faces->size(), 6u);
  std::size_t above = 0, below = 0;
  for (const auto& f : *z.faces) {
    if (f.side == Side::above) ++above;
    if (f.side == Side::below) ++below;
  }
  EXPECT_EQ(above, 2u);
  EXPECT_EQ(below, 2u);
  EXPECT_EQ((*z.faces)[1].components[0], z.upper[1].boundary);
  EXPECT_EQ((*z.faces)[2].components[0], z.upper[2].boundary);
}

TEST(Stitch, EmptyArrangement) {
  const Zone plain = stitched(std::vector<Line>{});
  ASSERT_EQ(plain.faces->size(), 1u);
  EXPECT_TRUE((*plain.faces)[0].components.empty());

  const std::vector<Line> caps = {Line::horizontal(3), Line::horizontal(-1)};
  const Zone z = stitched(caps);
  ASSERT_EQ(z.faces->size(), 1u);
  const auto& comps = (*z.faces)[0].components;
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], items({ray("0", "3", "1", "0"), P("0", "3"), ray("0", "3", "-1", "0")}));
  EXPECT_EQ(comps[1], items({ray("0", "-1", "-1", "0"), P("0", "-1"), ray("0", "-1", "1", "0")}));
}

TEST(Stitch, FaceCountMatchesBases) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Line> lines;
    const int n = 1 + trial % 9;
    for (int k = 0; k < n; ++k) {
      int a = d(rng), b = d(rng);
      if (a == 0 && b == 0) a = 1;
      lines.emplace_back(a, b, d(rng), k);
    }
    Line query(d(rng), 1, d(rng));
    bool hits = false;
    for (const auto& l : lines) hits = hits || l == query;
    if (hits) continue;
    const Zone z = stitched(lines, query);
    std::size_t zero = 0;
    for (const auto& c : z.lower) zero += c.base.zero_length() ? 1 : 0;
    ASSERT_EQ(z.faces->size(), z.upper.size() + zero) << "trial " << trial;
    for (const auto& f : *z.faces) {
      ASSERT_FALSE(f.components.empty());
      for (const auto& comp : f.components) ASSERT_FALSE(comp.empty());
    }
  }
}
