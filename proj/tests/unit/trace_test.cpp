#include <gtest/gtest.h>

#include "support/e3.hpp"
#include "zone/trace.hpp"

using namespace zone;
using namespace zone::testing;

namespace {

std::vector<std::string> with_prefix(const std::vector<std::string>& frames, const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& f : frames) {
    if (f.rfind(prefix, 0) == 0) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST(Trace, E3ForwardScan) {
  const auto frames = trace(canonicalize(x_axis(), e3_lines()), Side::above);
  const auto fw = with_prefix(frames, "[forward");
  ASSERT_EQ(fw.size(), 3u);
  EXPECT_EQ(fw[0],
            "[forward step 1] insert l2 at (0, 0): walked 1 edge, first hit (1, 2); froze alpha_1 = (-1, 0) -> (1, 2)");
  EXPECT_EQ(fw[1], "[forward step 2] insert l3 at (2, 0): walked 1 edge, first hit (2/3, 4/3); froze alpha_2 = "
                   "(0, 0) -> (2/3, 4/3)");
  EXPECT_EQ(fw[2], "[forward final] alpha_3 = (2, 0) -> (2/3, 4/3) -> (1, 2) -> ray along l1");
  EXPECT_EQ(with_prefix(frames, "[backward").size(), 3u);
}

TEST(Trace, E3Merges) {
  const auto frames = trace(canonicalize(x_axis(), e3_lines()), Side::above);
  const auto c1 = with_prefix(frames, "[merge C_1]");
  ASSERT_EQ(c1.size(), 2u);
  EXPECT_EQ(c1[0], "[merge C_1] start at y=0: no crossing in this slab");
  EXPECT_EQ(c1[1], "[merge C_1] event at y=4/3 (beta): chains meet at q=(1/2, 3/2)");
  const auto c2 = with_prefix(frames, "[merge C_2]");
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_EQ(c2[0], "[merge C_2] start at y=0: chains meet at q=(2/3, 4/3)");
}

TEST(Trace, Header) {
  const auto frames = trace(canonicalize(x_axis(), e3_lines()), Side::below);
  ASSERT_GE(frames.size(), 4u);
  EXPECT_EQ(frames[0].rfind("# side below, n=3", 0), 0u);
  EXPECT_EQ(frames[1].rfind("# position 1: l1", 0), 0u);
}

TEST(Trace, SingleLine) {
  const std::vector<Line> in = {Line::from_slope(1, 0, 0)};
  const auto frames = trace(canonicalize(x_axis(), in), Side::above);
  const auto fw = with_prefix(frames, "[forward");
  ASSERT_EQ(fw.size(), 1u);
  EXPECT_EQ(fw[0], "[forward final] alpha_1 = (0, 0) -> ray along l1");
  EXPECT_TRUE(with_prefix(frames, "[merge").empty());
}

TEST(Trace, CapIsEnforced) {
  std::vector<Line> in;
  for (int k = 0; k <= static_cast<int>(kTraceCap); ++k) in.push_back(Line::from_slope(k + 1, k, k));
  const auto inst = canonicalize(x_axis(), in);
  try {
    trace(inst, Side::above);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::usage);
  }
  in.pop_back();
  EXPECT_NO_THROW(trace(canonicalize(x_axis(), in), Side::above));
}

TEST(Trace, UnnamedLinesUsePosition) {
  const std::vector<Line> in = {Line::from_slope(1, 0), Line::from_slope(-1, 3)};
  const auto order = sort_and_orient(std::span<const Line>(in), Side::above);
  EXPECT_EQ(trace_line_name(order, 1), "#2");
}
