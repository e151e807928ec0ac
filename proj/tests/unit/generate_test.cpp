#include <gtest/gtest.h>

#include <map>

#include "zone/engine.hpp"
#include "zone/generate.hpp"

using namespace zone;

namespace {

std::size_t largest_pencil(const Instance& inst) {
  std::map<Rational, std::size_t> at;
  std::size_t best = 0;
  for (const auto& l : inst.lines) {
    if (l.is_horizontal()) continue;
    best = std::max(best, ++at[x_intercept(l)]);
  }
  return best;
}

std::pair<std::size_t, std::size_t> horizontals(const Instance& inst) {
  std::size_t above = 0, below = 0;
  for (const auto& l : inst.lines) {
    if (!l.is_horizontal()) continue;
    (l.c().sign() < 0 ? above : below) += 1;  // y = -c
  }
  return {above, below};
}

}  // namespace

TEST(Generate, DeterministicPerSeed) {
  for (auto mode : {Degeneracy::none, Degeneracy::mixed}) {
    EXPECT_EQ(emit_instance(generate(5, 20, 9, mode)), emit_instance(generate(5, 20, 9, mode)));
    EXPECT_NE(emit_instance(generate(5, 20, 9, mode)), emit_instance(generate(6, 20, 9, mode)));
  }
}

TEST(Generate, SizeBoundAndQuery) {
  for (auto mode : {Degeneracy::none, Degeneracy::concurrent, Degeneracy::horizontal, Degeneracy::mixed}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const std::size_t n = seed % 13;
      const Instance inst = generate(seed, n, 4, mode);
      EXPECT_EQ(inst.query, Line(0, 1, 0));
      ASSERT_EQ(inst.lines.size(), n);
      for (std::size_t k = 0; k < n; ++k) {
        const Line& l = inst.lines[k];
        EXPECT_EQ(l.source_id(), static_cast<int>(k));
        EXPECT_NE(l, inst.query);
      }
      EXPECT_NO_THROW(zone::zone(inst.query, inst.lines));
    }
  }
}

TEST(Generate, CoefficientsStayInBound) {
  const Instance inst = generate(3, 200, 5, Degeneracy::mixed);
  const std::string text = emit_instance(inst);
  const Instance back = parse_instance(text);
  for (const auto& l : back.lines) {
    // normalized coefficients are ratios of integers in [-5, 5]
    for (const Rational* r : {&l.a(), &l.b(), &l.c()}) EXPECT_LE(abs(*r), Rational(5));
  }
}

TEST(Generate, ModesHaveTheirDegeneracies) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 11;
    const Instance none = generate(seed, n, 9, Degeneracy::none);
    EXPECT_EQ(horizontals(none), (std::pair<std::size_t, std::size_t>{0, 0}));

    const Instance conc = generate(seed, n, 9, Degeneracy::concurrent);
    EXPECT_GE(largest_pencil(conc), std::min<std::size_t>(n, std::max<std::size_t>(3, n / 3)));

    const Instance flat = generate(seed, n, 9, Degeneracy::horizontal);
    auto [above, below] = horizontals(flat);
    EXPECT_GE(above, 1u);
    EXPECT_GE(below, 1u);

    const Instance mixed = generate(seed, n, 9, Degeneracy::mixed);
    EXPECT_GE(largest_pencil(mixed), 2u);
  }
}

TEST(Generate, MixedRepeatsLines) {
  std::size_t repeats = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = generate(seed, 30, 9, Degeneracy::mixed);
    repeats += canonicalize(inst.query, inst.lines).duplicates.size();
  }
  EXPECT_GT(repeats, 0u);
}

TEST(Generate, BadArguments) {
  EXPECT_THROW(generate(1, 5, 0, Degeneracy::none), Error);
  EXPECT_EQ(parse_degeneracy("horizontal"), Degeneracy::horizontal);
  EXPECT_THROW(parse_degeneracy("diagonal"), Error);
}

TEST(Generate, HeaderComment) {
  const Instance inst = generate(7, 3, 9, Degeneracy::none);
  const std::string text = emit_generated(inst, 7, 3, 9, Degeneracy::none);
  EXPECT_EQ(text.substr(0, text.find('\n')), "# gen seed=7 n=3 bound=9 degeneracy=none");
}
