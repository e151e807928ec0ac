#pragma once

// Seeded random instances.  The query is always the x-axis.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zone/io.hpp"

namespace zone {

enum class Degeneracy { none, concurrent, horizontal, mixed };

inline const char* degeneracy_name(Degeneracy d) {
  switch (d) {
    case Degeneracy::none: return "none";
    case Degeneracy::concurrent: return "concurrent";
    case Degeneracy::horizontal: return "horizontal";
    case Degeneracy::mixed: return "mixed";
  }
  return "?";
}

inline Degeneracy parse_degeneracy(std::string_view s) {
  for (auto d : {Degeneracy::none, Degeneracy::concurrent, Degeneracy::horizontal, Degeneracy::mixed}) {
    if (s == degeneracy_name(d)) return d;
  }
  throw Error(Errc::usage, "unknown degeneracy '" + std::string(s) + "'");
}

/// Integer coefficients in [-bound, bound].  `none` gives non-horizontal lines
/// only.  `concurrent` makes at least min(n, max(3, n/3)) lines share one
/// x-intercept (at least two when n >= 2).  `horizontal` puts horizontal
/// lines on both sides of the axis.  `mixed` does both and may repeat a line
/// with scaled coefficients.
inline Instance generate(std::uint64_t seed, std::size_t n, std::int64_t bound, Degeneracy mode) {
  if (bound < 1) throw Error(Errc::usage, "coefficient bound must be at least 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  auto nonzero = [&](std::int64_t b) {
    std::int64_t v = uniform(1, b);
    return uniform(0, 1) ? v : -v;
  };

  struct Coeffs {
    std::int64_t a, b, c;
  };
  std::vector<Coeffs> rows;
  rows.reserve(n);
  const bool concurrent = mode == Degeneracy::concurrent || mode == Degeneracy::mixed;
  const bool horizontal = mode == Degeneracy::horizontal || mode == Degeneracy::mixed;

  std::size_t pencil = 0;
  if (concurrent && n >= 2) pencil = std::min(n, std::max<std::size_t>(3, n / 3));
  std::size_t flat_each = 0;
  if (horizontal && n >= 1) flat_each = std::max<std::size_t>(1, n / 8);
  std::size_t flat = std::min(n - pencil, 2 * flat_each);

  const std::int64_t reach = std::min<std::int64_t>(2, bound);
  const std::int64_t x0 = uniform(-reach, reach);
  for (std::size_t k = 0; k < pencil; ++k) {
    // a*x0 + c = 0 keeps |c| <= bound
    const std::int64_t a = nonzero(x0 == 0 ? bound : bound / std::abs(x0));
    rows.push_back({a, uniform(-bound, bound), -a * x0});
  }
  for (std::size_t k = 0; k < flat; ++k) {
    const std::int64_t b = nonzero(bound);
    const std::int64_t mag = uniform(1, bound);
    const bool above = k % 2 == 0;
    // y = -c/b, so c and b have opposite signs above the axis
    rows.push_back({0, b, (b > 0) == above ? -mag : mag});
  }
  while (rows.size() < n) {
    if (mode == Degeneracy::mixed && !rows.empty() && uniform(0, 9) == 0) {
      const Coeffs& src = rows[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(rows.size()) - 1))];
      rows.push_back({-src.a, -src.b, -src.c});
      continue;
    }
    rows.push_back({nonzero(bound), uniform(-bound, bound), uniform(-bound, bound)});
  }
  std::shuffle(rows.begin(), rows.end(), rng);

  Instance inst;
  inst.query = Line(0, 1, 0);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    inst.lines.emplace_back(rows[k].a, rows[k].b, rows[k].c, static_cast<int>(k));
  }
  return inst;
}

/// Instance text with a comment line recording the generator arguments.
inline std::string emit_generated(const Instance& inst, std::uint64_t seed, std::size_t n, std::int64_t bound,
                                  Degeneracy mode) {
  return "# gen seed=" + std::to_string(seed) + " n=" + std::to_string(n) + " bound=" + std::to_string(bound) +
         " degeneracy=" + degeneracy_name(mode) + "\n" + emit_instance(inst);
}

}  // namespace zone
