#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zone/geometry.hpp"

namespace zone {

/// Rational affine map p -> M p + t, stored as a 2x3 matrix [M | t].
class AffineMap {
 public:
  AffineMap() : m_{{{1, 0, 0}, {0, 1, 0}}}, flip_x_(false), flip_y_(false), axis_aligned_(true) {}
  AffineMap(Rational m00, Rational m01, Rational t0, Rational m10, Rational m11, Rational t1)
      : m_{{{std::move(m00), std::move(m01), std::move(t0)},
            {std::move(m10), std::move(m11), std::move(t1)}}} {
    classify();
  }

  static AffineMap identity() { return {}; }
  static AffineMap reflect_y() { return {1, 0, 0, 0, -1, 0}; }
  static AffineMap reflect_x() { return {-1, 0, 0, 0, 1, 0}; }

  [[nodiscard]] const Rational& at(int r, int c) const { return m_[r][c]; }

  [[nodiscard]] Point apply(const Point& p) const {
    if (axis_aligned_) return {flip_x_ ? -p.x : p.x, flip_y_ ? -p.y : p.y};
    return {m_[0][0] * p.x + m_[0][1] * p.y + m_[0][2], m_[1][0] * p.x + m_[1][1] * p.y + m_[1][2]};
  }
  /// Linear part only (directions).
  [[nodiscard]] std::pair<Rational, Rational> apply_linear(const Rational& dx,
                                                           const Rational& dy) const {
    if (axis_aligned_) return {flip_x_ ? -dx : dx, flip_y_ ? -dy : dy};
    return {m_[0][0] * dx + m_[0][1] * dy, m_[1][0] * dx + m_[1][1] * dy};
  }
  [[nodiscard]] Rational determinant() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }
  [[nodiscard]] bool reverses_orientation() const { return determinant().sign() < 0; }

  [[nodiscard]] AffineMap inverse() const {
    const Rational det = determinant();
    if (det.is_zero()) throw Error(Errc::invariant_violation, "singular affine map");
    const Rational i00 = m_[1][1] / det;
    const Rational i01 = -m_[0][1] / det;
    const Rational i10 = -m_[1][0] / det;
    const Rational i11 = m_[0][0] / det;
    const Rational t0 = -(i00 * m_[0][2] + i01 * m_[1][2]);
    const Rational t1 = -(i10 * m_[0][2] + i11 * m_[1][2]);
    return {i00, i01, t0, i10, i11, t1};
  }

  /// Image of a line under this map.  Needs the inverse map: a point p' lies
  /// on the image iff inverse(p') lies on the original.
  [[nodiscard]] static Line map_line(const AffineMap& inverse, const Line& l) {
    const auto& n = inverse.m_;
    return Line(l.a() * n[0][0] + l.b() * n[1][0], l.a() * n[0][1] + l.b() * n[1][1],
                l.a() * n[0][2] + l.b() * n[1][2] + l.c(), l.source_id());
  }

  /// this ∘ other  (apply `other` first)
  [[nodiscard]] AffineMap compose(const AffineMap& other) const {
    const auto& a = m_;
    const auto& b = other.m_;
    return {a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[0][0] * b[0][2] + a[0][1] * b[1][2] + a[0][2],
            a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1],
            a[1][0] * b[0][2] + a[1][1] * b[1][2] + a[1][2]};
  }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  // Identity and axis reflections skip the arithmetic.
  void classify() {
    auto unit = [](const Rational& r) { return r == Rational(1) || r == Rational(-1); };
    axis_aligned_ = m_[0][1].is_zero() && m_[1][0].is_zero() && m_[0][2].is_zero() && m_[1][2].is_zero() &&
                    unit(m_[0][0]) && unit(m_[1][1]);
    flip_x_ = axis_aligned_ && m_[0][0].sign() < 0;
    flip_y_ = axis_aligned_ && m_[1][1].sign() < 0;
  }

  std::array<std::array<Rational, 3>, 2> m_;
  bool flip_x_ = false;
  bool flip_y_ = false;
  bool axis_aligned_ = false;
};

struct DuplicateLine {
  int source_id;  // the dropped copy
  int kept_id;    // the copy that stayed
};

/// An instance moved to the frame where the query line is the x-axis.
struct CanonicalInstance {
  Line query;                      // original frame, normalized
  std::vector<Line> lines;         // canonical frame, non-horizontal, distinct
  std::optional<Rational> horizontals_above;  // lowest horizontal with y > 0
  std::optional<Rational> horizontals_below;  // highest horizontal with y < 0
  std::optional<Line> horizontal_line_above;  // the same lines, canonical frame
  std::optional<Line> horizontal_line_below;
  std::size_t horizontal_count_above = 0;
  std::size_t horizontal_count_below = 0;
  std::vector<DuplicateLine> duplicates;
  AffineMap to_canonical;
  AffineMap inverse_map;
  std::size_t input_size = 0;
};

/// Affine map taking `query` onto the x-axis: (x, y) -> (x, a x + b y + c),
/// or (y, x + c) when the query is vertical.
inline AffineMap canonical_map(const Line& query) {
  if (!query.b().is_zero()) return {1, 0, 0, query.a(), query.b(), query.c()};
  return {0, 1, 0, query.a(), 0, query.c()};
}

inline CanonicalInstance canonicalize(const Line& query, std::span<const Line> input) {
  CanonicalInstance inst;
  inst.query = query;
  inst.to_canonical = canonical_map(query);
  inst.inverse_map = inst.to_canonical.inverse();
  inst.input_size = input.size();

  std::vector<std::size_t> idx(input.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t l, std::size_t r) { return input[l] < input[r]; });
  std::vector<bool> keep(input.size(), true);
  std::size_t run_start = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const Line& l = input[idx[k]];
    if (l == query) {
      throw Error(Errc::query_in_arrangement,
                  "input line " + std::to_string(idx[k]) + " coincides with the query line");
    }
    if (k > 0 && l == input[idx[k - 1]]) {
      keep[idx[k]] = false;
      inst.duplicates.push_back({input[idx[k]].source_id(), input[idx[run_start]].source_id()});
    } else {
      run_start = k;
    }
  }
  std::sort(inst.duplicates.begin(), inst.duplicates.end(),
            [](const DuplicateLine& l, const DuplicateLine& r) { return l.source_id < r.source_id; });

  for (std::size_t i = 0; i < input.size(); ++i) {
    if (!keep[i]) continue;
    Line mapped = AffineMap::map_line(inst.inverse_map, input[i]);
    if (!mapped.is_horizontal()) {
      inst.lines.push_back(std::move(mapped));
      continue;
    }
    // normalized horizontal: y + c = 0
    const Rational height = -mapped.c();
    if (height.sign() > 0) {
      ++inst.horizontal_count_above;
      if (!inst.horizontals_above || height < *inst.horizontals_above) {
        inst.horizontals_above = height;
        inst.horizontal_line_above = mapped;
      }
    } else {
      ++inst.horizontal_count_below;
      if (!inst.horizontals_below || height > *inst.horizontals_below) {
        inst.horizontals_below = height;
        inst.horizontal_line_below = mapped;
      }
    }
  }
  return inst;
}

}  // namespace zone
