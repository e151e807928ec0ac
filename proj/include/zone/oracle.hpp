#pragma once

// Reference implementation: every zone cell is computed directly as an
// intersection of half-planes, one per line, in O(n) per cell.  Shares only
// the input normalization and output types with the fast engine.

#include <algorithm>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "zone/canonical.hpp"
#include "zone/cell.hpp"
#include "zone/geometry.hpp"

namespace zone {

/// a*x + b*y + c >= 0
struct HalfPlane {
  Rational a, b, c;

  [[nodiscard]] Rational eval(const Point& p) const { return a * p.x + b * p.y + c; }
  [[nodiscard]] Rational eval_dir(const Rational& dx, const Rational& dy) const {
    return a * dx + b * dy;
  }
};

/// Convex region, possibly unbounded.  When unbounded, the boundary arrives
/// from infinity along `in` (outward direction at vertices.front()) and
/// leaves along `out` (from vertices.back()).
struct ConvexRegion {
  std::vector<Point> vertices;
  bool bounded = false;
  std::pair<Rational, Rational> in;
  std::pair<Rational, Rational> out;
};

class EmptyCell : public Error {
 public:
  explicit EmptyCell(const std::string& what) : Error(Errc::empty_cell, what) {}
};

namespace oracle_detail {

inline Rational cross(const std::pair<Rational, Rational>& u, const std::pair<Rational, Rational>& v) {
  return u.first * v.second - u.second * v.first;
}

inline std::pair<Rational, Rational> edge_dir(const HalfPlane& h) { return {h.b, -h.a}; }

inline ConvexRegion wedge(const HalfPlane& h1, const HalfPlane& h2) {
  const Rational det = h1.a * h2.b - h2.a * h1.b;
  if (det.is_zero()) throw Error(Errc::invariant_violation, "wedge of parallel half-planes");
  Point v{(h1.b * h2.c - h2.b * h1.c) / det, (h1.c * h2.a - h2.c * h1.a) / det};
  auto d1 = edge_dir(h1);
  auto d2 = edge_dir(h2);
  ConvexRegion r;
  r.vertices.push_back(std::move(v));
  if (cross(d1, d2).sign() > 0) {
    r.in = {-d1.first, -d1.second};
    r.out = d2;
  } else {
    r.in = {-d2.first, -d2.second};
    r.out = d1;
  }
  return r;
}

// One node of the boundary walk: a finite vertex or a point at infinity
// reached along a ray from a finite vertex.
struct Node {
  bool at_infinity = false;
  Point p;  // vertex, or ray origin
  std::pair<Rational, Rational> dir;
};

inline int sign_at(const HalfPlane& h, const Node& n) {
  if (!n.at_infinity) return h.eval(n.p).sign();
  const int s = h.eval_dir(n.dir.first, n.dir.second).sign();
  return s != 0 ? s : h.eval(n.p).sign();
}

inline Point crossing(const HalfPlane& h, const Node& u, const Node& v) {
  if (!u.at_infinity && !v.at_infinity) {
    const Rational gu = h.eval(u.p);
    const Rational gv = h.eval(v.p);
    const Rational t = gu / (gu - gv);
    return {u.p.x + (v.p.x - u.p.x) * t, u.p.y + (v.p.y - u.p.y) * t};
  }
  const Node& ray = u.at_infinity ? u : v;
  const Rational t = -h.eval(ray.p) / h.eval_dir(ray.dir.first, ray.dir.second);
  return {ray.p.x + ray.dir.first * t, ray.p.y + ray.dir.second * t};
}

}  // namespace oracle_detail

/// Intersects `region` with `h`.  Returns false when `h` contains the region.
inline bool clip(ConvexRegion& region, const HalfPlane& h) {
  using oracle_detail::Node;
  std::vector<Node> nodes;
  if (!region.bounded) nodes.push_back({true, region.vertices.front(), region.in});
  for (const auto& v : region.vertices) nodes.push_back({false, v, {}});
  if (!region.bounded) nodes.push_back({true, region.vertices.back(), region.out});

  std::vector<int> sign(nodes.size());
  bool all_in = true;
  bool all_out = true;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    sign[k] = oracle_detail::sign_at(h, nodes[k]);
    all_in = all_in && sign[k] >= 0;
    all_out = all_out && sign[k] <= 0;
  }
  if (all_in) return false;
  if (all_out) {
    // touching in a point or segment still leaves no interior
    throw EmptyCell("half-plane misses the region");
  }

  const std::size_t m = nodes.size();
  const std::size_t pairs = region.bounded ? m : m - 1;
  std::vector<Point> out;
  for (std::size_t k = 0; k < m; ++k) {
    if (sign[k] >= 0 && !nodes[k].at_infinity) out.push_back(nodes[k].p);
    if (k >= pairs) break;
    const std::size_t j = (k + 1) % m;
    if ((sign[k] > 0 && sign[j] < 0) || (sign[k] < 0 && sign[j] > 0)) {
      out.push_back(oracle_detail::crossing(h, nodes[k], nodes[j]));
    }
  }

  ConvexRegion r;
  const auto d = oracle_detail::edge_dir(h);
  if (region.bounded) {
    r.bounded = true;
  } else {
    const bool keep_in = sign.front() >= 0;
    const bool keep_out = sign.back() >= 0;
    r.bounded = !keep_in && !keep_out;
    if (!r.bounded) {
      r.in = keep_in ? region.in : std::pair{-d.first, -d.second};
      r.out = keep_out ? region.out : d;
    }
  }
  r.vertices = std::move(out);
  region = std::move(r);
  return true;
}

/// Lines in the order the zone cells are numbered: by intercept, ties broken
/// by the x coordinate just off the axis on the given side.
inline std::vector<Line> oracle_order(std::span<const Line> lines, Side side) {
  std::vector<Line> order(lines.begin(), lines.end());
  auto slope_x = [](const Line& l) { return -l.b(); };  // dx/dy
  auto icpt = [](const Line& l) { return -l.c(); };
  std::sort(order.begin(), order.end(), [&](const Line& l, const Line& r) {
    if (auto c = compare(icpt(l), icpt(r)); c != 0) return c < 0;
    const int c = compare(slope_x(l), slope_x(r));
    return side == Side::above ? c < 0 : c > 0;
  });
  return order;
}

/// Cell `index` of one side, in canonical coordinates.
inline Cell oracle_cell(const CanonicalInstance& inst, const std::vector<Line>& order,
                        std::size_t index, Side side) {
  const Rational up = side == Side::above ? Rational(1) : Rational(-1);
  Cell cell;
  cell.index = index;
  cell.side = side;
  const std::optional<Rational> cap_height =
      side == Side::above ? inst.horizontals_above : inst.horizontals_below;
  const std::optional<Line> cap_line =
      side == Side::above ? inst.horizontal_line_above : inst.horizontal_line_below;

  if (order.empty()) {
    cell.cap = cap_line;
    return cell;
  }

  const HalfPlane axis{0, up, 0};
  auto constraint = [&](std::size_t j) {
    const Line& l = order[j];  // x + b y + c = 0, right side is >= 0
    return j < index ? HalfPlane{l.a(), l.b(), l.c()} : HalfPlane{-l.a(), -l.b(), -l.c()};
  };
  const std::size_t first = index < order.size() ? index : index - 1;
  ConvexRegion region = oracle_detail::wedge(axis, constraint(first));
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (j != first) clip(region, constraint(j));
  }
  if (cap_height) {
    if (clip(region, HalfPlane{0, -up, up * *cap_height})) cell.cap = cap_line;
  }

  const auto& v = region.vertices;
  std::vector<std::size_t> on_axis;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].y.is_zero()) on_axis.push_back(k);
  }
  if (on_axis.empty() || on_axis.size() > 2) {
    throw Error(Errc::invariant_violation, "cell does not meet the query line in one segment");
  }
  if (on_axis.size() == 2) {
    cell.base.from = std::min(v[on_axis[0]], v[on_axis[1]]);
    cell.base.to = std::max(v[on_axis[0]], v[on_axis[1]]);
  } else {
    const Point& p = v[on_axis[0]];
    const bool ray_left = !region.bounded && ((region.in.second.is_zero() && on_axis[0] == 0 &&
                                               region.in.first.sign() < 0) ||
                                              (region.out.second.is_zero() &&
                                               on_axis[0] + 1 == v.size() && region.out.first.sign() < 0));
    const bool ray_right = !region.bounded && ((region.in.second.is_zero() && on_axis[0] == 0 &&
                                                region.in.first.sign() > 0) ||
                                               (region.out.second.is_zero() &&
                                                on_axis[0] + 1 == v.size() && region.out.first.sign() > 0));
    if (!ray_left) cell.base.from = p;
    if (!ray_right) cell.base.to = p;
  }

  cell.bounded = region.bounded;
  if (region.bounded) {
    for (const auto& p : v) cell.boundary.emplace_back(p);
    rotate_to(cell.boundary, *cell.base.from);
  } else {
    cell.boundary.emplace_back(make_ray(v.front(), region.in.first, region.in.second));
    for (const auto& p : v) cell.boundary.emplace_back(p);
    cell.boundary.emplace_back(make_ray(v.back(), region.out.first, region.out.second));
  }
  return cell;
}

/// Zone computed cell by cell, in the input coordinates.  Only `n`, the
/// cells and the duplicate and horizontal counts of `stats` are filled.
inline Zone oracle_zone(const Line& query, std::span<const Line> input) {
  const CanonicalInstance inst = canonicalize(query, input);
  Zone z;
  z.n = inst.lines.size();
  z.stats.n = z.n;
  z.stats.duplicates_removed = inst.duplicates.size();
  z.stats.horizontals_above = inst.horizontal_count_above;
  z.stats.horizontals_below = inst.horizontal_count_below;
  for (Side side : {Side::above, Side::below}) {
    const auto order = oracle_order(inst.lines, side);
    auto& cells = side == Side::above ? z.upper : z.lower;
    for (std::size_t i = 0; i <= order.size(); ++i) {
      cells.push_back(transform_cell(oracle_cell(inst, order, i, side), inst.inverse_map,
                                     inst.to_canonical));
    }
  }
  return z;
}

struct DiffReport {
  bool equal = true;
  std::string first_difference;

  explicit operator bool() const { return equal; }
};

namespace oracle_detail {

inline bool same_boundary(const Cell& a, const Cell& b) {
  if (a.boundary.size() != b.boundary.size()) return false;
  if (!a.bounded) return a.boundary == b.boundary;
  const std::size_t m = a.boundary.size();
  for (std::size_t shift = 0; shift < m; ++shift) {
    bool ok = true;
    for (std::size_t k = 0; k < m && ok; ++k) ok = a.boundary[k] == b.boundary[(k + shift) % m];
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle_detail

/// First divergence between two zones, comparing geometry only.
inline DiffReport diff(const Zone& expected, const Zone& actual) {
  DiffReport r;
  auto fail = [&](std::string what) {
    r.equal = false;
    r.first_difference = std::move(what);
    return r;
  };
  if (expected.n != actual.n) {
    return fail("n: expected " + std::to_string(expected.n) + ", got " + std::to_string(actual.n));
  }
  for (Side side : {Side::above, Side::below}) {
    const auto& e = side == Side::above ? expected.upper : expected.lower;
    const auto& a = side == Side::above ? actual.upper : actual.lower;
    const std::string tag = std::string(side_name(side)) + " ";
    if (e.size() != a.size()) {
      return fail(tag + "cell count: expected " + std::to_string(e.size()) + ", got " +
                  std::to_string(a.size()));
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      const Cell& ce = e[k];
      const Cell& ca = a[k];
      const bool same = ce.index == ca.index && ce.side == ca.side && ce.base == ca.base &&
                        ce.bounded == ca.bounded && ce.cap == ca.cap &&
                        oracle_detail::same_boundary(ce, ca);
      if (!same) return fail(tag + "cell " + std::to_string(k) + "\n  expected " + ce.str() + "\n  got      " + ca.str());
    }
  }
  return r;
}

}  // namespace zone
