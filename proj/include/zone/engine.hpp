#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zone/canonical.hpp"
#include "zone/cell.hpp"
#include "zone/chains.hpp"
#include "zone/geometry.hpp"

namespace zone {

/// Part of a chain bounding a cell, in the working frame.  When `ray_run` is
/// set the fragment continues past its last vertex along direction (run, 1).
struct Fragment {
  std::vector<Point> vertices;
  std::optional<Rational> ray_run;

  [[nodiscard]] std::size_t edge_count() const {
    return vertices.size() - 1 + (ray_run ? 1 : 0);
  }
};

/// Cell C_i in the working frame, before it is turned into a boundary list.
/// The left fragment comes from the forward chain of line i-1, the right one
/// from the backward chain of line i.
struct CellPiece {
  std::size_t index = 0;
  Side side = Side::above;
  std::optional<Point> base_from;
  std::optional<Point> base_to;
  std::optional<Fragment> left;
  std::optional<Fragment> right;
  std::optional<Point> apex;
  std::optional<Rational> cap;  // working-frame clipping height
};

namespace detail {

inline Fragment prefix(const Chain& chain, std::span<const HalfLine> order,
                       const std::optional<Point>& q) {
  Fragment f;
  if (!q) {
    f.vertices = chain.vertices;
    if (chain.unbounded) f.ray_run = order[chain.edge_lines.back()].run;
    return f;
  }
  for (const auto& v : chain.vertices) {
    if (!(v.y < q->y)) break;
    f.vertices.push_back(v);
  }
  return f;
}

inline bool fragment_is_convex(const Fragment& f, ChainDirection dir) {
  const auto want = dir == ChainDirection::rightward ? Orientation::right : Orientation::left;
  for (std::size_t k = 0; k + 1 < f.vertices.size(); ++k) {
    if (!(f.vertices[k].y < f.vertices[k + 1].y)) return false;
  }
  for (std::size_t k = 0; k + 2 < f.vertices.size(); ++k) {
    if (orientation(f.vertices[k], f.vertices[k + 1], f.vertices[k + 2]) != want) return false;
  }
  return true;
}

}  // namespace detail

/// Builds C_i from the forward chain to its left and the backward chain to
/// its right.  Either chain is absent for the two outermost cells.
inline CellPiece assemble_cell(std::size_t index, Side side, const Chain* left, const Chain* right,
                               const std::optional<Point>& q, std::span<const HalfLine> order) {
  CellPiece piece;
  piece.index = index;
  piece.side = side;
  piece.apex = q;
  if (left) {
    piece.base_from = left->vertices.front();
    piece.left = detail::prefix(*left, order, q);
    if (!detail::fragment_is_convex(*piece.left, ChainDirection::rightward)) {
      throw Error(Errc::invariant_violation, "left boundary of cell " + std::to_string(index));
    }
  }
  if (right) {
    piece.base_to = right->vertices.front();
    piece.right = detail::prefix(*right, order, q);
    if (!detail::fragment_is_convex(*piece.right, ChainDirection::leftward)) {
      throw Error(Errc::invariant_violation, "right boundary of cell " + std::to_string(index));
    }
  }
  return piece;
}

namespace detail {

// Cuts a fragment (optionally closed by `apex`) at height y_star, ending it
// at the crossing point.
inline void trim(Fragment& f, const std::optional<Point>& apex, const Rational& y_star) {
  std::vector<Point> out;
  std::vector<Point> path = f.vertices;
  if (apex) path.push_back(*apex);
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Point& v = path[k];
    if (v.y < y_star) {
      out.push_back(v);
      continue;
    }
    if (v.y == y_star) {
      out.push_back(v);
    } else {
      const Point& u = path[k - 1];
      Rational x = u.x + (v.x - u.x) * (y_star - u.y) / (v.y - u.y);
      out.push_back(Point{std::move(x), y_star});
    }
    f.vertices = std::move(out);
    f.ray_run.reset();
    return;
  }
  if (!f.ray_run) throw Error(Errc::invariant_violation, "fragment ends below the clipping line");
  const Point& last = out.back();
  Rational x = last.x + *f.ray_run * (y_star - last.y);
  out.push_back(Point{std::move(x), y_star});
  f.vertices = std::move(out);
  f.ray_run.reset();
}

}  // namespace detail

/// Intersects every cell with the strip 0 <= y <= y_star (working frame).
inline std::vector<CellPiece> clip_horizontal(std::vector<CellPiece> cells, const Rational& y_star) {
  if (y_star.sign() <= 0) throw Error(Errc::invariant_violation, "clipping height must be positive");
  for (auto& piece : cells) {
    if (piece.apex && piece.apex->y <= y_star) continue;
    if (piece.left) detail::trim(*piece.left, piece.apex, y_star);
    if (piece.right) detail::trim(*piece.right, piece.apex, y_star);
    piece.apex.reset();
    piece.cap = y_star;
  }
  return cells;
}

/// Boundary list of a piece, mapped from the working frame to the canonical
/// frame of its side.
inline Cell to_cell(const CellPiece& piece) {
  Cell cell;
  cell.index = piece.index;
  cell.side = piece.side;
  cell.base.from = piece.base_from;
  cell.base.to = piece.base_to;
  if (piece.cap) cell.cap = Line::horizontal(*piece.cap);
  auto& out = cell.boundary;
  const Rational one(1);
  const Rational zero(0);

  if (piece.left && piece.right) {
    const auto& l = piece.left->vertices;
    const auto& r = piece.right->vertices;
    const bool bounded = piece.apex.has_value() || (piece.cap.has_value());
    cell.bounded = bounded;
    if (!bounded) out.emplace_back(make_ray(l.back(), *piece.left->ray_run, one));
    if (bounded) {
      out.emplace_back(l.front());
    } else {
      for (auto it = l.rbegin(); it != l.rend(); ++it) out.emplace_back(*it);
    }
    if (!(r.front() == l.front())) out.emplace_back(r.front());
    for (std::size_t k = 1; k < r.size(); ++k) out.emplace_back(r[k]);
    if (bounded) {
      if (piece.apex) out.emplace_back(*piece.apex);
      for (std::size_t k = l.size(); k-- > 1;) out.emplace_back(l[k]);
    } else {
      out.emplace_back(make_ray(r.back(), *piece.right->ray_run, one));
    }
  } else if (piece.left) {
    const auto& l = piece.left->vertices;
    if (piece.cap) {
      out.emplace_back(make_ray(l.back(), one, zero));
    } else {
      out.emplace_back(make_ray(l.back(), *piece.left->ray_run, one));
    }
    for (auto it = l.rbegin(); it != l.rend(); ++it) out.emplace_back(*it);
    out.emplace_back(make_ray(l.front(), one, zero));
  } else if (piece.right) {
    const auto& r = piece.right->vertices;
    out.emplace_back(make_ray(r.front(), -one, zero));
    for (const auto& v : r) out.emplace_back(v);
    if (piece.cap) {
      out.emplace_back(make_ray(r.back(), -one, zero));
    } else {
      out.emplace_back(make_ray(r.back(), *piece.right->ray_run, one));
    }
  }
  if (piece.side == Side::below) return transform_cell(cell, AffineMap::reflect_y());
  return cell;
}

/// Everything computed for one side of the query line.
struct SideResult {
  Side side = Side::above;
  std::vector<HalfLine> order;
  Forest forward;
  Forest backward;
  std::vector<CellPiece> pieces;
  std::size_t merge_events = 0;
};

/// The linear-time part: chains, merges and cell assembly over an order that
/// is already sorted.
template <class Observer>
SideResult upper_zone_sorted(std::vector<HalfLine> order, Side side, Observer& observer) {
  SideResult r;
  r.side = side;
  r.order = std::move(order);
  const std::size_t n = r.order.size();
  if (n == 0) {
    CellPiece whole;
    whole.side = side;
    r.pieces.push_back(std::move(whole));
    return r;
  }
  r.forward = build_chains(r.order, ForestKind::forward, observer);
  r.backward = build_chains(r.order, ForestKind::backward, observer);
  r.pieces.reserve(n + 1);
  r.pieces.push_back(assemble_cell(0, side, nullptr, &r.backward.chains[0], std::nullopt, r.order));
  for (std::size_t i = 1; i < n; ++i) {
    const Chain& alpha = r.forward.chains[i - 1];
    const Chain& beta = r.backward.chains[i];
    MergeResult m = chain_intersection(r.order, alpha, beta, observer, i);
    r.merge_events += m.events;
    r.pieces.push_back(assemble_cell(i, side, &alpha, &beta, m.q, r.order));
  }
  r.pieces.push_back(assemble_cell(n, side, &r.forward.chains[n - 1], nullptr, std::nullopt, r.order));
  return r;
}

template <class Observer>
SideResult upper_zone(const CanonicalInstance& inst, Side side, Observer& observer) {
  return upper_zone_sorted(sort_and_orient(inst, side), side, observer);
}

inline SideResult upper_zone(const CanonicalInstance& inst, Side side) {
  NullObserver observer;
  return upper_zone(inst, side, observer);
}

/// Working-frame clipping height for a side, if a horizontal line bounds it.
inline std::optional<Rational> clip_height(const CanonicalInstance& inst, Side side) {
  if (side == Side::above) return inst.horizontals_above;
  if (inst.horizontals_below) return -*inst.horizontals_below;
  return std::nullopt;
}

inline std::vector<Face> stitch(const std::vector<Cell>& upper, const std::vector<Cell>& lower);

struct ZoneOptions {
  bool stitch = false;
};

/// Zone of the x-axis for an already canonical instance, in canonical
/// coordinates.
template <class Observer>
Zone canonical_zone(const CanonicalInstance& inst, const ZoneOptions& options, Observer& observer) {
  Zone z;
  z.n = inst.lines.size();
  z.stats.n = z.n;
  z.stats.duplicates_removed = inst.duplicates.size();
  z.stats.horizontals_above = inst.horizontal_count_above;
  z.stats.horizontals_below = inst.horizontal_count_below;
  for (Side side : {Side::above, Side::below}) {
    SideResult r = upper_zone(inst, side, observer);
    SideStats& st = side == Side::above ? z.stats.above : z.stats.below;
    st.forward_edges = r.forward.edge_count();
    st.backward_edges = r.backward.edge_count();
    st.traversed_edges = r.forward.traversed_edges + r.backward.traversed_edges;
    st.merge_events = r.merge_events;
    if (auto h = clip_height(inst, side)) {
      r.pieces = clip_horizontal(std::move(r.pieces), *h);
      st.clipped = true;
    }
    auto& cells = side == Side::above ? z.upper : z.lower;
    cells.reserve(r.pieces.size());
    for (const auto& piece : r.pieces) {
      cells.push_back(to_cell(piece));
      st.zone_edges += edge_count(cells.back());
    }
  }
  z.stats.total_zone_edges = z.stats.above.zone_edges + z.stats.below.zone_edges;
  if (options.stitch) z.faces = stitch(z.upper, z.lower);
  return z;
}

/// Maps a canonical-frame zone back to the input coordinates.
inline Zone map_zone(Zone z, const AffineMap& map) {
  const AffineMap inverse = map.inverse();
  for (auto* cells : {&z.upper, &z.lower}) {
    for (auto& c : *cells) c = transform_cell(c, map, inverse);
  }
  if (z.faces) {
    for (auto& f : *z.faces) f = transform_face(f, map);
  }
  return z;
}

template <class Observer>
Zone zone(const Line& query, std::span<const Line> input, const ZoneOptions& options,
          Observer& observer) {
  const CanonicalInstance inst = canonicalize(query, input);
  return map_zone(canonical_zone(inst, options, observer), inst.inverse_map);
}

inline Zone zone(const Line& query, std::span<const Line> input, const ZoneOptions& options = {}) {
  NullObserver observer;
  return zone(query, input, options, observer);
}

}  // namespace zone

#include "zone/stitch.hpp"
