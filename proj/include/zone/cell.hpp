#pragma once

// Output representation shared by the zone engine and the brute-force oracle.
//
// A cell boundary is listed counterclockwise.  Bounded cells list their
// vertices starting at the left base endpoint.  Unbounded cells start with
// the ray that arrives from infinity (stored as origin + outward direction)
// and end with the ray that leaves to infinity.  A cell with no finite vertex
// (no lines at all) has an empty boundary and is described by its base and
// optional cap line.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "zone/canonical.hpp"
#include "zone/geometry.hpp"

namespace zone {

struct Ray {
  Point origin;
  Rational dx;
  Rational dy;

  friend bool operator==(const Ray&, const Ray&) = default;
};

/// Direction scaled so that its first nonzero component is +1 or -1.
inline std::pair<Rational, Rational> normalize_direction(Rational dx, Rational dy) {
  const Rational lead = dx.is_zero() ? abs(dy) : abs(dx);
  if (lead.is_zero()) throw Error(Errc::invariant_violation, "zero ray direction");
  if (!(lead == Rational(1))) {
    dx /= lead;
    dy /= lead;
  }
  return {std::move(dx), std::move(dy)};
}

inline Ray make_ray(Point origin, Rational dx, Rational dy) {
  auto [ndx, ndy] = normalize_direction(std::move(dx), std::move(dy));
  return Ray{std::move(origin), std::move(ndx), std::move(ndy)};
}

using BoundaryItem = std::variant<Point, Ray>;

inline std::string item_str(const BoundaryItem& item) {
  if (const auto* p = std::get_if<Point>(&item)) return p->str();
  const auto& r = std::get<Ray>(item);
  return "ray" + r.origin.str() + "->(" + r.dx.str() + ", " + r.dy.str() + ")";
}

/// Segment of the query line under a cell; nullopt ends lie at -inf / +inf.
struct Base {
  std::optional<Point> from;
  std::optional<Point> to;

  friend bool operator==(const Base&, const Base&) = default;
  [[nodiscard]] bool zero_length() const { return from && to && *from == *to; }
};

struct Cell {
  std::size_t index = 0;
  Side side = Side::above;
  Base base;
  std::vector<BoundaryItem> boundary;
  bool bounded = false;
  std::optional<Line> cap;  // supporting line of the clipping edge, if any

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    os << "cell " << index << " " << side_name(side) << " base["
       << (base.from ? base.from->str() : "-inf") << " .. " << (base.to ? base.to->str() : "+inf")
       << "] " << (bounded ? "bounded" : "unbounded") << " {";
    for (std::size_t k = 0; k < boundary.size(); ++k) os << (k ? ", " : "") << item_str(boundary[k]);
    os << "}";
    if (cap) os << " cap " << cap->str();
    return os.str();
  }
};

/// A full arrangement face: either a stitched pair of cells sharing a base of
/// positive length, or a single cell that touches the query line in a point.
struct Face {
  std::size_t index = 0;
  std::optional<Side> side;  // set when the face lies on one side only
  std::vector<std::vector<BoundaryItem>> components;
  bool bounded = false;
};

struct SideStats {
  std::size_t forward_edges = 0;
  std::size_t backward_edges = 0;
  std::size_t zone_edges = 0;
  std::size_t traversed_edges = 0;
  std::size_t merge_events = 0;
  bool clipped = false;

  friend bool operator==(const SideStats&, const SideStats&) = default;
};

struct ZoneStats {
  std::size_t n = 0;
  SideStats above;
  SideStats below;
  std::size_t total_zone_edges = 0;
  std::size_t duplicates_removed = 0;
  std::size_t horizontals_above = 0;
  std::size_t horizontals_below = 0;

  friend bool operator==(const ZoneStats&, const ZoneStats&) = default;
};

struct Zone {
  std::size_t n = 0;
  std::vector<Cell> upper;
  std::vector<Cell> lower;
  ZoneStats stats;
  std::optional<std::vector<Face>> faces;
};

/// Number of cell edges that do not lie on the query line.
inline std::size_t edge_count(const Cell& cell) {
  const bool base_edge = !cell.base.zero_length();
  std::size_t vertices = 0;
  for (const auto& item : cell.boundary) vertices += std::holds_alternative<Point>(item);
  std::size_t edges = 0;
  if (cell.boundary.empty()) {
    edges = 1 + (cell.cap ? 1 : 0);
  } else if (cell.bounded) {
    edges = vertices;
  } else {
    edges = vertices + 1;
  }
  return edges - (base_edge ? 1 : 0);
}

/// Rotates a bounded boundary so it starts at `start`.
inline void rotate_to(std::vector<BoundaryItem>& boundary, const Point& start) {
  auto it = std::find_if(boundary.begin(), boundary.end(), [&](const BoundaryItem& item) {
    const auto* p = std::get_if<Point>(&item);
    return p && *p == start;
  });
  if (it == boundary.end()) {
    throw Error(Errc::invariant_violation, "base endpoint missing from bounded boundary");
  }
  std::rotate(boundary.begin(), it, boundary.end());
}

/// Maps a boundary sequence, reversing it when the map flips orientation so
/// the result is counterclockwise again.
inline std::vector<BoundaryItem> transform_boundary(const std::vector<BoundaryItem>& boundary,
                                                    const AffineMap& map) {
  std::vector<BoundaryItem> out;
  out.reserve(boundary.size());
  for (const auto& item : boundary) {
    if (const auto* p = std::get_if<Point>(&item)) {
      out.emplace_back(map.apply(*p));
    } else {
      const auto& r = std::get<Ray>(item);
      auto [dx, dy] = map.apply_linear(r.dx, r.dy);
      out.emplace_back(make_ray(map.apply(r.origin), std::move(dx), std::move(dy)));
    }
  }
  if (map.reverses_orientation()) std::reverse(out.begin(), out.end());
  return out;
}

inline Cell transform_cell(const Cell& cell, const AffineMap& map, const AffineMap& inverse) {
  Cell out;
  out.index = cell.index;
  out.side = cell.side;
  out.bounded = cell.bounded;
  if (cell.base.from) out.base.from = map.apply(*cell.base.from);
  if (cell.base.to) out.base.to = map.apply(*cell.base.to);
  out.boundary = transform_boundary(cell.boundary, map);
  if (cell.cap) out.cap = AffineMap::map_line(inverse, *cell.cap);
  if (out.bounded) rotate_to(out.boundary, *out.base.from);
  return out;
}

inline Cell transform_cell(const Cell& cell, const AffineMap& map) {
  return transform_cell(cell, map, map.inverse());
}

inline Face transform_face(const Face& face, const AffineMap& map) {
  Face out;
  out.index = face.index;
  out.side = face.side;
  out.bounded = face.bounded;
  for (const auto& component : face.components) {
    auto mapped = transform_boundary(component, map);
    const bool cyclic = std::none_of(mapped.begin(), mapped.end(), [](const BoundaryItem& item) {
      return std::holds_alternative<Ray>(item);
    });
    if (cyclic && !mapped.empty()) {
      auto lowest = std::min_element(mapped.begin(), mapped.end(), [](const auto& l, const auto& r) {
        return std::get<Point>(l) < std::get<Point>(r);
      });
      std::rotate(mapped.begin(), lowest, mapped.end());
    }
    out.components.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace zone
