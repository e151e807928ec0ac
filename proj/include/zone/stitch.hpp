#pragma once

// Gluing the cell above and the cell below a base segment into one face of
// the arrangement.  Works in the canonical frame (query line = x-axis).

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "zone/cell.hpp"

namespace zone {

namespace detail {

struct Infinity {};
using Token = std::variant<Point, Ray, Infinity>;

inline bool is_base_ray(const Ray& r) { return r.dy.is_zero() && r.origin.y.is_zero(); }

// Boundary as a cycle of tokens; unbounded cells get an Infinity token
// between their outgoing and incoming rays.
inline std::vector<Token> cycle_of(const Cell& cell) {
  std::vector<Token> out;
  if (!cell.bounded) out.emplace_back(Infinity{});
  for (const auto& item : cell.boundary) {
    if (const auto* p = std::get_if<Point>(&item)) {
      out.emplace_back(*p);
    } else {
      out.emplace_back(std::get<Ray>(item));
    }
  }
  return out;
}

// Removes the edge from `first` to `second` and returns the rest of the cycle
// as a path that starts at `second` and ends at `first`.  An infinite end is
// matched by the ray lying on the x-axis.
inline std::vector<Token> cut(const std::vector<Token>& cycle, const std::optional<Point>& first,
                              const std::optional<Point>& second) {
  const std::size_t m = cycle.size();
  if (first && second) {
    for (std::size_t k = 0; k < m; ++k) {
      const auto* a = std::get_if<Point>(&cycle[k]);
      const auto* b = std::get_if<Point>(&cycle[(k + 1) % m]);
      if (a && b && *a == *first && *b == *second) {
        std::vector<Token> path;
        for (std::size_t j = 1; j <= m; ++j) path.push_back(cycle[(k + j) % m]);
        return path;
      }
    }
  } else {
    for (std::size_t k = 0; k < m; ++k) {
      const auto* r = std::get_if<Ray>(&cycle[k]);
      if (r && is_base_ray(*r)) {
        std::vector<Token> path;
        for (std::size_t j = 1; j < m; ++j) path.push_back(cycle[(k + j) % m]);
        return path;
      }
    }
  }
  throw Error(Errc::invariant_violation, "base edge not found on cell boundary");
}

inline std::pair<Rational, Rational> incoming(const Token& prev, const Point& v) {
  if (const auto* p = std::get_if<Point>(&prev)) return {v.x - p->x, v.y - p->y};
  const auto& r = std::get<Ray>(prev);
  return {-r.dx, -r.dy};
}

inline std::pair<Rational, Rational> outgoing(const Point& v, const Token& next) {
  if (const auto* p = std::get_if<Point>(&next)) return {p->x - v.x, p->y - v.y};
  const auto& r = std::get<Ray>(next);
  return {r.dx, r.dy};
}

// Drops the vertex at position k if the boundary runs straight through it.
inline void drop_if_straight(std::vector<Token>& cycle, std::vector<bool>& dead, std::size_t k) {
  const std::size_t m = cycle.size();
  Token& prev = cycle[(k + m - 1) % m];
  Token& next = cycle[(k + 1) % m];
  const Point v = std::get<Point>(cycle[k]);
  if (std::holds_alternative<Ray>(prev) && std::holds_alternative<Ray>(next)) return;
  const auto [ix, iy] = incoming(prev, v);
  const auto [ox, oy] = outgoing(v, next);
  if (!(ix * oy == iy * ox) || (ix * ox + iy * oy).sign() <= 0) return;
  dead[k] = true;
  if (auto* r = std::get_if<Ray>(&prev)) r->origin = std::get<Point>(next);
  if (auto* r = std::get_if<Ray>(&next)) r->origin = std::get<Point>(prev);
}

inline std::vector<std::vector<BoundaryItem>> split(const std::vector<Token>& cycle,
                                                    const std::vector<bool>& dead) {
  std::vector<std::vector<BoundaryItem>> components;
  const std::size_t m = cycle.size();
  std::size_t start = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (std::holds_alternative<Infinity>(cycle[k])) {
      start = k;
      break;
    }
  }
  std::vector<BoundaryItem> current;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t k = (start + j) % m;
    if (dead[k]) continue;
    if (std::holds_alternative<Infinity>(cycle[k])) {
      if (!current.empty()) components.push_back(std::move(current));
      current.clear();
    } else if (const auto* p = std::get_if<Point>(&cycle[k])) {
      current.emplace_back(*p);
    } else {
      current.emplace_back(std::get<Ray>(cycle[k]));
    }
  }
  if (!current.empty()) components.push_back(std::move(current));
  return components;
}

inline Face glue(const Cell& up, const Cell& down) {
  // upper path runs to -> from, lower path from -> to
  const auto upper_path = cut(cycle_of(up), up.base.from, up.base.to);
  const auto lower_path = cut(cycle_of(down), down.base.to, down.base.from);
  std::vector<Token> cycle(upper_path.begin(), upper_path.end() - 1);
  const std::size_t from_pos = cycle.size();
  cycle.insert(cycle.end(), lower_path.begin(), lower_path.end() - 1);
  std::vector<bool> dead(cycle.size(), false);
  if (up.base.to) drop_if_straight(cycle, dead, 0);
  if (up.base.from) drop_if_straight(cycle, dead, from_pos);

  Face face;
  face.bounded = up.bounded && down.bounded;
  face.components = split(cycle, dead);
  return face;
}

inline Face one_sided(const Cell& cell) {
  Face face;
  face.side = cell.side;
  face.bounded = cell.bounded;
  face.components.push_back(cell.boundary);
  return face;
}

// The cap line at height h as a boundary component with the face on its
// left, anchored at (0, h).
inline std::vector<BoundaryItem> cap_component(const Line& cap) {
  const Rational h = -cap.c();
  const Point anchor{Rational(0), h};
  const Rational dir = h.sign() > 0 ? Rational(1) : Rational(-1);
  return {make_ray(anchor, dir, 0), anchor, make_ray(anchor, -dir, 0)};
}

}  // namespace detail

/// Faces of the arrangement met by the query line.  Cells whose bases match
/// are glued; a cell touching the query line in a single point is a face on
/// its own.
inline std::vector<Face> stitch(const std::vector<Cell>& upper, const std::vector<Cell>& lower) {
  std::vector<Face> faces;
  if (upper.size() == 1 && lower.size() == 1 && upper[0].boundary.empty()) {
    Face face;
    for (const Cell* c : {&upper[0], &lower[0]}) {
      if (c->cap) face.components.push_back(detail::cap_component(*c->cap));
    }
    faces.push_back(std::move(face));
    return faces;
  }

  auto key = [](const Base& b) {
    return std::pair{b.from ? std::optional<Rational>(b.from->x) : std::nullopt,
                     b.to ? std::optional<Rational>(b.to->x) : std::nullopt};
  };
  std::map<std::pair<std::optional<Rational>, std::optional<Rational>>, const Cell*> below;
  for (const auto& c : lower) {
    if (!c.base.zero_length()) below.emplace(key(c.base), &c);
  }
  for (const auto& c : upper) {
    if (c.base.zero_length()) {
      faces.push_back(detail::one_sided(c));
      continue;
    }
    auto it = below.find(key(c.base));
    if (it == below.end()) throw Error(Errc::invariant_violation, "no lower cell shares base of " + c.str());
    faces.push_back(detail::glue(c, *it->second));
  }
  for (const auto& c : lower) {
    if (c.base.zero_length()) faces.push_back(detail::one_sided(c));
  }
  for (std::size_t k = 0; k < faces.size(); ++k) faces[k].index = k;
  return faces;
}

}  // namespace zone
