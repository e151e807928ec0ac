#pragma once

// SVG rendering of a zone.  Coordinates are converted to double here and
// nowhere else; unbounded cells are cut to the viewport for display.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "zone/cell.hpp"
#include "zone/io.hpp"

namespace zone {

struct Viewport {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

/// "x0,y0,x1,y1"
inline Viewport parse_viewport(const std::string& text) {
  Viewport v;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf", &v.x0, &v.y0, &v.x1, &v.y1) != 4 ||
      !(v.x0 < v.x1) || !(v.y0 < v.y1)) {
    throw Error(Errc::usage, "viewport must be x0,y0,x1,y1 with x0 < x1 and y0 < y1");
  }
  return v;
}

namespace svg_detail {

struct P {
  double x, y;
};

// Keeps the part of `poly` where a*x + b*y + c >= 0.
inline std::vector<P> clip(const std::vector<P>& poly, double a, double b, double c) {
  std::vector<P> out;
  const std::size_t m = poly.size();
  for (std::size_t k = 0; k < m; ++k) {
    const P& u = poly[k];
    const P& v = poly[(k + 1) % m];
    const double gu = a * u.x + b * u.y + c;
    const double gv = a * v.x + b * v.y + c;
    if (gu >= 0) out.push_back(u);
    if ((gu >= 0) != (gv >= 0)) {
      const double t = gu / (gu - gv);
      out.push_back({u.x + (v.x - u.x) * t, u.y + (v.y - u.y) * t});
    }
  }
  return out;
}

inline std::vector<P> clip_to(std::vector<P> poly, const Viewport& v) {
  poly = clip(poly, 1, 0, -v.x0);
  poly = clip(poly, -1, 0, v.x1);
  poly = clip(poly, 0, 1, -v.y0);
  return clip(poly, 0, -1, v.y1);
}

inline std::vector<P> viewport_rect(const Viewport& v) {
  return {{v.x0, v.y0}, {v.x1, v.y0}, {v.x1, v.y1}, {v.x0, v.y1}};
}

// Finite stand-in for a cell: rays are extended far past the viewport and the
// region between them is closed by an arc of far points.
inline std::vector<P> display_polygon(const Cell& cell, const Viewport& v) {
  const double cx = (v.x0 + v.x1) / 2;
  const double cy = (v.y0 + v.y1) / 2;
  const double far = 64 * (std::hypot(v.x1 - v.x0, v.y1 - v.y0) +
                           std::max({std::abs(cx), std::abs(cy), 1.0}));
  std::vector<P> poly;
  std::optional<double> in_angle;
  std::optional<double> out_angle;
  for (const auto& item : cell.boundary) {
    if (const auto* p = std::get_if<Point>(&item)) {
      poly.push_back({p->x.to_double(), p->y.to_double()});
      continue;
    }
    const auto& r = std::get<Ray>(item);
    const double dx = r.dx.to_double();
    const double dy = r.dy.to_double();
    const double len = std::hypot(dx, dy);
    const P far_point{r.origin.x.to_double() + far * dx / len, r.origin.y.to_double() + far * dy / len};
    if (poly.empty()) {
      in_angle = std::atan2(dy, dx);
      poly.push_back(far_point);
    } else {
      out_angle = std::atan2(dy, dx);
      poly.push_back(far_point);
    }
  }
  if (in_angle && out_angle) {
    double sweep = *in_angle - *out_angle;
    while (sweep <= 0) sweep += 2 * std::numbers::pi;
    const int steps = 16;
    std::vector<P> arc;
    for (int k = 1; k < steps; ++k) {
      const double t = *out_angle + sweep * k / steps;
      arc.push_back({cx + 2 * far * std::cos(t), cy + 2 * far * std::sin(t)});
    }
    poly.insert(poly.end(), arc.begin(), arc.end());
  }
  return clip_to(std::move(poly), v);
}

// Part of the viewport on the given side of `query` and inside any cap.
inline std::vector<P> half_plane_display(const Line& query, const Cell& cell, const Viewport& v) {
  const double sign = cell.side == Side::above ? 1.0 : -1.0;
  auto poly = clip(viewport_rect(v), sign * query.a().to_double(), sign * query.b().to_double(),
                   sign * query.c().to_double());
  if (cell.cap) {
    // keep the side of the cap that contains the query line
    const Line& cap = *cell.cap;
    const double q = query.is_horizontal() ? cap.eval(Point{0, -query.c()}).to_double()
                                           : cap.eval(Point{-query.c(), 0}).to_double();
    const double s = q >= 0 ? 1.0 : -1.0;
    poly = clip(poly, s * cap.a().to_double(), s * cap.b().to_double(), s * cap.c().to_double());
  }
  return poly;
}

inline std::optional<std::pair<P, P>> line_segment(const Line& l, const Viewport& v) {
  std::vector<P> hits;
  const double a = l.a().to_double();
  const double b = l.b().to_double();
  const double c = l.c().to_double();
  auto add = [&](double x, double y) {
    if (x >= v.x0 - 1e-9 && x <= v.x1 + 1e-9 && y >= v.y0 - 1e-9 && y <= v.y1 + 1e-9) hits.push_back({x, y});
  };
  if (b != 0) {
    add(v.x0, -(a * v.x0 + c) / b);
    add(v.x1, -(a * v.x1 + c) / b);
  }
  if (a != 0) {
    add(-(b * v.y0 + c) / a, v.y0);
    add(-(b * v.y1 + c) / a, v.y1);
  }
  if (hits.size() < 2) return std::nullopt;
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(), [](const P& p, const P& q) {
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  });
  return std::pair{*lo, *hi};
}

}  // namespace svg_detail

/// Bounding box of all finite cell vertices, with a margin.
inline Viewport fit_viewport(const Zone& z) {
  bool any = false;
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  for (const auto* cells : {&z.upper, &z.lower}) {
    for (const auto& c : *cells) {
      for (const auto& item : c.boundary) {
        const Point& p = std::holds_alternative<Point>(item) ? std::get<Point>(item) : std::get<Ray>(item).origin;
        const double x = p.x.to_double();
        const double y = p.y.to_double();
        if (!any) {
          x0 = x1 = x;
          y0 = y1 = y;
          any = true;
        }
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
      }
    }
  }
  if (!any) throw Error(Errc::usage, "zone has no finite vertex; pass an explicit --viewport");
  const double margin = 0.25 * std::max({x1 - x0, y1 - y0, 1.0});
  return {x0 - margin, y0 - margin, x1 + margin, y1 + margin};
}

inline std::string emit_svg(const Instance& inst, const Zone& z, std::optional<Viewport> viewport = {}) {
  using svg_detail::P;
  const Viewport v = viewport ? *viewport : fit_viewport(z);
  const double width = 800;
  const double scale = width / (v.x1 - v.x0);
  const double height = (v.y1 - v.y0) * scale;
  char buf[256];
  auto X = [&](double x) { return (x - v.x0) * scale; };
  auto Y = [&](double y) { return (v.y1 - y) * scale; };

  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.4f\" height=\"%.4f\" "
                "viewBox=\"0 0 %.4f %.4f\">\n",
                width, height, width, height);
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const char* fills[2] = {"#9ecae1", "#fdae6b"};
  for (const auto* cells : {&z.upper, &z.lower}) {
    for (const auto& c : *cells) {
      const auto poly = c.boundary.empty() ? svg_detail::half_plane_display(inst.query, c, v)
                                           : svg_detail::display_polygon(c, v);
      if (poly.size() < 3) continue;
      std::snprintf(buf, sizeof buf, "<polygon class=\"cell %s\" data-index=\"%zu\" fill=\"%s\" fill-opacity=\"%.4f\" points=\"",
                    side_name(c.side), c.index, fills[c.side == Side::below],
                    c.index % 2 ? 0.55 : 0.35);
      out += buf;
      for (std::size_t k = 0; k < poly.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%s%.4f,%.4f", k ? " " : "", X(poly[k].x), Y(poly[k].y));
        out += buf;
      }
      out += "\"/>\n";
    }
  }

  auto draw = [&](const Line& l, const char* cls, const char* stroke, double w) {
    if (auto seg = svg_detail::line_segment(l, v)) {
      std::snprintf(buf, sizeof buf,
                    "<line class=\"%s\" x1=\"%.4f\" y1=\"%.4f\" x2=\"%.4f\" y2=\"%.4f\" stroke=\"%s\" "
                    "stroke-width=\"%.4f\"/>\n",
                    cls, X(seg->first.x), Y(seg->first.y), X(seg->second.x), Y(seg->second.y), stroke, w);
      out += buf;
    }
  };
  for (const auto& l : inst.lines) draw(l, "input", "#444444", 1.0);
  draw(inst.query, "query", "#d62728", 2.0);

  for (const auto* cells : {&z.upper, &z.lower}) {
    for (const auto& c : *cells) {
      for (const auto& item : c.boundary) {
        const auto* p = std::get_if<Point>(&item);
        if (!p) continue;
        const double x = p->x.to_double();
        const double y = p->y.to_double();
        if (x < v.x0 || x > v.x1 || y < v.y0 || y > v.y1) continue;
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.4f\" cy=\"%.4f\" r=\"2.5000\" fill=\"black\"/>\n", X(x), Y(y));
        out += buf;
      }
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace zone
