#pragma once

// Instance files, JSON serialization of zones, and the plain-text summary.

#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "zone/cell.hpp"
#include "zone/geometry.hpp"

namespace zone {

/// A query line plus the input lines, as read from an instance file.
struct Instance {
  Line query;
  std::vector<Line> lines;
};

namespace io_detail {

inline std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t' || s[k] == '\r')) ++k;
    const std::size_t start = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t' && s[k] != '\r') ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

inline std::string coeff(const Rational& r) {
  return r.is_integer() ? r.numerator_str() : r.str();
}

}  // namespace io_detail

/// Parses `query a b c` and `line a b c` records; `#` starts a comment.
inline Instance parse_instance(std::string_view text) {
  Instance inst;
  bool have_query = false;
  int line_no = 0;
  int next_id = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    const auto w = io_detail::words(row);
    if (w.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
    };
    if (w[0] != "query" && w[0] != "line") fail("unknown record '" + std::string(w[0]) + "'");
    if (w.size() != 4) fail("expected 3 coefficients after '" + std::string(w[0]) + "'");
    Rational c[3];
    for (int k = 0; k < 3; ++k) {
      try {
        c[k] = Rational::parse(w[k + 1]);
      } catch (const std::invalid_argument&) {
        fail("malformed rational '" + std::string(w[k + 1]) + "'");
      }
    }
    if (c[0].is_zero() && c[1].is_zero()) fail("line with a = b = 0");
    if (w[0] == "query") {
      if (have_query) fail("second query record");
      inst.query = Line(c[0], c[1], c[2]);
      have_query = true;
    } else {
      inst.lines.emplace_back(c[0], c[1], c[2], next_id++);
    }
  }
  if (!have_query) throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": missing query record");
  return inst;
}

inline std::string emit_instance(const Instance& inst) {
  std::string out;
  auto record = [&](const char* kind, const Line& l) {
    out += kind;
    for (const Rational* r : {&l.a(), &l.b(), &l.c()}) out += " " + io_detail::coeff(*r);
    out += "\n";
  };
  record("query", inst.query);
  for (const auto& l : inst.lines) record("line", l);
  return out;
}

using Json = nlohmann::json;

namespace io_detail {

inline Json rational_json(const Rational& r) { return r.str(); }

inline Rational rational_from(const Json& j) {
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw Error(Errc::parse_error, std::string("bad rational in JSON: ") + e.what());
  }
}

inline Json point_json(const Point& p) { return {{"x", rational_json(p.x)}, {"y", rational_json(p.y)}}; }

inline Point point_from(const Json& j) { return {rational_from(j.at("x")), rational_from(j.at("y"))}; }

inline Json item_json(const BoundaryItem& item) {
  if (const auto* p = std::get_if<Point>(&item)) return point_json(*p);
  const auto& r = std::get<Ray>(item);
  return {{"origin", point_json(r.origin)},
          {"dir", {{"dx", rational_json(r.dx)}, {"dy", rational_json(r.dy)}}}};
}

inline BoundaryItem item_from(const Json& j) {
  if (j.contains("origin")) {
    return Ray{point_from(j.at("origin")), rational_from(j.at("dir").at("dx")),
               rational_from(j.at("dir").at("dy"))};
  }
  return point_from(j);
}

inline Json items_json(const std::vector<BoundaryItem>& items) {
  Json arr = Json::array();
  for (const auto& item : items) arr.push_back(item_json(item));
  return arr;
}

inline std::vector<BoundaryItem> items_from(const Json& j) {
  std::vector<BoundaryItem> out;
  for (const auto& e : j) out.push_back(item_from(e));
  return out;
}

inline Json line_json(const Line& l) {
  return {{"a", rational_json(l.a())}, {"b", rational_json(l.b())}, {"c", rational_json(l.c())}};
}

inline Line line_from(const Json& j) {
  return Line(rational_from(j.at("a")), rational_from(j.at("b")), rational_from(j.at("c")));
}

inline Side side_from(const Json& j) {
  const auto s = j.get<std::string>();
  if (s == "above") return Side::above;
  if (s == "below") return Side::below;
  throw Error(Errc::parse_error, "bad side '" + s + "'");
}

inline Json cell_json(const Cell& c) {
  Json j;
  j["index"] = c.index;
  j["side"] = side_name(c.side);
  j["base"] = {{"from", c.base.from ? point_json(*c.base.from) : Json("-inf")},
               {"to", c.base.to ? point_json(*c.base.to) : Json("+inf")}};
  j["boundary"] = items_json(c.boundary);
  j["bounded"] = c.bounded;
  if (c.cap) j["cap"] = line_json(*c.cap);
  return j;
}

inline Cell cell_from(const Json& j) {
  Cell c;
  c.index = j.at("index").get<std::size_t>();
  c.side = side_from(j.at("side"));
  const auto& from = j.at("base").at("from");
  const auto& to = j.at("base").at("to");
  if (!from.is_string()) c.base.from = point_from(from);
  if (!to.is_string()) c.base.to = point_from(to);
  c.boundary = items_from(j.at("boundary"));
  c.bounded = j.at("bounded").get<bool>();
  if (j.contains("cap")) c.cap = line_from(j.at("cap"));
  return c;
}

inline Json side_stats_json(const SideStats& s) {
  return {{"forward_edges", s.forward_edges},     {"backward_edges", s.backward_edges},
          {"zone_edges", s.zone_edges},           {"traversed_edges", s.traversed_edges},
          {"merge_events", s.merge_events},       {"clipped", s.clipped}};
}

inline SideStats side_stats_from(const Json& j) {
  SideStats s;
  s.forward_edges = j.at("forward_edges").get<std::size_t>();
  s.backward_edges = j.at("backward_edges").get<std::size_t>();
  s.zone_edges = j.at("zone_edges").get<std::size_t>();
  s.traversed_edges = j.at("traversed_edges").get<std::size_t>();
  s.merge_events = j.at("merge_events").get<std::size_t>();
  s.clipped = j.at("clipped").get<bool>();
  return s;
}

}  // namespace io_detail

inline Json to_json(const Zone& z) {
  using namespace io_detail;
  Json j;
  j["n"] = z.n;
  for (const auto* cells : {&z.upper, &z.lower}) {
    Json arr = Json::array();
    for (const auto& c : *cells) arr.push_back(cell_json(c));
    j[cells == &z.upper ? "upper" : "lower"] = std::move(arr);
  }
  j["stats"] = {{"n", z.stats.n},
                {"above", side_stats_json(z.stats.above)},
                {"below", side_stats_json(z.stats.below)},
                {"total_zone_edges", z.stats.total_zone_edges},
                {"duplicates_removed", z.stats.duplicates_removed},
                {"horizontals_above", z.stats.horizontals_above},
                {"horizontals_below", z.stats.horizontals_below}};
  if (z.faces) {
    Json arr = Json::array();
    for (const auto& f : *z.faces) {
      Json fj;
      fj["index"] = f.index;
      if (f.side) fj["side"] = side_name(*f.side);
      fj["bounded"] = f.bounded;
      Json comps = Json::array();
      for (const auto& comp : f.components) comps.push_back(items_json(comp));
      fj["components"] = std::move(comps);
      arr.push_back(std::move(fj));
    }
    j["faces"] = std::move(arr);
  }
  return j;
}

inline Zone zone_from_json(const Json& j) {
  using namespace io_detail;
  try {
    Zone z;
    z.n = j.at("n").get<std::size_t>();
    for (const auto& c : j.at("upper")) z.upper.push_back(cell_from(c));
    for (const auto& c : j.at("lower")) z.lower.push_back(cell_from(c));
    const auto& s = j.at("stats");
    z.stats.n = s.at("n").get<std::size_t>();
    z.stats.above = side_stats_from(s.at("above"));
    z.stats.below = side_stats_from(s.at("below"));
    z.stats.total_zone_edges = s.at("total_zone_edges").get<std::size_t>();
    z.stats.duplicates_removed = s.at("duplicates_removed").get<std::size_t>();
    z.stats.horizontals_above = s.at("horizontals_above").get<std::size_t>();
    z.stats.horizontals_below = s.at("horizontals_below").get<std::size_t>();
    if (j.contains("faces")) {
      std::vector<Face> faces;
      for (const auto& fj : j.at("faces")) {
        Face f;
        f.index = fj.at("index").get<std::size_t>();
        if (fj.contains("side")) f.side = side_from(fj.at("side"));
        f.bounded = fj.at("bounded").get<bool>();
        for (const auto& comp : fj.at("components")) f.components.push_back(items_from(comp));
        faces.push_back(std::move(f));
      }
      z.faces = std::move(faces);
    }
    return z;
  } catch (const Json::exception& e) {
    throw Error(Errc::parse_error, std::string("zone JSON: ") + e.what());
  }
}

/// Canonical text form: sorted keys, two-space indent, trailing newline.
inline std::string dump_json(const Zone& z) { return to_json(z).dump(2) + "\n"; }

namespace io_detail {

inline std::string bound_line(const std::string& label, std::size_t value, long long bound,
                              bool applies, const char* why) {
  char buf[160];
  if (!applies) {
    std::snprintf(buf, sizeof buf, "  %-22s %zu (bound n/a: %s)\n", label.c_str(), value, why);
  } else {
    std::snprintf(buf, sizeof buf, "  %-22s %zu <= %lld %s\n", label.c_str(), value, bound,
                  static_cast<long long>(value) <= bound ? "pass" : "FAIL");
  }
  return buf;
}

}  // namespace io_detail

/// Human-readable overview with the edge bounds and whether they hold.
inline std::string summary(const Zone& z) {
  const long long n = static_cast<long long>(z.n);
  const bool nonempty = n > 0;
  const bool clipped = z.stats.above.clipped || z.stats.below.clipped;
  std::ostringstream os;
  os << "n=" << n << " upper_cells=" << z.upper.size() << " lower_cells=" << z.lower.size()
     << " forest_edges(F)=" << z.stats.above.forward_edges;
  if (nonempty) os << " ≤ " << 2 * n - 1;
  os << "\n";
  os << "bounds:\n";
  const char* empty = "n = 0";
  for (const auto* side : {&z.stats.above, &z.stats.below}) {
    const std::string tag = side == &z.stats.above ? "above" : "below";
    os << io_detail::bound_line("forest F " + tag, side->forward_edges, 2 * n - 1, nonempty, empty);
    os << io_detail::bound_line("forest F' " + tag, side->backward_edges, 2 * n - 1, nonempty, empty);
  }
  const char* why = nonempty ? "horizontal clipping" : empty;
  os << io_detail::bound_line("upper zone edges", z.stats.above.zone_edges, 4 * n - 2,
                              nonempty && !z.stats.above.clipped, why);
  os << io_detail::bound_line("lower zone edges", z.stats.below.zone_edges, 4 * n - 2,
                              nonempty && !z.stats.below.clipped, why);
  os << io_detail::bound_line("total zone edges", z.stats.total_zone_edges, 8 * n - 4,
                              nonempty && !clipped, why);
  for (const auto* side : {&z.stats.above, &z.stats.below}) {
    const std::string tag = side == &z.stats.above ? "above" : "below";
    os << io_detail::bound_line("scan+merge work " + tag, side->traversed_edges + side->merge_events,
                                6 * n, nonempty, empty);
  }
  os << "duplicates_removed=" << z.stats.duplicates_removed
     << " horizontals_above=" << z.stats.horizontals_above
     << " horizontals_below=" << z.stats.horizontals_below << "\n";
  if (z.faces) os << "faces=" << z.faces->size() << "\n";
  return os.str();
}

}  // namespace zone
