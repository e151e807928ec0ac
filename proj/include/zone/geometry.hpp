#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <tuple>

#include "zone/error.hpp"
#include "zone/rational.hpp"

namespace zone {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
  [[nodiscard]] std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
  friend std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.str(); }
};

enum class Orientation { right = -1, collinear = 0, left = 1 };

inline Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const Rational lhs = (q.x - p.x) * (r.y - p.y);
  const Rational rhs = (q.y - p.y) * (r.x - p.x);
  return static_cast<Orientation>(compare(lhs, rhs));
}

/// The line a*x + b*y + c = 0, scaled so the first nonzero of (a, b) is 1.
/// `source_id` indexes the input list and does not take part in equality.
class Line {
 public:
  Line() : a_(0), b_(1), c_(0) {}
  Line(Rational a, Rational b, Rational c, int source_id = -1)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), source_id_(source_id) {
    normalize();
  }

  /// y = slope * x + offset
  static Line from_slope(const Rational& slope, const Rational& offset, int source_id = -1) {
    return Line(slope, Rational(-1), offset, source_id);
  }
  /// y = height
  static Line horizontal(const Rational& height, int source_id = -1) {
    return Line(0, 1, -height, source_id);
  }

  [[nodiscard]] const Rational& a() const noexcept { return a_; }
  [[nodiscard]] const Rational& b() const noexcept { return b_; }
  [[nodiscard]] const Rational& c() const noexcept { return c_; }
  [[nodiscard]] int source_id() const noexcept { return source_id_; }
  void set_source_id(int id) noexcept { source_id_ = id; }

  [[nodiscard]] bool is_horizontal() const { return a_.is_zero(); }
  [[nodiscard]] Rational eval(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }
  [[nodiscard]] bool contains(const Point& p) const { return eval(p).is_zero(); }

  friend bool operator==(const Line& l, const Line& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }
  friend auto operator<=>(const Line& l, const Line& r) {
    return std::tie(l.a_, l.b_, l.c_) <=> std::tie(r.a_, r.b_, r.c_);
  }
  [[nodiscard]] std::string str() const {
    return "[" + a_.str() + " " + b_.str() + " " + c_.str() + "]";
  }

 private:
  void normalize() {
    if (a_.is_zero() && b_.is_zero()) {
      throw Error(Errc::parse_error, "line with a = b = 0");
    }
    const Rational lead = a_.is_zero() ? b_ : a_;
    if (!(lead == Rational(1))) {
      a_ /= lead;
      b_ /= lead;
      c_ /= lead;
    }
  }

  Rational a_, b_, c_;
  int source_id_ = -1;
};

/// Intersection of two distinct lines; nullopt when parallel.
inline std::optional<Point> intersect(const Line& l1, const Line& l2) {
  const Rational det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det.is_zero()) {
    if (l1 == l2) throw Error(Errc::coincident_lines, l1.str());
    return std::nullopt;
  }
  return Point{(l1.b() * l2.c() - l2.b() * l1.c()) / det,
               (l1.c() * l2.a() - l2.c() * l1.a()) / det};
}

inline Rational x_intercept(const Line& h) {
  if (h.is_horizontal()) throw Error(Errc::no_intercept, h.str());
  return -h.c() / h.a();
}

enum class Side { above, below };

inline const char* side_name(Side s) { return s == Side::above ? "above" : "below"; }

/// The part of a non-horizontal line on one side of the x-axis, anchored at
/// its intercept.  `run` and `intercept` describe the line as x = run*y' +
/// intercept in the working frame of its side, where y' = y above the axis
/// and y' = -y below it.
struct HalfLine {
  Line line;
  Point anchor;
  Side side = Side::above;
  Rational run;
  Rational intercept;

  HalfLine() = default;
  HalfLine(Line l, Side s) : line(std::move(l)), side(s) {
    if (line.is_horizontal()) throw Error(Errc::no_intercept, line.str());
    // normalized with a = 1:  x = -b*y - c
    intercept = -line.c();
    run = side == Side::above ? -line.b() : line.b();
    anchor = Point{intercept, Rational(0)};
  }

  /// x coordinate of the supporting line at working-frame height y.
  [[nodiscard]] Rational x_at(const Rational& y) const { return run * y + intercept; }
};

}  // namespace zone
