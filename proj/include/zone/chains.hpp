#pragma once

// Graham's-scan style decomposition of the forward and backward forests into
// y-monotone convex chains, and the upward sweep that intersects a rightward
// chain with a leftward one.
//
// Everything here runs in the working frame of one side of the query line
// (see HalfLine): the half-lines rise from the x-axis into y > 0.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "zone/canonical.hpp"
#include "zone/geometry.hpp"

namespace zone {

enum class ForestKind { forward, backward };
enum class ChainDirection { rightward, leftward };

/// One chain of a forest decomposition.  `owner` is the position in the
/// sorted half-line order of the line whose intercept is the chain's lower
/// endpoint.  Edge k runs from vertices[k] to vertices[k+1]; when `unbounded`
/// is set the last edge is a ray rising along edge_lines.back().
struct Chain {
  std::size_t owner = 0;
  ChainDirection direction = ChainDirection::rightward;
  std::vector<Point> vertices;
  std::vector<std::size_t> edge_lines;
  bool unbounded = false;

  [[nodiscard]] std::size_t edge_count() const { return edge_lines.size(); }
};

struct Forest {
  ForestKind kind = ForestKind::forward;
  std::vector<Chain> chains;
  std::size_t traversed_edges = 0;

  [[nodiscard]] std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& c : chains) total += c.edge_count();
    return total;
  }
};

/// One probe of the merge sweep: the current edge pair was tested over the
/// slab that ends at the next vertex event (or at infinity).
struct MergeStep {
  std::size_t cell = 0;
  std::optional<Rational> event_y;  // nullopt for the initial test on the axis
  const char* event_chain = "start";
  bool crossing = false;
  std::optional<Point> q;
};

struct NullObserver {
  void scan_step(ForestKind, std::size_t /*inserted*/, const Chain& /*frozen*/,
                 const std::optional<Point>& /*hit*/, std::size_t /*walked*/) {}
  void scan_final(ForestKind, const Chain&) {}
  void merge_step(const MergeStep&) {}
};

/// Half-lines of `side`, ordered by intercept; equal intercepts put the
/// half-line that is further left just off the axis first.
inline std::vector<HalfLine> sort_and_orient(std::span<const Line> lines, Side side) {
  std::vector<HalfLine> order;
  order.reserve(lines.size());
  for (const auto& l : lines) order.emplace_back(l, side);
  std::sort(order.begin(), order.end(), [](const HalfLine& l, const HalfLine& r) {
    if (int c = compare(l.intercept, r.intercept); c != 0) return c < 0;
    return l.run < r.run;
  });
  return order;
}

inline std::vector<HalfLine> sort_and_orient(const CanonicalInstance& inst, Side side) {
  return sort_and_orient(std::span<const Line>(inst.lines), side);
}

template <class Observer>
Forest build_chains(std::span<const HalfLine> order, ForestKind kind, Observer& observer) {
  const std::size_t n = order.size();
  Forest forest;
  forest.kind = kind;
  forest.chains.resize(n);
  if (n == 0) return forest;

  // The backward forest is the forward forest of the mirrored (x -> -x),
  // reversed order; `pos` maps scan position back to the sorted order.
  const bool backward = kind == ForestKind::backward;
  auto pos = [&](std::size_t k) { return backward ? n - 1 - k : k; };
  std::vector<Rational> run(n);
  std::vector<Rational> icpt(n);
  for (std::size_t k = 0; k < n; ++k) {
    const HalfLine& h = order[pos(k)];
    run[k] = backward ? -h.run : h.run;
    icpt[k] = backward ? -h.intercept : h.intercept;
  }
  auto crossing = [&](std::size_t k, std::size_t i) {
    Rational y = (icpt[i] - icpt[k]) / (run[k] - run[i]);
    Rational x = run[k] * y + icpt[k];
    return Point{std::move(x), std::move(y)};
  };
  auto unmirror = [&](Point p) {
    if (backward) p.x.negate();
    return p;
  };
  auto make_chain = [&](std::size_t owner, std::vector<Point>& verts,
                        std::vector<std::size_t>& lines, bool unbounded) {
    Chain c;
    c.owner = pos(owner);
    c.direction = backward ? ChainDirection::leftward : ChainDirection::rightward;
    c.unbounded = unbounded;
    c.vertices.reserve(verts.size());
    for (auto& v : verts) c.vertices.push_back(unmirror(std::move(v)));
    c.edge_lines.reserve(lines.size());
    for (auto l : lines) c.edge_lines.push_back(pos(l));
    verts.clear();
    lines.clear();
    return c;
  };

  // The live chain is a stack of edges; back() is the lowest edge, the one
  // starting at the most recent intercept, and front() is the topmost ray.
  struct LiveEdge {
    std::size_t line;
    Point bottom;
  };
  std::vector<LiveEdge> live;
  live.reserve(n);
  live.push_back({0, Point{icpt[0], Rational(0)}});

  std::vector<Point> verts;
  std::vector<std::size_t> lines;
  for (std::size_t i = 1; i < n; ++i) {
    verts.push_back(live.back().bottom);
    std::optional<Point> hit;
    bool unbounded = false;
    std::size_t walked = 0;
    for (;;) {
      ++walked;
      LiveEdge& e = live.back();
      lines.push_back(e.line);
      if (live.size() > 1) {
        const Point& top = live[live.size() - 2].bottom;
        // sign of (top.x - x of line i at top.y)
        const int side = compare(top.x - icpt[i], run[i] * top.y);
        if (side < 0) {
          verts.push_back(top);
          live.pop_back();
          continue;
        }
        if (side == 0) {
          hit = top;
          verts.push_back(top);
          live.pop_back();
          break;
        }
        Point q = crossing(e.line, i);
        verts.push_back(q);
        hit = q;
        e.bottom = std::move(q);
        break;
      }
      if (run[e.line] > run[i]) {
        Point q = crossing(e.line, i);
        verts.push_back(q);
        hit = q;
        e.bottom = std::move(q);
      } else {
        unbounded = true;
        live.pop_back();
      }
      break;
    }
    live.push_back({i, Point{icpt[i], Rational(0)}});
    forest.traversed_edges += walked;
    Chain frozen = make_chain(i - 1, verts, lines, unbounded);
    observer.scan_step(kind, pos(i), frozen, hit ? std::optional<Point>(unmirror(*hit)) : std::nullopt,
                       walked);
    forest.chains[pos(i - 1)] = std::move(frozen);
  }

  for (auto it = live.rbegin(); it != live.rend(); ++it) {
    verts.push_back(it->bottom);
    lines.push_back(it->line);
  }
  Chain last = make_chain(n - 1, verts, lines, true);
  observer.scan_final(kind, last);
  forest.chains[pos(n - 1)] = std::move(last);
  return forest;
}

inline Forest build_chains(std::span<const HalfLine> order, ForestKind kind) {
  NullObserver observer;
  return build_chains(order, kind, observer);
}

struct MergeResult {
  std::optional<Point> q;
  std::size_t events = 0;
};

/// Lowest point where the rightward chain `left` meets the leftward chain
/// `right`, found by sweeping a horizontal line upward through the vertex
/// events of both chains.  The common lower endpoint of two chains that start
/// at the same intercept is not reported.
template <class Observer>
MergeResult chain_intersection(std::span<const HalfLine> order, const Chain& left,
                               const Chain& right, Observer& observer, std::size_t cell = 0) {
  MergeResult result;
  std::size_t ia = 0;
  std::size_t ib = 0;
  MergeStep step;
  step.cell = cell;
  for (;;) {
    if (ia >= left.edge_count() || ib >= right.edge_count()) {
      throw Error(Errc::invariant_violation,
                  "bounded chain ended before meeting its partner (cell " + std::to_string(cell) + ")");
    }
    const HalfLine& la = order[left.edge_lines[ia]];
    const HalfLine& lb = order[right.edge_lines[ib]];
    const Rational* top_a = ia + 1 < left.vertices.size() ? &left.vertices[ia + 1].y : nullptr;
    const Rational* top_b = ib + 1 < right.vertices.size() ? &right.vertices[ib + 1].y : nullptr;
    const Rational* hi = top_a;
    if (!hi || (top_b && *top_b < *hi)) hi = top_b;

    const bool crossing =
        hi ? compare(lb.x_at(*hi), la.x_at(*hi)) <= 0 : compare(lb.run, la.run) < 0;
    if (crossing) {
      Rational y = (lb.intercept - la.intercept) / (la.run - lb.run);
      Rational x = la.x_at(y);
      result.q = Point{std::move(x), std::move(y)};
      step.crossing = true;
      step.q = result.q;
      observer.merge_step(step);
      return result;
    }
    observer.merge_step(step);
    if (!hi) return result;  // two rays that never meet

    step.event_y = *hi;
    if (top_a && top_b && *top_a == *top_b) {
      ++ia;
      ++ib;
      result.events += 2;
      step.event_chain = "both";
    } else if (top_a && *top_a == *hi) {
      ++ia;
      ++result.events;
      step.event_chain = "alpha";
    } else {
      ++ib;
      ++result.events;
      step.event_chain = "beta";
    }
  }
}

inline MergeResult chain_intersection(std::span<const HalfLine> order, const Chain& left,
                                      const Chain& right) {
  NullObserver observer;
  return chain_intersection(order, left, right, observer);
}

}  // namespace zone
