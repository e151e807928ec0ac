#pragma once

// Step-by-step text replay of the chain scans and merges on one side.

#include <span>
#include <string>
#include <vector>

#include "zone/engine.hpp"

namespace zone {

/// "l<k>" for the k-th input line (1-based); lines without a source index
/// are named by their sorted position instead.
inline std::string trace_line_name(std::span<const HalfLine> order, std::size_t pos) {
  const int id = order[pos].line.source_id();
  return id >= 0 ? "l" + std::to_string(id + 1) : "#" + std::to_string(pos + 1);
}

class TraceObserver {
 public:
  explicit TraceObserver(std::span<const HalfLine> order) : order_(order) {}

  void scan_step(ForestKind kind, std::size_t inserted, const Chain& frozen,
                 const std::optional<Point>& hit, std::size_t walked) {
    std::string f = "[" + std::string(kind_name(kind)) + " step " + std::to_string(++steps_[index(kind)]) +
                    "] insert " + line_name(inserted) + " at " + point(order_[inserted].anchor) + ": walked " +
                    std::to_string(walked) + (walked == 1 ? " edge, " : " edges, ");
    f += hit ? "first hit " + point(*hit) : std::string("no hit");
    f += "; froze " + chain_name(kind, frozen.owner) + " = " + chain(frozen);
    frames_.push_back(std::move(f));
  }

  void scan_final(ForestKind kind, const Chain& last) {
    frames_.push_back("[" + std::string(kind_name(kind)) + " final] " + chain_name(kind, last.owner) + " = " +
                      chain(last));
  }

  void merge_step(const MergeStep& step) {
    std::string f = "[merge C_" + std::to_string(step.cell) + "] ";
    f += step.event_y ? "event at y=" + num(*step.event_y) + " (" + step.event_chain + ")" : std::string("start at y=0");
    f += step.crossing ? ": chains meet at q=" + point(*step.q) : ": no crossing in this slab";
    frames_.push_back(std::move(f));
  }

  [[nodiscard]] const std::vector<std::string>& frames() const { return frames_; }

 private:
  static const char* kind_name(ForestKind k) { return k == ForestKind::forward ? "forward" : "backward"; }
  static std::size_t index(ForestKind k) { return k == ForestKind::forward ? 0 : 1; }

  static std::string num(const Rational& r) { return r.is_integer() ? r.numerator_str() : r.str(); }
  static std::string point(const Point& p) { return "(" + num(p.x) + ", " + num(p.y) + ")"; }

  std::string line_name(std::size_t pos) const { return trace_line_name(order_, pos); }
  static std::string chain_name(ForestKind k, std::size_t owner) {
    return std::string(k == ForestKind::forward ? "alpha_" : "beta_") + std::to_string(owner + 1);
  }
  std::string chain(const Chain& c) const {
    std::string s;
    for (std::size_t k = 0; k < c.vertices.size(); ++k) s += (k ? " -> " : "") + point(c.vertices[k]);
    if (c.unbounded) s += " -> ray along " + line_name(c.edge_lines.back());
    return s;
  }

  std::span<const HalfLine> order_;
  std::size_t steps_[2] = {0, 0};
  std::vector<std::string> frames_;
};

inline constexpr std::size_t kTraceCap = 32;

/// Frames for the forward scan, the backward scan and every merge on `side`.
inline std::vector<std::string> trace(const CanonicalInstance& inst, Side side, std::size_t cap = kTraceCap) {
  if (inst.lines.size() > cap) {
    throw Error(Errc::usage, "trace shows at most " + std::to_string(cap) + " lines, instance has " +
                                 std::to_string(inst.lines.size()) + "; use a smaller instance");
  }
  const auto order = sort_and_orient(inst, side);
  TraceObserver observer(order);
  upper_zone_sorted(order, side, observer);
  std::vector<std::string> frames;
  frames.push_back(std::string("# side ") + side_name(side) + ", n=" + std::to_string(order.size()) +
                   (side == Side::above ? ", canonical coordinates"
                                        : ", canonical coordinates with y negated"));
  for (std::size_t k = 0; k < order.size(); ++k) {
    frames.push_back("# position " + std::to_string(k + 1) + ": " + trace_line_name(order, k) + " " +
                     order[k].line.str());
  }
  frames.insert(frames.end(), observer.frames().begin(), observer.frames().end());
  return frames;
}

}  // namespace zone
