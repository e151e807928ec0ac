#pragma once

// Timing of the sort phase and the post-sort phase on random instances, with
// a least-squares fit of log(post-sort time) against log(n).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zone/engine.hpp"
#include "zone/generate.hpp"

namespace zone {

struct BenchRecord {
  std::size_t n = 0;
  std::size_t trials = 0;
  double sort_seconds = 0;       // median over trials
  double post_sort_seconds = 0;  // median over trials
  std::size_t max_traversed = 0;     // max over trials and sides, scan edges of both forests
  std::size_t max_merge_events = 0;  // max over trials and sides
  std::size_t max_work = 0;          // max of traversed + merge events on one side
  std::size_t max_zone_edges = 0;    // max over trials, both sides
};

struct BenchReport {
  std::vector<BenchRecord> records;
  std::optional<double> slope;
};

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  std::int64_t bound = 1000;
};

/// Least-squares slope of log y against log x; nullopt with fewer than two
/// distinct sizes.
inline std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += std::log(x[k]);
    my += std::log(y[k]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double dx = std::log(x[k]) - mx;
    sxy += dx * (std::log(y[k]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

namespace bench_detail {

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size();
  return m % 2 ? v[m / 2] : (v[m / 2 - 1] + v[m / 2]) / 2;
}

}  // namespace bench_detail

inline BenchReport bench(const BenchOptions& options) {
  using clock = std::chrono::steady_clock;
  BenchReport report;
  std::vector<double> xs, ys;
  for (std::size_t size_index = 0; size_index < options.sizes.size(); ++size_index) {
    const std::size_t n = options.sizes[size_index];
    if (size_index > 0 && n <= options.sizes[size_index - 1]) {
      throw Error(Errc::usage, "bench sizes must be strictly increasing");
    }
    BenchRecord rec;
    rec.n = n;
    rec.trials = options.trials;
    std::vector<double> sort_t, post_t;
    for (std::size_t t = 0; t < options.trials; ++t) {
      const Instance inst = generate(options.seed + 1000003 * size_index + t, n, options.bound, Degeneracy::none);
      const CanonicalInstance canon = canonicalize(inst.query, inst.lines);
      NullObserver observer;
      double sort_s = 0, post_s = 0;
      std::size_t zone_edges = 0;
      for (Side side : {Side::above, Side::below}) {
        const auto t0 = clock::now();
        auto order = sort_and_orient(canon, side);
        const auto t1 = clock::now();
        SideResult r = upper_zone_sorted(std::move(order), side, observer);
        for (const auto& piece : r.pieces) zone_edges += edge_count(to_cell(piece));
        const auto t2 = clock::now();
        sort_s += std::chrono::duration<double>(t1 - t0).count();
        post_s += std::chrono::duration<double>(t2 - t1).count();
        const std::size_t traversed = r.forward.traversed_edges + r.backward.traversed_edges;
        rec.max_traversed = std::max(rec.max_traversed, traversed);
        rec.max_merge_events = std::max(rec.max_merge_events, r.merge_events);
        rec.max_work = std::max(rec.max_work, traversed + r.merge_events);
      }
      rec.max_zone_edges = std::max(rec.max_zone_edges, zone_edges);
      sort_t.push_back(sort_s);
      post_t.push_back(post_s);
    }
    if (options.trials > 0) {
      rec.sort_seconds = bench_detail::median(sort_t);
      rec.post_sort_seconds = bench_detail::median(post_t);
      xs.push_back(static_cast<double>(n));
      ys.push_back(rec.post_sort_seconds);
    }
    report.records.push_back(rec);
  }
  report.slope = loglog_slope(xs, ys);
  return report;
}

}  // namespace zone
