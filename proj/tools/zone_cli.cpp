// zone: command-line front end for the zone library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zone/zone.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kQueryInArrangement = 3,
  kMismatch = 4,
  kInternal = 5,
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw zone::Error(zone::Errc::parse_error, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw zone::Error(zone::Errc::usage, "cannot write '" + path + "'");
  out << text;
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      sizes.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw zone::Error(zone::Errc::usage, "bad size '" + item + "' in --sizes");
    }
  }
  if (sizes.empty()) throw zone::Error(zone::Errc::usage, "--sizes is empty");
  return sizes;
}

std::string bench_text(const zone::BenchReport& report) {
  std::string out = "n trials sort_ms post_sort_ms max_traversed max_merge_events max_work work/n max_zone_edges\n";
  char buf[256];
  for (const auto& r : report.records) {
    std::snprintf(buf, sizeof buf, "%zu %zu %.4f %.4f %zu %zu %zu %.4f %zu\n", r.n, r.trials, r.sort_seconds * 1e3,
                  r.post_sort_seconds * 1e3, r.max_traversed, r.max_merge_events, r.max_work,
                  r.n ? static_cast<double>(r.max_work) / static_cast<double>(r.n) : 0.0, r.max_zone_edges);
    out += buf;
  }
  if (report.slope) {
    std::snprintf(buf, sizeof buf, "post_sort_loglog_slope %.4f\n", *report.slope);
    out += buf;
  } else {
    out += "post_sort_loglog_slope n/a\n";
  }
  return out;
}

std::string bench_json(const zone::BenchReport& report) {
  nlohmann::json j;
  j["records"] = nlohmann::json::array();
  for (const auto& r : report.records) {
    j["records"].push_back({{"n", r.n},
                            {"trials", r.trials},
                            {"sort_seconds", r.sort_seconds},
                            {"post_sort_seconds", r.post_sort_seconds},
                            {"max_traversed", r.max_traversed},
                            {"max_merge_events", r.max_merge_events},
                            {"max_work", r.max_work},
                            {"max_zone_edges", r.max_zone_edges}});
  }
  if (report.slope) j["slope"] = *report.slope;
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zone of a line in an arrangement of lines, in exact arithmetic"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "json";
  std::string viewport;
  std::string trace_side;
  std::string out_path;
  bool stitch = false;
  auto* build = app.add_subcommand("build", "compute the zone of the query line");
  build->add_option("--input", input, "instance file ('-' for stdin)")->required();
  build->add_option("--format", format, "json, summary or svg")
      ->check(CLI::IsMember({"json", "summary", "svg"}));
  build->add_option("--viewport", viewport, "x0,y0,x1,y1 for svg output");
  build->add_flag("--stitch", stitch, "also join upper and lower cells into faces");
  build->add_option("--trace", trace_side, "print scan and merge steps for one side instead")
      ->check(CLI::IsMember({"above", "below"}));
  build->add_option("--out", out_path, "output file (default stdout)");

  bool corrupt = false;
  auto* check = app.add_subcommand("check", "compare the zone against the brute-force oracle");
  check->add_option("--input", input, "instance file ('-' for stdin)")->required();
  check->add_flag("--corrupt", corrupt, "perturb the computed zone first (self-test)")->group("");

  std::uint64_t seed = 1;
  std::size_t n = 10;
  std::int64_t bound = 9;
  std::string degeneracy = "none";
  auto* gen = app.add_subcommand("gen", "write a random instance");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--n", n, "number of lines");
  gen->add_option("--bound", bound, "coefficients lie in [-bound, bound]")->check(CLI::PositiveNumber);
  gen->add_option("--degeneracy", degeneracy, "none, concurrent, horizontal or mixed")
      ->check(CLI::IsMember({"none", "concurrent", "horizontal", "mixed"}));
  gen->add_option("--out", out_path, "output file (default stdout)");

  std::string sizes = "4096,8192,16384,32768,65536,131072";
  std::size_t trials = 5;
  std::int64_t bench_bound = 1000;
  std::string bench_format = "text";
  auto* bench = app.add_subcommand("bench", "time the sort and post-sort phases");
  bench->add_option("--sizes", sizes, "comma-separated increasing line counts");
  bench->add_option("--trials", trials, "instances per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "random seed");
  bench->add_option("--bound", bench_bound, "coefficient bound")->check(CLI::PositiveNumber);
  bench->add_option("--format", bench_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) {
      const zone::Instance inst = zone::parse_instance(read_input(input));
      if (!trace_side.empty()) {
        const auto canon = zone::canonicalize(inst.query, inst.lines);
        const auto side = trace_side == "above" ? zone::Side::above : zone::Side::below;
        std::string text;
        for (const auto& frame : zone::trace(canon, side)) text += frame + "\n";
        write_output(out_path, text);
        return kOk;
      }
      std::optional<zone::Viewport> vp;
      if (!viewport.empty()) vp = zone::parse_viewport(viewport);
      const zone::Zone z = zone::zone(inst.query, inst.lines, zone::ZoneOptions{stitch});
      if (format == "json") write_output(out_path, zone::dump_json(z));
      else if (format == "summary") write_output(out_path, zone::summary(z));
      else write_output(out_path, zone::emit_svg(inst, z, vp));
      return kOk;
    }
    if (*check) {
      const zone::Instance inst = zone::parse_instance(read_input(input));
      const auto result = zone::check_instance(inst, corrupt);
      std::cout << result.report;
      return result.equal ? kOk : kMismatch;
    }
    if (*gen) {
      const auto mode = zone::parse_degeneracy(degeneracy);
      const auto inst = zone::generate(seed, n, bound, mode);
      write_output(out_path, zone::emit_generated(inst, seed, n, bound, mode));
      return kOk;
    }
    if (*bench) {
      zone::BenchOptions options;
      options.sizes = parse_sizes(sizes);
      options.trials = trials;
      options.seed = seed;
      options.bound = bench_bound;
      const auto report = zone::bench(options);
      std::cout << (bench_format == "json" ? bench_json(report) : bench_text(report));
      return kOk;
    }
  } catch (const zone::Error& e) {
    std::cerr << "zone: " << e.what() << "\n";
    switch (e.code()) {
      case zone::Errc::parse_error: return kParse;
      case zone::Errc::query_in_arrangement: return kQueryInArrangement;
      case zone::Errc::usage: return kUsage;
      default: return kInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "zone: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
