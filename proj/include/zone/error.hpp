#pragma once

#include <stdexcept>
#include <string>

namespace zone {

enum class Errc {
  coincident_lines,
  query_in_arrangement,
  no_intercept,
  empty_cell,
  parse_error,
  invariant_violation,
  usage,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::coincident_lines: return "CoincidentLines";
    case Errc::query_in_arrangement: return "QueryInArrangement";
    case Errc::no_intercept: return "NoIntercept";
    case Errc::empty_cell: return "EmptyCell";
    case Errc::parse_error: return "ParseError";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::usage: return "UsageError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zone
