#pragma once

// Engine-versus-oracle comparison used by `zone check`.

#include <string>

#include "zone/engine.hpp"
#include "zone/io.hpp"
#include "zone/oracle.hpp"

namespace zone {

struct CheckResult {
  bool equal = false;
  std::string report;
};

/// Moves one boundary vertex of the zone (or flips a flag when there is no
/// vertex) so that a correct checker must report a mismatch.
inline void corrupt(Zone& z) {
  for (auto* cells : {&z.upper, &z.lower}) {
    for (auto& c : *cells) {
      for (auto& item : c.boundary) {
        if (auto* p = std::get_if<Point>(&item)) {
          p->y += Rational(1, 7);
          return;
        }
      }
    }
  }
  z.upper.front().bounded = !z.upper.front().bounded;
}

inline CheckResult check_instance(const Instance& inst, bool corrupt_output = false) {
  Zone fast = zone(inst.query, inst.lines);
  if (corrupt_output) corrupt(fast);
  const Zone slow = oracle_zone(inst.query, inst.lines);
  const DiffReport d = diff(slow, fast);
  CheckResult r;
  r.equal = d.equal;
  if (d.equal) {
    r.report = "ok: zone matches oracle (n=" + std::to_string(fast.n) + ", " +
               std::to_string(fast.upper.size() + fast.lower.size()) + " cells)\n";
  } else {
    r.report = "mismatch: " + d.first_difference + "\n";
  }
  return r;
}

}  // namespace zone
