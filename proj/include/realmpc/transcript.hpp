#pragma once

#include <map>
#include <string>
#include <vector>

#include "realmpc/common.hpp"

namespace realmpc {

// One accepted-leakage occurrence. party == 0 means "visible to all parties".
struct ExposureEvent {
  Party party = 0;
  std::string kind;      // mss-zero, equality, eigen-ratio, ...
  std::string protocol;  // top-level protocol that was running
};

struct CostTally {
  long long rounds = 0;
  long long scalars = 0;  // l-bit units
  long long bits = 0;     // raw bits (sign exchanges), 1/l of a unit each

  CostTally& operator+=(const CostTally& o) {
    rounds += o.rounds;
    scalars += o.scalars;
    bits += o.bits;
    return *this;
  }
  CostTally operator-(const CostTally& o) const {
    return {rounds - o.rounds, scalars - o.scalars, bits - o.bits};
  }
  bool operator==(const CostTally& o) const = default;
};

// Per-session ledger: online totals, offline (dealer->party) volume, a
// per-protocol breakdown keyed by the top-level scope name, and the exposure
// log. Totals always equal the sum of breakdown entries plus unscoped traffic.
struct Transcript {
  CostTally online;
  long long offline_scalars = 0;
  struct Entry {
    CostTally cost;
    long long count = 0;  // protocol invocations under this name
  };
  std::map<std::string, Entry> breakdown;
  std::vector<ExposureEvent> exposures;

  double online_l_units(int l) const {
    return static_cast<double>(online.scalars) + static_cast<double>(online.bits) / l;
  }
};

}  // namespace realmpc
