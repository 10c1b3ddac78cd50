#pragma once

#include <cmath>

#include "realmpc/common.hpp"

namespace realmpc {

// Numeric policy of a session: wire width of one scalar (l), and the magnitude
// window the dealer draws randomness from. Masks of moderate size keep the
// compute noise floor bounded, so the window is a knob the data owner sizes to
// the task; the defaults cover secrets up to a few thousands.
struct ShareDomain {
  int precision = 64;          // floating-point width of a share
  int l = 64;                  // bits on the wire per scalar
  double prg_low = 0x1.0p-5;   // 2^-5
  double prg_high = 0x1.0p15;  // 2^15

  void validate() const {
    if (!(prg_low > 0)) throw ConfigError("prg_low must be positive");
    if (!(prg_high > prg_low)) throw ConfigError("prg_high must exceed prg_low");
    if (l < precision) throw ConfigError("l must be at least the share precision");
  }

  // Threshold below which an opened masked value is treated as a masked zero.
  // Sits well above the rounding noise of a Beaver recombination (masks up to
  // prg_high, products up to prg_high^2) and well below any product of
  // in-range secrets with in-range masks.
  double open_zero_tol(int n) const { return n * prg_high * prg_high * 0x1.0p-44; }
};

}  // namespace realmpc
