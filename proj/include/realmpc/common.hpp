#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace realmpc {

// Error taxonomy. CLI maps these to exit codes: usage errors are caught by the
// argument parser, ParseError -> 2, everything protocol-side -> 3.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ProtocolAbort : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PlanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Thrown when a masked public value turns out unusable (singular mask,
// 1+xu ~ 0). Callers retry with fresh randomness up to a small cap.
struct RetryWithFreshRandomness : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Party = int;  // 1-based

// 17 significant digits round-trip IEEE754 doubles exactly.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline double parse_double(const std::string& s) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("trailing characters in number: " + s);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not a number: " + s);
  }
}

inline long long parse_int(const std::string& s) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw ParseError("trailing characters in integer: " + s);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not an integer: " + s);
  }
}

inline int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace realmpc
