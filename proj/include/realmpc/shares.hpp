#pragma once

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "realmpc/common.hpp"
#include "realmpc/domain.hpp"
#include "realmpc/rng.hpp"

namespace realmpc {

// Owner-side work meters. Conventions: prg counts every scalar drawn from the
// owner's generator; add_sub counts the closing subtraction of each additive
// split plus matrix dot-product accumulations; mul counts substantive products
// (triple products, share products, matrix entries). Constant folds of bundle
// material into a single dealt value are not metered.
struct OwnerCounters {
  long long prg = 0;
  long long add_sub = 0;
  long long mul = 0;

  OwnerCounters& operator+=(const OwnerCounters& o) {
    prg += o.prg;
    add_sub += o.add_sub;
    mul += o.mul;
    return *this;
  }
};

struct AdditiveShare {
  Party party = 0;
  double value = 0.0;
};

struct MultiplicativeShare {
  Party party = 0;
  double value = 0.0;
};

// One share per party of a group, plain values indexed like the group vector.
struct ShareVec {
  std::vector<Party> parties;
  std::vector<double> values;

  size_t size() const { return values.size(); }
};

inline std::vector<Party> full_group(int n) {
  std::vector<Party> g(n);
  for (int i = 0; i < n; ++i) g[i] = i + 1;
  return g;
}

// First n-1 shares drawn from the dealer window, last one closes the sum.
inline std::vector<double> split_additive_values(double secret, int n, const ShareDomain& dom,
                                                 Rng& rng, OwnerCounters* ctr = nullptr) {
  if (n < 2) throw ConfigError("additive split needs at least 2 parties");
  std::vector<double> vals(n);
  double acc = 0.0;
  for (int i = 0; i < n - 1; ++i) {
    vals[i] = rng.uniform_signed(dom.prg_low, dom.prg_high);
    acc += vals[i];
  }
  vals[n - 1] = secret - acc;
  if (ctr) {
    ctr->prg += n - 1;
    ctr->add_sub += n - 1;
  }
  return vals;
}

inline std::vector<AdditiveShare> split_additive(double secret, int n, const ShareDomain& dom,
                                                 Rng& rng, OwnerCounters* ctr = nullptr) {
  auto vals = split_additive_values(secret, n, dom, rng, ctr);
  std::vector<AdditiveShare> out(n);
  for (int i = 0; i < n; ++i) out[i] = {i + 1, vals[i]};
  return out;
}

// Multiplicative split of a nonzero secret: draw n-1 nonzero shares, close
// with a division. A zero secret cannot be hidden this way; callers that can
// legitimately meet one pass allow_zero and record the exposure themselves
// (the zero lands in party 1's share).
inline std::vector<MultiplicativeShare> split_multiplicative(double secret, int n,
                                                             const ShareDomain& dom, Rng& rng,
                                                             bool allow_zero = false,
                                                             OwnerCounters* ctr = nullptr) {
  if (n < 2) throw ConfigError("multiplicative split needs at least 2 parties");
  if (secret == 0.0 && !allow_zero)
    throw DomainError("MSS cannot hide zero: the zero secret would be exposed");
  std::vector<MultiplicativeShare> out(n);
  if (secret == 0.0) {
    out[0] = {1, 0.0};
    for (int i = 1; i < n; ++i) out[i] = {i + 1, rng.uniform_signed(dom.prg_low, dom.prg_high)};
    if (ctr) ctr->prg += n - 1;
    return out;
  }
  double prod = 1.0;
  for (int i = 0; i < n - 1; ++i) {
    double v = rng.uniform_signed(dom.prg_low, dom.prg_high);
    out[i] = {i + 1, v};
    prod *= v;
  }
  out[n - 1] = {n, secret / prod};
  if (ctr) {
    ctr->prg += n - 1;
    ctr->mul += n - 1;
  }
  return out;
}

namespace detail {
template <typename S>
inline void check_one_per_party(const std::vector<S>& shares) {
  if (shares.empty()) throw ProtocolAbort("reconstruction needs shares");
  std::vector<Party> seen;
  for (const auto& s : shares) seen.push_back(s.party);
  std::sort(seen.begin(), seen.end());
  for (size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != static_cast<Party>(i + 1))
      throw ProtocolAbort("reconstruction needs exactly one share per party index");
  }
}
}  // namespace detail

inline double reconstruct_additive(const std::vector<AdditiveShare>& shares) {
  detail::check_one_per_party(shares);
  double acc = 0.0;
  for (const auto& s : shares) acc += s.value;
  return acc;
}

inline double reconstruct_multiplicative(const std::vector<MultiplicativeShare>& shares) {
  detail::check_one_per_party(shares);
  double acc = 1.0;
  for (const auto& s : shares) acc *= s.value;
  return acc;
}

inline double reconstruct(const ShareVec& sv) {
  double acc = 0.0;
  for (double v : sv.values) acc += v;
  return acc;
}

inline double reconstruct_product(const ShareVec& sv) {
  double acc = 1.0;
  for (double v : sv.values) acc *= v;
  return acc;
}

// ---------------------------------------------------------------------------
// Share persistence: one record per line, bit-exact round trip.
//   session=<id> party=<p> role=<tag> index=<k> value=<17 significant digits>

struct ShareRecord {
  std::string session;
  Party party = 0;
  std::string role;
  long long index = 0;
  double value = 0.0;
};

inline void write_share_records(std::ostream& os, const std::vector<ShareRecord>& recs) {
  for (const auto& r : recs) {
    os << "session=" << r.session << " party=" << r.party << " role=" << r.role
       << " index=" << r.index << " value=" << fmt17(r.value) << "\n";
  }
}

inline std::vector<ShareRecord> read_share_records(std::istream& is) {
  std::vector<ShareRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    ShareRecord r;
    size_t pos = 0;
    int fields = 0;
    while (pos < line.size()) {
      size_t sp = line.find(' ', pos);
      std::string tok = line.substr(pos, sp == std::string::npos ? std::string::npos : sp - pos);
      pos = sp == std::string::npos ? line.size() : sp + 1;
      size_t eq = tok.find('=');
      if (eq == std::string::npos)
        throw ParseError("share record line " + std::to_string(lineno) + ": bad token " + tok);
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "session") r.session = val;
      else if (key == "party") r.party = static_cast<Party>(parse_int(val));
      else if (key == "role") r.role = val;
      else if (key == "index") r.index = parse_int(val);
      else if (key == "value") r.value = parse_double(val);
      else throw ParseError("share record line " + std::to_string(lineno) + ": unknown key " + key);
      ++fields;
    }
    if (fields != 5)
      throw ParseError("share record line " + std::to_string(lineno) + ": expected 5 fields");
    out.push_back(r);
  }
  return out;
}

}  // namespace realmpc
