#pragma once

// Intersection arrays {b_0,...,b_{D-1}; c_1,...,c_D} and the parameters
// derived from them.  Everything here is exact integer/rational arithmetic;
// "impossible" outcomes are check results, not exceptions.

#include "drg/check.hpp"
#include "drg/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace drg {

// Parse failure carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct IntersectionArray {
  std::vector<Int> b;  // b_0 .. b_{D-1}, all positive
  std::vector<Int> c;  // c_1 .. c_D, all positive, c_1 == 1

  std::size_t diameter() const { return b.size(); }
  const Int& k() const { return b.front(); }

  // b_i for 0 <= i <= D (b_D == 0) and c_i for 0 <= i <= D (c_0 == 0):
  // the closed forms used by every recurrence.
  Int b_at(std::size_t i) const { return i < b.size() ? b[i] : Int(0); }
  Int c_at(std::size_t i) const { return (i >= 1 && i <= c.size()) ? c[i - 1] : Int(0); }

  bool operator==(const IntersectionArray&) const = default;
};

// Text form: "b0,b1,...;c1,c2,...", with optional enclosing braces.
// Whitespace around tokens is ignored.  Rejects: malformed syntax, unequal
// halves, c_1 != 1, non-positive entries.
IntersectionArray parse_array(std::string_view text);

// Canonical text: braced, no whitespace, e.g. "{80,54,12;1,6,60}".
std::string render_array(const IntersectionArray& arr);

struct DerivedParameters {
  IntersectionArray array;
  Int k;                    // valency b_0
  std::vector<Int> a;       // a_0 .. a_D with a_i = k - b_i - c_i
  std::vector<Rat> k_dist;  // k_0 .. k_D from k_i c_i = k_{i-1} b_{i-1};
                            // rational so non-integral values stay reportable
  Rat n;                    // sum of the k_i

  std::size_t diameter() const { return array.diameter(); }
  bool k_dist_integral() const;
};

// Total: never throws; feasibility problems surface in basic_feasibility.
DerivedParameters derive_parameters(const IntersectionArray& arr);

// Sanity battery.  Emits exactly four rows, ids:
//   basic_a_nonnegative   every a_i >= 0
//   basic_k_integrality   every k_i a positive integer
//   basic_handshake       n*k even and n*k_i*a_i even for every i
//   basic_monotonicity    c_1 <= ... <= c_D and b_0 >= ... >= b_{D-1}
// The handshake row is NOT_APPLICABLE when integrality already failed.
std::vector<CheckResult> basic_feasibility(const DerivedParameters& d);

inline bool has_basic_failure(const std::vector<CheckResult>& rows) {
  for (const auto& r : rows)
    if (r.status == CheckStatus::Fail) return true;
  return false;
}

}  // namespace drg
