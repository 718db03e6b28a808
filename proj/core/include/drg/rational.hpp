#pragma once

// Exact arbitrary-precision arithmetic used by every check path.
// Int is an arbitrary-precision integer, Rat an always-canonical rational
// (gcd-reduced, positive denominator).  No floating point is ever used in
// a feasibility decision; these types are the only numeric currency.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace drg {

namespace mp = boost::multiprecision;

// et_off: plain value semantics, no expression templates.  Slightly slower,
// but `auto`, ternaries and std algorithms behave like they do for built-ins.
using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rat = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// floor/ceil with mathematical (not truncating) semantics.
inline Int floor_rat(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int t = n / d;
  if (n < 0 && n % d != 0) --t;
  return t;
}

inline Int ceil_rat(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int t = n / d;
  if (n > 0 && n % d != 0) ++t;
  return t;
}

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Canonical rendering: "p" when integral, "p/q" otherwise, sign on the
// numerator.  This is the only rendering reports and witnesses use.
inline std::string to_canonical(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  std::string s = n.str();
  if (d != 1) {
    s += '/';
    s += d.str();
  }
  return s;
}

inline std::string to_canonical(const Int& n) { return n.str(); }

// Strict parser for the canonical form.  Accepts optional leading '-',
// digits, and an optional "/digits" with a positive denominator.
inline Rat rat_from_string(std::string_view text) {
  auto bad = [&] { throw std::invalid_argument("not a canonical rational: '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  std::size_t i = 0;
  if (text[0] == '-') i = 1;
  std::size_t num_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == num_begin) bad();
  Int n(std::string(text.substr(0, i)));
  Int d(1);
  if (i < text.size()) {
    if (text[i] != '/') bad();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == den_begin || i != text.size()) bad();
    d = Int(std::string(text.substr(den_begin)));
    if (d == 0) bad();
  }
  return Rat(n, d);
}

}  // namespace drg
