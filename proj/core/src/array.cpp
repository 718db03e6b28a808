#include "drg/array.hpp"

#include <cctype>

namespace drg {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
};

Int parse_entry(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  if (cur.done()) throw ParseError("unexpected end of input, expected a number", start);
  if (cur.peek() == '-') throw ParseError("non-positive entry", start);
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
  if (cur.pos == start) throw ParseError("malformed syntax, expected a number", start);
  Int value(std::string(cur.text.substr(start, cur.pos - start)));
  if (value <= 0) throw ParseError("non-positive entry", start);
  return value;
}

std::vector<Int> parse_half(Cursor& cur, char terminator) {
  std::vector<Int> out;
  out.push_back(parse_entry(cur));
  for (;;) {
    cur.skip_ws();
    if (cur.done()) {
      if (terminator == '\0') return out;
      throw ParseError(std::string("malformed syntax, expected '") + terminator + "'", cur.pos);
    }
    char ch = cur.peek();
    if (ch == ',') {
      ++cur.pos;
      out.push_back(parse_entry(cur));
    } else if (ch == terminator) {
      ++cur.pos;
      return out;
    } else {
      throw ParseError(std::string("malformed syntax, unexpected '") + ch + "'", cur.pos);
    }
  }
}

}  // namespace

IntersectionArray parse_array(std::string_view text) {
  Cursor cur{text};
  cur.skip_ws();
  bool braced = !cur.done() && cur.peek() == '{';
  if (braced) ++cur.pos;
  IntersectionArray arr;
  arr.b = parse_half(cur, ';');
  std::size_t c_start = cur.pos;
  arr.c = parse_half(cur, braced ? '}' : '\0');
  cur.skip_ws();
  if (!cur.done()) throw ParseError("malformed syntax, trailing input", cur.pos);
  if (arr.b.size() != arr.c.size())
    throw ParseError("unequal lengths: " + std::to_string(arr.b.size()) + " b-entries vs " +
                         std::to_string(arr.c.size()) + " c-entries",
                     c_start);
  if (arr.c.front() != 1) throw ParseError("c_1 must equal 1", c_start);
  return arr;
}

std::string render_array(const IntersectionArray& arr) {
  std::string s = "{";
  for (std::size_t i = 0; i < arr.b.size(); ++i) {
    if (i) s += ',';
    s += arr.b[i].str();
  }
  s += ';';
  for (std::size_t i = 0; i < arr.c.size(); ++i) {
    if (i) s += ',';
    s += arr.c[i].str();
  }
  return s + "}";
}

bool DerivedParameters::k_dist_integral() const {
  for (const auto& ki : k_dist)
    if (!is_integer(ki) || ki <= 0) return false;
  return true;
}

DerivedParameters derive_parameters(const IntersectionArray& arr) {
  DerivedParameters d;
  d.array = arr;
  d.k = arr.k();
  std::size_t D = arr.diameter();

  d.a.resize(D + 1);
  for (std::size_t i = 0; i <= D; ++i) d.a[i] = d.k - arr.b_at(i) - arr.c_at(i);

  d.k_dist.resize(D + 1);
  d.k_dist[0] = 1;
  for (std::size_t i = 1; i <= D; ++i)
    d.k_dist[i] = d.k_dist[i - 1] * Rat(arr.b_at(i - 1)) / Rat(arr.c_at(i));

  d.n = 0;
  for (const auto& ki : d.k_dist) d.n += ki;
  return d;
}

namespace {

std::string join_ints(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  return s + ")";
}

std::string join_rats(const std::vector<Rat>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += to_canonical(v[i]);
  }
  return s + ")";
}

}  // namespace

std::vector<CheckResult> basic_feasibility(const DerivedParameters& d) {
  std::vector<CheckResult> rows;
  std::size_t D = d.diameter();

  // (a) a_i >= 0
  {
    std::map<std::string, std::string> w{{"a", join_ints(d.a)}};
    CheckStatus st = CheckStatus::Pass;
    std::string msg = "all a_i nonnegative";
    for (std::size_t i = 0; i <= D; ++i) {
      if (d.a[i] < 0) {
        st = CheckStatus::Fail;
        w["i"] = std::to_string(i);
        w["a_i"] = d.a[i].str();
        msg = "a_" + std::to_string(i) + " = " + d.a[i].str() + " is negative";
        break;
      }
    }
    rows.push_back(make_check("basic_a_nonnegative", st, std::move(w), std::move(msg)));
  }

  // (b) distance-class sizes are positive integers
  bool k_ok = true;
  {
    std::map<std::string, std::string> w{{"k_dist", join_rats(d.k_dist)}};
    CheckStatus st = CheckStatus::Pass;
    std::string msg = "all k_i positive integers";
    for (std::size_t i = 0; i <= D; ++i) {
      if (!is_integer(d.k_dist[i]) || d.k_dist[i] <= 0) {
        k_ok = false;
        st = CheckStatus::Fail;
        w["i"] = std::to_string(i);
        w["k_i"] = to_canonical(d.k_dist[i]);
        msg = "k_" + std::to_string(i) + " = " + to_canonical(d.k_dist[i]) + " is not a positive integer";
        break;
      }
    }
    rows.push_back(make_check("basic_k_integrality", st, std::move(w), std::move(msg)));
  }

  // (c) handshake parity: n*k even, n*k_i*a_i even.  Undefined unless (b) held.
  {
    if (!k_ok) {
      rows.push_back(make_check("basic_handshake", CheckStatus::NotApplicable, {},
                                "parity undefined: some k_i is not an integer"));
    } else {
      Int n = numerator(d.n);
      std::map<std::string, std::string> w{{"n", n.str()}};
      CheckStatus st = CheckStatus::Pass;
      std::string msg = "n*k and all n*k_i*a_i even";
      Int nk = n * d.k;
      if (nk % 2 != 0) {
        st = CheckStatus::Fail;
        w["n*k"] = nk.str();
        msg = "n*k = " + nk.str() + " is odd";
      } else {
        for (std::size_t i = 1; i <= D; ++i) {
          Int prod = n * numerator(d.k_dist[i]) * d.a[i];
          if (prod % 2 != 0) {
            st = CheckStatus::Fail;
            w["i"] = std::to_string(i);
            w["n*k_i*a_i"] = prod.str();
            msg = "n*k_" + std::to_string(i) + "*a_" + std::to_string(i) + " = " + prod.str() + " is odd";
            break;
          }
        }
      }
      rows.push_back(make_check("basic_handshake", st, std::move(w), std::move(msg)));
    }
  }

  // (d) monotonicity: c nondecreasing, b nonincreasing
  {
    std::map<std::string, std::string> w;
    CheckStatus st = CheckStatus::Pass;
    std::string msg = "c_i nondecreasing and b_i nonincreasing";
    for (std::size_t i = 0; i + 1 < d.array.c.size(); ++i) {
      if (d.array.c[i] > d.array.c[i + 1]) {
        st = CheckStatus::Fail;
        w["c_i"] = d.array.c[i].str();
        w["c_i+1"] = d.array.c[i + 1].str();
        w["i"] = std::to_string(i + 1);  // c vector is 1-based in math indexing
        msg = "c_" + std::to_string(i + 1) + " > c_" + std::to_string(i + 2);
        break;
      }
    }
    if (st == CheckStatus::Pass) {
      for (std::size_t i = 0; i + 1 < d.array.b.size(); ++i) {
        if (d.array.b[i] < d.array.b[i + 1]) {
          st = CheckStatus::Fail;
          w["b_i"] = d.array.b[i].str();
          w["b_i+1"] = d.array.b[i + 1].str();
          w["i"] = std::to_string(i);
          msg = "b_" + std::to_string(i) + " < b_" + std::to_string(i + 1);
          break;
        }
      }
    }
    rows.push_back(make_check("basic_monotonicity", st, std::move(w), std::move(msg)));
  }

  return rows;
}

}  // namespace drg
