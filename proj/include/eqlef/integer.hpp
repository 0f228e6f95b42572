#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "eqlef/errors.hpp"

namespace eqlef {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

inline Integer iabs(const Integer &a) { return a < 0 ? Integer(-a) : a; }

inline Integer igcd(const Integer &a, const Integer &b) {
  return boost::multiprecision::gcd(iabs(a), iabs(b));
}

inline Integer ilcm(const Integer &a, const Integer &b) {
  if (a == 0 || b == 0) return 0;
  return iabs(a / igcd(a, b) * b);
}

/// Floor division: the quotient rounds toward negative infinity.
inline Integer floor_div(const Integer &a, const Integer &b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Residue in [0, |m|).
inline Integer floor_mod(const Integer &a, const Integer &m) {
  Integer r = a % m;
  if (r < 0) r += iabs(m);
  return r;
}

/// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
struct Bezout {
  Integer g, s, t;
};

inline Bezout ext_gcd(const Integer &a, const Integer &b) {
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0};
}

inline std::string to_string(const Integer &a) { return a.str(); }

inline Integer parse_integer(const std::string &text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw ParseError("malformed integer literal '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') throw ParseError("malformed integer literal '" + text + "'");
  Integer v(text.substr(i));
  return text[0] == '-' ? Integer(-v) : v;
}

/// Lexicographic comparison of integer vectors (shorter prefix first).
inline std::strong_ordering compare_vectors(const IntVector &a, const IntVector &b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

inline bool is_zero_vector(const IntVector &v) {
  for (const auto &x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace eqlef
