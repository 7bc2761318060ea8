#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>

namespace ftqft {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Representative of q in [0,1).  Cochain values live in Q/Z; every stored
// value is reduced through this.
inline Rat mod1(const Rat& q) {
  Int n = numerator(q), d = denominator(q);  // d > 0 by cpp_rational invariant
  Int r = n % d;
  if (r < 0) r += d;
  return Rat(r, d);
}

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// Multiplicative order of the rational phase q in Q/Z, i.e. the denominator
// of the reduced representative.
inline Int phase_order(const Rat& q) { return denominator(mod1(q)); }

inline std::string rat_str(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

inline long to_long(const Int& v) { return static_cast<long>(v); }

}  // namespace ftqft
