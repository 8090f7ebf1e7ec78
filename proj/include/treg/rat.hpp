#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <stdexcept>
#include <string>

namespace treg {

// Exact arithmetic everywhere: Int is an arbitrary-precision integer, Rat a
// rational kept in canonical form (reduced, positive denominator) by the
// backend.  Equality is structural.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return numerator(x); }
inline Int rat_den(const Rat& x) { return denominator(x); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// "7", "-3/2"; denominator 1 is never printed.
inline std::string to_string(const Rat& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) s += "/" + denominator(x).str();
  return s;
}

inline std::string to_string(const Int& x) { return x.str(); }

// Parses the same shape to_string emits.  Throws std::invalid_argument on
// malformed input or a zero denominator.
inline Rat parse_rat(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("parse_rat: bad rational '" + s + "'"); };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat();  // unreachable
}

inline Int pow_int(Int base, unsigned e) {
  Int out = 1;
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::invalid_argument("pow_rat: zero to negative power");
    return Rat(pow_int(denominator(base), unsigned(-e)), pow_int(numerator(base), unsigned(-e)));
  }
  return Rat(pow_int(numerator(base), unsigned(e)), pow_int(denominator(base), unsigned(e)));
}

}  // namespace treg
