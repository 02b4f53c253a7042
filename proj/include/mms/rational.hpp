#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace mms {

/// Exact arbitrary-precision integer. No floating point is used anywhere
/// in the counting or verification paths.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms by the backend.
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

/// Canonical "num/den" form, denominator always printed.
inline std::string to_string(const Rat& v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

/// Accepts "num", "num/den", optional leading '-'.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

inline Int pow_int(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

/// q^e as an exact rational, e may be negative.
inline Rat pow_rat(const Int& q, long e) {
  if (e >= 0) return Rat(pow_int(q, static_cast<unsigned>(e)));
  return Rat(Int(1), pow_int(q, static_cast<unsigned>(-e)));
}

}  // namespace mms
