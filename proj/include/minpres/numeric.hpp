#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace minpres {

// All coefficients are arbitrary-precision integers and all linear algebra
// is exact rational arithmetic.  No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& x) { return x.str(); }

/// Serialize a rational as "p/q" (denominator always present, always > 0).
inline std::string rational_str(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Compact form for humans: omits the "/1" of integers.
inline std::string rational_pretty(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return rational_str(x);
}

}  // namespace minpres
