#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "hitsets/errors.hpp"

namespace hitsets {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// floor(log2(n)) for n >= 1.
inline int floor_log2(long long n) {
  if (n < 1) throw InputError("floor_log2: argument must be >= 1");
  int k = 0;
  while (n > 1) {
    n >>= 1;
    ++k;
  }
  return k;
}

/// Largest integer <= r, as a machine integer. Guarded against values that
/// do not fit; all callers operate at desk scale.
long long rational_floor(const Rational& r);

/// Accepts "a", "a/b" and plain decimals like "-2.75"; everything is read
/// exactly, decimals via powers of ten.
Rational parse_rational(const std::string& text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

inline int sign_of(const Rational& r) { return r.sign(); }

}  // namespace hitsets
