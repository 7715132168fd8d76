#pragma once

// Exact scalars used everywhere: arbitrary-precision integers and rationals
// (GMP-backed). Rationals are kept canonical by the backend: lowest terms,
// positive denominator. No floating point appears anywhere in the library.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "frobcone/errors.hpp"

namespace frobcone {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

// Floor division, denominator must be positive.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if (a % b != 0 && a < 0) --q;
  return q;
}

// Ceiling division, denominator must be positive.
inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

inline Int rat_floor(const Rat& x) { return floor_div(numerator(x), denominator(x)); }
inline Int rat_ceil(const Rat& x) { return ceil_div(numerator(x), denominator(x)); }

inline int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Int pow_int(const Int& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int p : {2, 3, 5, 7, 11, 13}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return boost::multiprecision::miller_rabin_test(n, 32);
}

// "n" when integral, "n/d" otherwise.
inline std::string rat_string(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

inline std::int64_t to_int64(const Int& v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
    fail_internal("integer out of int64 range: " + v.str());
  return static_cast<std::int64_t>(v);
}

}  // namespace frobcone
