#pragma once

// Exact scalar types shared by the whole library: arbitrary-precision integers
// and rationals (GMP-backed) plus a 50-significant-digit floating type
// (MPFR-backed) for the few places that need certified decimal evaluation
// (trigonometric root formulas, the normal cdf). Everything combinatorial is
// computed over Int/Rat; Float50 never feeds back into an exact result.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coordlat {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Float50 =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>>;

inline Int int_pow(Int base, unsigned long e) {
  Int r = 1;
  while (e) {
    if (e & 1UL) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Int factorial(unsigned long n) {
  Int r = 1;
  for (unsigned long i = 2; i <= n; ++i) r *= i;
  return r;
}

// C(n, k) for integer n >= 0; zero outside 0 <= k <= n.
inline Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1); // product of i+1 consecutive integers is divisible by (i+1)!
  }
  return r;
}

// Generalized C(top, k) = top (top-1) ... (top-k+1) / k! for rational top.
inline Rat binomial_rat(const Rat& top, long k) {
  if (k < 0) return Rat(0);
  Rat r = 1;
  for (long j = 0; j < k; ++j) r *= (top - j) / Rat(j + 1);
  return r;
}

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rat& v) { return v.sign(); }

inline Int rat_numerator(const Rat& q) { return Int(numerator(q)); }
inline Int rat_denominator(const Rat& q) { return Int(denominator(q)); }

inline Float50 to_float(const Int& v) { return Float50(v); }
inline Float50 to_float(const Rat& q) {
  return Float50(rat_numerator(q)) / Float50(rat_denominator(q));
}

// Exact integer quotient; throws if the division leaves a remainder.
inline Int div_exact(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::logic_error("div_exact: division is not exact");
  return q;
}

} // namespace coordlat
