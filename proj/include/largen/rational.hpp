#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "largen/errors.hpp"

namespace largen {

// Exact scalar substrate. cpp_rational keeps gcd(|num|, den) = 1 and den >= 1
// by construction, which is exactly the invariant we need everywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int int_numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int int_denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Int factorial(long n) {
  if (n < 0) throw ValidationError("factorial of negative argument");
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (long i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

inline Int falling_factorial(long n, long k) {
  Int f = 1;
  for (long i = 0; i < k; ++i) f *= (n - i);
  return f;
}

inline Int catalan(long n) { return binomial(2 * n, n) / Int(n + 1); }

inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw ValidationError("0 raised to a negative power");
    return Rational(0);
  }
  Rational acc = 1;
  Rational b = e > 0 ? base : Rational(1) / base;
  long m = e > 0 ? e : -e;
  while (m > 0) {
    if (m & 1) acc *= b;
    b *= b;
    m >>= 1;
  }
  return acc;
}

inline Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Text form "p/q" (or plain "p"); the form used in all JSON output.
inline std::string rational_to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& text) {
  try {
    Rational r(text);
    return r;
  } catch (const std::exception&) {
    throw ValidationError("cannot parse rational '" + text + "' (expected p or p/q)");
  }
}

// Decimal rendering with the stated number of fractional digits, truncated
// toward zero. Only used for human-facing report columns.
inline std::string rational_to_decimal(const Rational& r, int digits) {
  Int num = int_numerator(r), den = int_denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  Int ip = num / den;
  Int rem = num % den;
  std::string out = (neg && (ip != 0 || rem != 0)) ? "-" : "";
  out += ip.str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      out += char('0' + (unsigned)(rem / den));
      rem %= den;
    }
  }
  return out;
}

// Integer square root (floor). boost::multiprecision::sqrt on cpp_int.
inline Int isqrt(const Int& x) {
  if (x < 0) throw ValidationError("isqrt of negative value");
  return boost::multiprecision::sqrt(x);
}

// Rational approximation of sqrt(x) with |result - sqrt(x)| <= eps.
// Scales to an integer square root on a grid of spacing eps.
inline Rational sqrt_rational(const Rational& x, const Rational& eps) {
  if (x < 0) throw ValidationError("square root of negative rational");
  if (eps <= 0) throw ValidationError("sqrt_rational needs eps > 0");
  Int scale = int_denominator(eps) / int_numerator(eps) + 1;  // 1/scale <= eps
  Int y = int_numerator(x) * scale * scale / int_denominator(x);
  return Rational(isqrt(y), scale);
}

// Rational approximation of cos(x) for |x| < 2 with error <= eps, by the
// alternating Taylor series (terms are decreasing from the x^4 term on, so the
// first omitted term bounds the remainder).
inline Rational cos_rational(const Rational& x, const Rational& eps) {
  if (abs_rational(x) >= 2) throw ValidationError("cos_rational domain is |x| < 2");
  if (eps <= 0) throw ValidationError("cos_rational needs eps > 0");
  Rational x2 = x * x;
  Rational term = 1, sum = 0;
  for (long m = 1; ; ++m) {
    sum += term;
    term *= -x2 / Rational(Int(2 * m - 1) * Int(2 * m));
    if (m >= 2 && abs_rational(term) <= eps) break;
    if (m > 64) break;  // unreachable for |x| < 2 and sane eps
  }
  return sum;
}

}  // namespace largen
