#pragma once

#include <map>
#include <string>
#include <utility>

#include "largen/polynomial.hpp"

namespace largen {

// Rational function of the size parameter N, kept in canonical form:
// numerator and denominator coprime, denominator monic, zero stored as 0/1.
// Equality is therefore structural. Laurent polynomials in N are the common
// special case (denominator N^m).
class RationalFunctionN {
public:
  RationalFunctionN() : den_(Rational(1)) {}
  /*implicit*/ RationalFunctionN(const Rational& c) : num_(c), den_(Rational(1)) {}
  /*implicit*/ RationalFunctionN(long c) : num_(Rational(c)), den_(Rational(1)) {}

  RationalFunctionN(Polynomial num, Polynomial den) { assign(std::move(num), std::move(den)); }

  static RationalFunctionN variable() { return RationalFunctionN(Polynomial::monomial(1, 1), Polynomial(Rational(1))); }

  // N^e for any integer e.
  static RationalFunctionN n_power(long e) {
    if (e >= 0) return RationalFunctionN(Polynomial::monomial(1, int(e)), Polynomial(Rational(1)));
    return RationalFunctionN(Polynomial(Rational(1)), Polynomial::monomial(1, int(-e)));
  }

  // Sum of c * N^e from a map exponent -> coefficient (exponents may be negative).
  static RationalFunctionN from_laurent(const std::map<long, Rational>& terms) {
    long shift = 0;
    for (const auto& [e, c] : terms)
      if (c != 0 && e < shift) shift = e;
    Polynomial num;
    for (const auto& [e, c] : terms) {
      if (c == 0) continue;
      int d = int(e - shift);
      if (num.degree() < d) num.coeffs.resize(d + 1, Rational(0));
      num.coeffs[d] += c;
    }
    num.trim();
    return RationalFunctionN(std::move(num), Polynomial::monomial(1, int(-shift)));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const RationalFunctionN& a, const RationalFunctionN& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend RationalFunctionN operator+(const RationalFunctionN& a, const RationalFunctionN& b) {
    return RationalFunctionN(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunctionN operator-(const RationalFunctionN& a, const RationalFunctionN& b) {
    return RationalFunctionN(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunctionN operator-(const RationalFunctionN& a) {
    RationalFunctionN r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunctionN operator*(const RationalFunctionN& a, const RationalFunctionN& b) {
    return RationalFunctionN(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunctionN operator/(const RationalFunctionN& a, const RationalFunctionN& b) {
    if (b.is_zero()) throw ValidationError("division by the zero rational function");
    return RationalFunctionN(a.num_ * b.den_, a.den_ * b.num_);
  }

  RationalFunctionN& operator+=(const RationalFunctionN& o) { return *this = *this + o; }
  RationalFunctionN& operator-=(const RationalFunctionN& o) { return *this = *this - o; }
  RationalFunctionN& operator*=(const RationalFunctionN& o) { return *this = *this * o; }
  RationalFunctionN& operator/=(const RationalFunctionN& o) { return *this = *this / o; }

  // Exact evaluation at N = n0; poles are reported, not propagated as NaN.
  Rational eval(const Rational& n0) const {
    Rational d = den_.eval(n0);
    if (d == 0)
      throw ValidationError("pole of rational function at N = " + rational_to_string(n0));
    return num_.eval(n0) / d;
  }

  // Large-N behavior: degree = deg(num) - deg(den) and the ratio of leading
  // coefficients, so that f(N) * N^(-degree) -> leading as N -> infinity.
  std::pair<long, Rational> large_n() const {
    if (is_zero()) throw ValidationError("large-N behavior of the zero function");
    return {long(num_.degree()) - long(den_.degree()), num_.leading() / den_.leading()};
  }

  // "num ; den" with comma-separated coefficient lists, constant term first.
  std::string to_string() const { return num_.to_string() + " ; " + den_.to_string(); }

  static RationalFunctionN parse(const std::string& text) {
    size_t sep = text.find(';');
    if (sep == std::string::npos)
      return RationalFunctionN(Polynomial::parse(text), Polynomial(Rational(1)));
    return RationalFunctionN(Polynomial::parse(text.substr(0, sep)),
                             Polynomial::parse(text.substr(sep + 1)));
  }

private:
  void assign(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw ValidationError("zero denominator in rational function");
    if (num.is_zero()) {
      num_ = Polynomial();
      den_ = Polynomial(Rational(1));
      return;
    }
    Polynomial g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = poly_divmod(num, g).first;
      den = poly_divmod(den, g).first;
    }
    Rational lead = den.leading();
    num_ = num.scaled(Rational(1) / lead);
    den_ = den.scaled(Rational(1) / lead);
  }

  Polynomial num_, den_;
};

enum class RfnOp { add, sub, mul, div };

inline RationalFunctionN rfn_arith(const RationalFunctionN& a, const RationalFunctionN& b, RfnOp op) {
  switch (op) {
    case RfnOp::add: return a + b;
    case RfnOp::sub: return a - b;
    case RfnOp::mul: return a * b;
    case RfnOp::div: return a / b;
  }
  throw ValidationError("unknown rational-function operation");
}

inline Rational rfn_eval(const RationalFunctionN& f, const Rational& n0) { return f.eval(n0); }

inline std::pair<long, Rational> rfn_large_n(const RationalFunctionN& f) { return f.large_n(); }

}  // namespace largen
