#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "largen/rational.hpp"

namespace largen {

// Dense univariate polynomial in N over Rational. coeffs[i] multiplies N^i;
// the vector is empty exactly for the zero polynomial and otherwise has a
// nonzero back(). Degrees in this project stay small, density is cheap.
struct Polynomial {
  std::vector<Rational> coeffs;

  Polynomial() = default;
  explicit Polynomial(Rational c) {
    if (c != 0) coeffs.push_back(std::move(c));
  }

  static Polynomial monomial(const Rational& c, int degree) {
    Polynomial p;
    if (c != 0) {
      p.coeffs.assign(degree + 1, Rational(0));
      p.coeffs[degree] = c;
    }
    return p;
  }

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return coeffs.empty() ? -1 : int(coeffs.size()) - 1; }
  const Rational& leading() const {
    if (coeffs.empty()) throw ValidationError("leading coefficient of the zero polynomial");
    return coeffs.back();
  }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs == b.coeffs; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    if (r.coeffs.size() < b.coeffs.size()) r.coeffs.resize(b.coeffs.size(), Rational(0));
    for (size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    r.trim();
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    if (r.coeffs.size() < b.coeffs.size()) r.coeffs.resize(b.coeffs.size(), Rational(0));
    for (size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    r.trim();
    return r;
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
      if (a.coeffs[i] == 0) continue;
      for (size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    r.trim();
    return r;
  }

  Polynomial scaled(const Rational& s) const {
    if (s == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& c : r.coeffs) c *= s;
    return r;
  }

  // Make the leading coefficient 1 (no-op on zero).
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading());
  }

  Rational eval(const Rational& x) const {
    Rational v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (i) os << ',';
      os << rational_to_string(coeffs[i]);
    }
    return os.str();
  }

  static Polynomial parse(const std::string& text) {
    Polynomial p;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      // tolerate surrounding spaces
      size_t b = tok.find_first_not_of(" \t");
      size_t e = tok.find_last_not_of(" \t");
      if (b == std::string::npos) throw ValidationError("empty coefficient in polynomial text");
      p.coeffs.push_back(parse_rational(tok.substr(b, e - b + 1)));
    }
    p.trim();
    return p;
  }
};

// quotient, remainder with deg(rem) < deg(b)
inline std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  Polynomial rem = a, quot;
  int db = b.degree();
  if (rem.degree() >= db) quot.coeffs.assign(rem.degree() - db + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    int shift = rem.degree() - db;
    Rational f = rem.leading() / b.leading();
    quot.coeffs[shift] += f;
    for (int i = 0; i <= db; ++i) rem.coeffs[i + shift] -= f * b.coeffs[i];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r).monic();  // renormalize each step to limit coefficient growth
  }
  return a.monic();
}

}  // namespace largen
