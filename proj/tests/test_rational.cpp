#include <gtest/gtest.h>

#include <random>

#include "largen/rational.hpp"
#include "largen/rational_function.hpp"

using namespace largen;

namespace {

RationalFunctionN N() { return RationalFunctionN::variable(); }

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3) / 4);
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(rational_to_string(Rational(6) / 4), "3/2");
  EXPECT_THROW(parse_rational("x"), ValidationError);
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(rational_to_decimal(Rational(1) / 3, 5), "0.33333");
  EXPECT_EQ(rational_to_decimal(Rational(-1) / 2, 2), "-0.50");
  EXPECT_EQ(rational_to_decimal(Rational(5), 0), "5");
}

TEST(Rational, SqrtApproximation) {
  Rational eps(1, 1000000);
  Rational r = sqrt_rational(Rational(2), eps);
  EXPECT_LE(abs_rational(r * r - 2), 4 * eps);  // |r^2-2| <= (r+sqrt2)*eps
  EXPECT_EQ(sqrt_rational(Rational(9, 4), eps), Rational(3, 2) + (sqrt_rational(Rational(9, 4), eps) - Rational(3, 2)));
  EXPECT_LE(abs_rational(sqrt_rational(Rational(9, 4), eps) - Rational(3, 2)), eps);
}

TEST(Rational, CosApproximation) {
  Rational eps(1, Int(1000000000));
  EXPECT_EQ(cos_rational(Rational(0), eps), 1);
  // cos(1) = 0.5403023058681397...
  Rational c = cos_rational(Rational(1), eps);
  EXPECT_LE(abs_rational(c - parse_rational("5403023058/10000000000")), Rational(1, 1000000000) * 10);
}

TEST(RationalFunction, ArithAndNormalization) {
  // N * (1/N) = 1
  EXPECT_EQ(rfn_arith(N(), RationalFunctionN(1) / N(), RfnOp::mul), RationalFunctionN(1));
  // (N^2 - 1) / (N - 1) = N + 1
  RationalFunctionN n2m1 = N() * N() - RationalFunctionN(1);
  RationalFunctionN nm1 = N() - RationalFunctionN(1);
  EXPECT_EQ(rfn_arith(n2m1, nm1, RfnOp::div), N() + RationalFunctionN(1));
  // 1/(N^2-1) + 1/(N(N^2-1)) = (N+1) / (N(N^2-1))
  RationalFunctionN lhs = RationalFunctionN(1) / n2m1 + RationalFunctionN(1) / (N() * n2m1);
  EXPECT_EQ(lhs, (N() + RationalFunctionN(1)) / (N() * n2m1));
  EXPECT_THROW(rfn_arith(N(), RationalFunctionN(0), RfnOp::div), ValidationError);
}

TEST(RationalFunction, Eval) {
  EXPECT_EQ(rfn_eval(RationalFunctionN(1) / N(), Rational(3)), Rational(1) / 3);
  // N^(D-1) at D=3, N=2
  EXPECT_EQ(rfn_eval(RationalFunctionN::n_power(2), Rational(2)), Rational(4));
  EXPECT_THROW(rfn_eval(RationalFunctionN(1) / (N() * N() - RationalFunctionN(1)), Rational(1)),
               ValidationError);
}

TEST(RationalFunction, LargeN) {
  auto [d1, l1] = rfn_large_n(N() * N() + N());
  EXPECT_EQ(d1, 2);
  EXPECT_EQ(l1, 1);
  auto [d2, l2] = rfn_large_n(RationalFunctionN(1) / (N() * N() - RationalFunctionN(1)));
  EXPECT_EQ(d2, -2);
  EXPECT_EQ(l2, 1);
  auto [d3, l3] = rfn_large_n(-(RationalFunctionN(1) / (N() * (N() * N() - RationalFunctionN(1)))));
  EXPECT_EQ(d3, -3);
  EXPECT_EQ(l3, -1);
  EXPECT_THROW(rfn_large_n(RationalFunctionN(0)), ValidationError);
}

RationalFunctionN random_rfn(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4);
  Polynomial num, den;
  do {
    num.coeffs.clear();
    for (int i = 0, d = deg(rng); i <= d; ++i) num.coeffs.push_back(Rational(coef(rng)));
    num.trim();
  } while (false);
  do {
    den.coeffs.clear();
    for (int i = 0, d = deg(rng); i <= d; ++i) den.coeffs.push_back(Rational(coef(rng)));
    den.trim();
  } while (den.is_zero());
  return RationalFunctionN(num, den);
}

TEST(RationalFunction, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(20240811);
  for (int it = 0; it < 200; ++it) {
    RationalFunctionN a = random_rfn(rng), b = random_rfn(rng), c = random_rfn(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) EXPECT_EQ(a / a, RationalFunctionN(1));
  }
}

TEST(RationalFunction, EvalCommutesWithArith) {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    RationalFunctionN a = random_rfn(rng), b = random_rfn(rng);
    Rational x(int(rng() % 17) + 5);  // away from the small-integer poles used here
    try {
      Rational va = a.eval(x), vb = b.eval(x);
      EXPECT_EQ((a + b).eval(x), va + vb);
      EXPECT_EQ((a * b).eval(x), va * vb);
      if (vb != 0) EXPECT_EQ((a / b).eval(x), va / vb);
    } catch (const ValidationError&) {
      // pole at x: skip
    }
  }
}

TEST(RationalFunction, LargeNDegreeIsAdditive) {
  std::mt19937 rng(99);
  for (int it = 0; it < 200; ++it) {
    RationalFunctionN a = random_rfn(rng), b = random_rfn(rng);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(rfn_large_n(a * b).first, rfn_large_n(a).first + rfn_large_n(b).first);
  }
}

TEST(RationalFunction, TextRoundTrip) {
  RationalFunctionN f = (N() + RationalFunctionN(1)) / (N() * (N() * N() - RationalFunctionN(1)));
  EXPECT_EQ(RationalFunctionN::parse(f.to_string()), f);
  EXPECT_EQ(RationalFunctionN::parse("0,1 ; 1"), N());
  // Laurent assembly
  std::map<long, Rational> terms{{-2, Rational(1)}, {1, Rational(3)}};
  RationalFunctionN g = RationalFunctionN::from_laurent(terms);
  EXPECT_EQ(g, RationalFunctionN::n_power(-2) + RationalFunctionN(3) * N());
}

}  // namespace
