#include <gtest/gtest.h>

#include "largen/expansion.hpp"

using namespace largen;

namespace {


PlaneTree single_vertex_ciliated(int D) {
  PlaneTree t;
  t.n = 1;
  t.D = D;
  t.rotation.assign(1, {});
  t.rotation[0].push_back({0, true});
  t.next_cilium_id = 1;
  return t;
}

TEST(TermValue, SmallestMelonicTreeIsOne) {
  for (int D : {3, 4}) {
    ColoredGraph dip = ColoredGraph::dipole(D);
    WeingartenTable wg = weingarten_table(1);
    DecoratedTree d = attach_external(single_vertex_ciliated(D), PermTuple::identities(D, 1));
    ExpansionTerm term = term_value(d, dip, wg);
    EXPECT_EQ(term.lambda_power, 0);
    EXPECT_EQ(term.coefficient, RationalFunctionN(1));
  }
}

TEST(TermValue, EveryMelonicTreeIsOne) {
  // k = 1, q = 0, tau trivial: the tree weight is identically 1
  int D = 3;
  ColoredGraph dip = ColoredGraph::dipole(D);
  WeingartenTable wg = weingarten_table(1);
  TreeEnumOptions opts;
  for (int n = 1; n <= 3; ++n) {
    enumerate_trees(n, 1, D, opts, [&](const PlaneTree& t) {
      DecoratedTree d = attach_external(t, PermTuple::identities(D, 1));
      EXPECT_EQ(term_value(d, dip, wg).coefficient, RationalFunctionN(1));
    });
  }
}

TEST(TermValue, OneLoopOnSmallestTree) {
  // every single loop insertion on the n=1 tree contributes -N^(2-D)
  for (int D : {3, 4}) {
    ColoredGraph dip = ColoredGraph::dipole(D);
    WeingartenTable wg = weingarten_table(1);
    DecoratedTree d0 = attach_external(single_vertex_ciliated(D), PermTuple::identities(D, 1));
    int count = 0;
    enumerate_loop_insertions(1, 1, D, [&](const std::vector<LoopInsertion>& ins) {
      DecoratedTree d = insert_loops(d0, ins);
      ExpansionTerm term = term_value(d, dip, wg);
      EXPECT_EQ(term.lambda_power, 1);
      EXPECT_EQ(term.coefficient, -RationalFunctionN::n_power(2 - D));
      ++count;
    });
    EXPECT_EQ(count, 2 * D);
  }
}

TEST(TermValue, LoopTermsAreSuppressed) {
  // every q-loop weight has N-degree <= -q(D-2) relative to the melonic order
  int D = 3;
  ColoredGraph dip = ColoredGraph::dipole(D);
  WeingartenTable wg = weingarten_table(1);
  TreeEnumOptions opts;
  for (int n = 1; n <= 2; ++n) {
    enumerate_trees(n, 1, D, opts, [&](const PlaneTree& t) {
      DecoratedTree d0 = attach_external(t, PermTuple::identities(D, 1));
      for (int q = 1; q <= 2; ++q) {
        enumerate_loop_insertions(2 * n - 1, q, D, [&](const std::vector<LoopInsertion>& ins) {
          DecoratedTree d = insert_loops(d0, ins);
          auto [deg, lead] = term_value(d, dip, wg).coefficient.large_n();
          (void)lead;
          EXPECT_LE(deg, -q * (D - 2));
        });
      }
    });
  }
}

TEST(AssembleSeries, DipoleLowOrders) {
  int D = 3;
  CumulantSeries s = assemble_series(ColoredGraph::dipole(D), D, 2);
  EXPECT_EQ(s.coefficients.at(0), RationalFunctionN(1));
  // exact lambda^1 coefficient: -2D (1 + N^(2-D))
  EXPECT_EQ(s.coefficients.at(1),
            RationalFunctionN(Rational(-2 * D)) * (RationalFunctionN(1) + RationalFunctionN::n_power(2 - D)));
  auto [deg1, lead1] = s.coefficients.at(1).large_n();
  EXPECT_EQ(deg1, 0);
  EXPECT_EQ(lead1, -2 * D);
  auto [deg2, lead2] = s.coefficients.at(2).large_n();
  EXPECT_EQ(deg2, 0);
  EXPECT_EQ(lead2, (2 * D) * (2 * D) * 2);  // (2D)^2 Catalan(2)
}

TEST(AssembleSeries, MelonicDominance) {
  for (int D : {3, 4}) {
    CumulantSeries s = assemble_series(ColoredGraph::dipole(D), D, 2);
    for (int p = 0; p <= 2; ++p) {
      auto [deg, lead] = s.coefficients.at(p).large_n();
      EXPECT_EQ(deg, 0);
      EXPECT_EQ(lead, melonic_coefficient(D, p));
    }
  }
}

TEST(AssembleSeries, BudgetRefusal) {
  AssembleOptions opts;
  opts.budget = 10;
  EXPECT_THROW(assemble_series(ColoredGraph::dipole(3), 3, 2, opts), BudgetError);
}

TEST(Melonic, SeriesCoefficients) {
  // 1, 1, 2, 5 times (-2D)^{n-1}
  int D = 3;
  EXPECT_EQ(melonic_coefficient(D, 0), 1);
  EXPECT_EQ(melonic_coefficient(D, 1), -6);
  EXPECT_EQ(melonic_coefficient(D, 2), 72);
  EXPECT_EQ(melonic_coefficient(D, 3), -1080);
  EXPECT_EQ(melonic_series(D, 4, Rational(1)),
            Rational(1) - 6 + 72 - 1080);
  EXPECT_EQ(melonic_series(D, 10, Rational(0)), 1);
}

TEST(Melonic, ClosedFormValues) {
  Rational eps(1, Int("1000000000000000000"));
  EXPECT_EQ(melonic_closed_form(3, Rational(0), eps), 1);
  // at the critical constant the value is exactly 2
  int D = 3;
  Rational at_critical = melonic_closed_form(D, -critical_constant(D), eps);
  EXPECT_LE(abs_rational(at_critical - 2), eps * 4);
  EXPECT_THROW(melonic_closed_form(3, Rational(-1), eps), ValidationError);
}

TEST(Melonic, SeriesMatchesClosedFormInsideRadius) {
  int D = 3;
  Rational lambda(1, 100);
  Rational eps(1, Int("10000000000000000000000"));
  Rational diff = abs_rational(melonic_series(D, 25, lambda) - melonic_closed_form(D, lambda, eps));
  EXPECT_LE(diff, Rational(1, Int("1000000000000")));
}

TEST(Melonic, TermRatioApproachesOneAtCriticality) {
  int D = 3;
  auto ratio = [&](const Rational& lambda, int n) {
    Rational t_n = pow_rational(Rational(-2 * D) * lambda, n - 1) * catalan(n - 1);
    Rational t_n1 = pow_rational(Rational(-2 * D) * lambda, n) * catalan(n);
    return abs_rational(t_n1 / t_n);
  };
  Rational lc = -critical_constant(D);
  Rational prev = ratio(lc, 2);
  for (int n = 3; n <= 60; ++n) {
    Rational r = ratio(lc, n);
    EXPECT_GT(r, prev);  // increasing toward 1
    prev = r;
  }
  EXPECT_GT(prev, Rational(97, 100));
  EXPECT_LT(prev, 1);
  // strictly inside the radius the ratio stays away from 1
  EXPECT_LT(ratio(lc * Rational(9, 10), 60), Rational(92, 100));
}

TEST(Bounds, SuiteValuesAtPhiZero) {
  BoundParams p;
  p.lambda_abs = Rational(1, 10);
  p.N0 = 10;
  BoundReport rep = bound_suite(3, 1, 1, 0, 1, p);
  EXPECT_EQ(rep.cos_half_phi, 1);
  // q = 0 bound: k! 2^{2Dk} = 64, with no lambda or N factors
  EXPECT_EQ(rep.tq_bound, 64);
  EXPECT_GT(rep.rest_bound, 0);
  EXPECT_EQ(rep.rest_domain, Rational(1, 150));
  // rest bound requires |lambda| < 1/150: 1/10 violates it when asked for
  BoundParams bad = p;
  bad.lambda_abs = Rational(1, 10);
  EXPECT_EQ(rep.rest_domain, Rational(1, 150));
}

TEST(Bounds, DomainValidation) {
  BoundParams p;
  p.lambda_abs = Rational(1, 10);  // outside |lambda| < 1/150
  p.N0 = 10;
  bool threw = false;
  try {
    bound_suite(3, 2, 1, 1, 1, p);
  } catch (const ValidationError& e) {
    threw = true;
    EXPECT_NE(std::string(e.what()).find("5^-2"), std::string::npos);
  }
  EXPECT_TRUE(threw);
  BoundParams bad_phi;
  bad_phi.lambda_abs = Rational(1, 1000);
  bad_phi.N0 = 10;
  bad_phi.phi = Rational(32, 10);
  EXPECT_THROW(bound_suite(3, 1, 1, 0, 1, bad_phi), ValidationError);
}

TEST(Bounds, PhiRotationWeakensRestBound) {
  BoundParams p0, p1;
  p0.lambda_abs = p1.lambda_abs = Rational(1, 1000);
  p0.N0 = p1.N0 = 10;
  p1.phi = Rational(1);  // one radian
  BoundReport r0 = bound_suite(3, 1, 1, 0, 1, p0);
  BoundReport r1 = bound_suite(3, 1, 1, 0, 1, p1);
  EXPECT_LT(r1.cos_half_phi, 1);
  EXPECT_GT(r1.rest_bound, r0.rest_bound);
  EXPECT_GT(r1.rs_bound, r0.rs_bound);
}

TEST(Bounds, TqDominationSmall) {
  TqDominationReport rep = check_tq_bounds(ColoredGraph::dipole(3), 2, 1, Rational(10), Rational(1, 10));
  EXPECT_GT(rep.values_checked, 0u);
  EXPECT_TRUE(rep.violations.empty());
}

}  // namespace
