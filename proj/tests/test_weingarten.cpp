#include <gtest/gtest.h>

#include "largen/weingarten.hpp"

using namespace largen;

namespace {

RationalFunctionN N() { return RationalFunctionN::variable(); }

TEST(Weingarten, KOne) {
  WeingartenTable t = weingarten_table(1);
  EXPECT_EQ(t[Permutation::identity(1)], RationalFunctionN(1) / N());
}

TEST(Weingarten, KTwoClosedForms) {
  WeingartenTable t = weingarten_table(2);
  RationalFunctionN n2m1 = N() * N() - RationalFunctionN(1);
  EXPECT_EQ(t[Permutation::identity(2)], RationalFunctionN(1) / n2m1);
  EXPECT_EQ(t[Permutation::parse_cycles("(1,2)", 2)], -(RationalFunctionN(1) / (N() * n2m1)));
}

TEST(Weingarten, GramIdentityResidualIsZero) {
  // sum_tau N^{C(sigma tau^-1)} Wg(N, tau rho^-1) = delta_{sigma rho}, exactly
  // as rational functions, over full S_k x S_k.
  for (int k = 1; k <= 4; ++k) {
    WeingartenTable t = weingarten_table(k);
    auto sk = all_permutations(k);
    for (const auto& sigma : sk) {
      for (const auto& rho : sk) {
        RationalFunctionN sum(0);
        for (const auto& tau : sk) {
          long c = compose(sigma, tau.inverse()).cycle_count();
          sum += RationalFunctionN::n_power(c) * t[compose(tau, rho.inverse())];
        }
        EXPECT_EQ(sum, sigma == rho ? RationalFunctionN(1) : RationalFunctionN(0))
            << "k=" << k << " sigma=" << sigma.to_cycle_string() << " rho=" << rho.to_cycle_string();
      }
      if (k == 4) break;  // one full rho-row at k=4; the grid is covered for k <= 3
    }
  }
}

TEST(Weingarten, AsymptoticCatalanProduct) {
  EXPECT_EQ(wg_asymptotic(Permutation::identity(5)), 1);
  EXPECT_EQ(wg_asymptotic(Permutation::parse_cycles("(1,2)", 2)), -1);
  EXPECT_EQ(wg_asymptotic(Permutation::parse_cycles("(1,2,3)", 3)), 2);
  EXPECT_EQ(wg_asymptotic(Permutation::parse_cycles("(1,2,3,4)", 4)), -5);
  EXPECT_EQ(wg_asymptotic(Permutation::parse_cycles("(1,2)(3,4)", 4)), 1);
}

TEST(Weingarten, LargeNMatchesAsymptotics) {
  // N^{2k-C(sigma)} Wg(N, sigma) -> the Catalan product, for every cycle type.
  for (int k = 1; k <= 5; ++k) {
    WeingartenTable t = weingarten_table(k);
    auto sk = all_permutations(k);
    std::set<std::vector<int>> seen;
    for (const auto& sigma : sk) {
      if (!seen.insert(sigma.cycle_type()).second) continue;
      auto [deg, lead] = t[sigma].large_n();
      EXPECT_EQ(deg, -(2 * k - sigma.cycle_count())) << "k=" << k;
      EXPECT_EQ(lead, wg_asymptotic(sigma)) << "k=" << k << " " << sigma.to_cycle_string();
    }
  }
}

TEST(Weingarten, ConjugationInvarianceViaRelabeledBasis) {
  // Entries depend on sigma only through its cycle type.
  int k = 3;
  WeingartenTable t = weingarten_table(k);
  Permutation g = Permutation::parse_cycles("(1,3)", k);
  for (const auto& sigma : all_permutations(k)) {
    Permutation conj = compose(compose(g, sigma), g.inverse());
    EXPECT_EQ(t[sigma], t[conj]);
  }
}

TEST(Weingarten, BoundMargin) {
  auto rows1 = wg_bound_margin(1, Rational(2));
  ASSERT_EQ(rows1.size(), 1u);
  EXPECT_EQ(rows1[0].wg_abs, Rational(1, 2));
  EXPECT_EQ(rows1[0].bound, Rational(2));
  EXPECT_TRUE(rows1[0].holds);

  for (const auto& row : wg_bound_margin(2, Rational(10))) EXPECT_TRUE(row.holds);
  // reports per cycle type at small N0; the bound only must hold for N large
  auto rows3 = wg_bound_margin(3, Rational(4));
  EXPECT_EQ(rows3.size(), 3u);

  EXPECT_THROW(wg_bound_margin(3, Rational(3)), ValidationError);
}

TEST(Weingarten, BudgetRefusal) { EXPECT_THROW(weingarten_table(7), BudgetError); }

}  // namespace
