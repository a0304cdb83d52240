#include <gtest/gtest.h>

#include <random>

#include "largen/enumeration.hpp"
#include "largen/w_integral.hpp"

using namespace largen;

namespace {

PlaneTree path_tree(int n) {
  std::string walk;
  for (int i = 1; i <= n; ++i) walk += (i > 1 ? "," : "") + std::to_string(i);
  for (int i = n - 1; i >= 2; --i) walk += "," + std::to_string(i);
  std::string ann;
  for (int i = 1; i < n; ++i)
    ann += (i > 1 ? "," : "") + std::to_string(i) + "-" + std::to_string(i + 1) + ":1:>";
  return parse_walk(walk, 3, ann);
}

TEST(WIntegral, NoPairsIsOne) {
  EXPECT_EQ(w_integral(path_tree(4), {}), 1);
  EXPECT_EQ(w_integral(path_tree(4), {{2, 2}, {0, 0}}), 1);  // w^{kk} = 1
}

TEST(WIntegral, SingleEdge) {
  // two adjacent vertices, one pair across the single edge: integral of u du = 1/2
  EXPECT_EQ(w_integral(path_tree(2), {{0, 1}}), Rational(1, 2));
}

TEST(WIntegral, MinOverTwoEdges) {
  // path of two edges, pair across both: E[min(u1, u2)] = 1/3
  EXPECT_EQ(w_integral(path_tree(3), {{0, 2}}), Rational(1, 3));
}

TEST(WIntegral, ProductOfIndependentEdges) {
  // two pairs over disjoint single edges factorize: 1/2 * 1/2
  EXPECT_EQ(w_integral(path_tree(3), {{0, 1}, {1, 2}}), Rational(1, 4));
  // same pair twice: E[u^2] = 1/3
  EXPECT_EQ(w_integral(path_tree(2), {{0, 1}, {0, 1}}), Rational(1, 3));
}

TEST(WIntegral, BudgetRefusal) {
  EXPECT_THROW(w_integral(path_tree(11), {{0, 10}}), BudgetError);
}

TEST(WIntegral, MonteCarloAgreesOnRandomInstances) {
  std::mt19937_64 seed_rng(20240802);
  TreeEnumOptions opts;
  opts.distinct_orientations = false;
  int instances = 0;
  for (int n = 3; n <= 6 && instances < 12; ++n) {
    int picked = 0;
    enumerate_trees(n, 1, 3, opts, [&](const PlaneTree& t) {
      if (picked >= 2 || instances >= 12) return;
      std::mt19937_64 rng(seed_rng());
      std::vector<std::pair<int, int>> pairs;
      int npairs = 1 + int(rng() % 3);
      for (int i = 0; i < npairs; ++i)
        pairs.push_back({int(rng() % n), int(rng() % n)});
      Rational exact = w_integral(t, pairs);
      McEstimate mc = w_integral_mc(t, pairs, 200000, rng());
      double diff = std::abs(double(exact.convert_to<double>()) - mc.mean);
      EXPECT_LE(diff, 4.0 * mc.std_error + 1e-12) << "n=" << n;
      ++picked;
      ++instances;
    });
  }
  EXPECT_GE(instances, 10);
}

TEST(WIntegral, BkarMatrixPositiveDefinite) {
  // leading principal minors of w^{kl}(T, u) are positive for u in (0,1)
  std::mt19937_64 rng(77);
  TreeEnumOptions opts;
  opts.distinct_orientations = false;
  for (int n = 2; n <= 6; ++n) {
    int picked = 0;
    enumerate_trees(n, 0, 2, opts, [&](const PlaneTree& t) {
      if (picked >= 3) return;
      ++picked;
      std::vector<Rational> u;
      for (int e = 0; e < n - 1; ++e) u.push_back(Rational(1 + int(rng() % 97), 101));
      auto minors = leading_principal_minors(bkar_weight_matrix(t, u));
      for (const auto& m : minors) EXPECT_GT(m, 0) << "n=" << n;
    });
  }
}

}  // namespace
