#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "largen/plane_tree.hpp"
#include "largen/rational.hpp"

namespace largen {

// Exact value of
//   int_{[0,1]^{n-1}} prod_edges du  prod_p  min_{e in path(j_p -> j_p')} u_e
// over the edge variables of the tree, by summing the closed-form simplex
// integral of the resulting monomial over every linear ordering of the
// variables. Pairs with equal endpoints contribute the factor w^{kk} = 1.
inline Rational w_integral(const PlaneTree& t, const std::vector<std::pair<int, int>>& pairs) {
  int m = t.n - 1;
  std::vector<uint32_t> masks;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= t.n || b < 0 || b >= t.n) throw ValidationError("pair vertex out of range");
    if (a == b) continue;
    uint32_t mask = 0;
    for (int e : tree_path_edges(t, a, b)) mask |= uint32_t(1) << e;
    masks.push_back(mask);
  }
  if (masks.empty()) return 1;
  if (m > 9) throw BudgetError("w-integral ordering enumeration over budget", factorial(m).str());

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> exps(m);
  Int num = 0, den = 1;
  bool first = true;
  do {
    std::fill(exps.begin(), exps.end(), 0);
    for (uint32_t mask : masks) {
      for (int r = 0; r < m; ++r)
        if (mask & (uint32_t(1) << order[r])) {
          ++exps[order[r]];
          break;
        }
    }
    // integral of prod u_{order[r]}^{exps} over 0 <= u_{order[0]} <= ... <= 1
    Int term_den = 1;
    long prefix = 0;
    for (int r = 0; r < m; ++r) {
      prefix += exps[order[r]];
      term_den *= Int(prefix + r + 1);
    }
    if (first) {
      den = term_den;
      num = 1;
      first = false;
    } else {
      // num/den += 1/term_den
      num = num * term_den + den;
      den *= term_den;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return Rational(num, den);
}

struct McEstimate {
  double mean = 0;
  double std_error = 0;
  long samples = 0;
};

// Plain Monte Carlo estimate of the same integral, for cross-checks.
inline McEstimate w_integral_mc(const PlaneTree& t, const std::vector<std::pair<int, int>>& pairs,
                                long samples, uint64_t seed) {
  int m = t.n - 1;
  std::vector<std::vector<int>> paths;
  for (const auto& [a, b] : pairs)
    if (a != b) paths.push_back(tree_path_edges(t, a, b));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> u(std::max(m, 1));
  double sum = 0, sum_sq = 0;
  for (long it = 0; it < samples; ++it) {
    for (int e = 0; e < m; ++e) u[e] = unif(rng);
    double f = 1;
    for (const auto& path : paths) {
      double mn = 1;
      for (int e : path) mn = std::min(mn, u[e]);
      f *= mn;
    }
    sum += f;
    sum_sq += f * f;
  }
  McEstimate est;
  est.samples = samples;
  est.mean = sum / double(samples);
  double var = sum_sq / double(samples) - est.mean * est.mean;
  est.std_error = std::sqrt(std::max(var, 0.0) / double(samples));
  return est;
}

// The weight matrix w^{kl}(T, u) at rational edge parameters: 1 on the
// diagonal, infimum along the tree path off it. Positive definite for
// u in (0,1)^{n-1}, which the tests verify through leading principal minors.
inline std::vector<std::vector<Rational>> bkar_weight_matrix(const PlaneTree& t,
                                                             const std::vector<Rational>& u) {
  if (int(u.size()) != t.n - 1) throw ValidationError("one parameter per tree edge required");
  std::vector<std::vector<Rational>> w(t.n, std::vector<Rational>(t.n, Rational(1)));
  for (int a = 0; a < t.n; ++a)
    for (int b = a + 1; b < t.n; ++b) {
      Rational mn = 1;
      for (int e : tree_path_edges(t, a, b)) mn = std::min(mn, u[e]);
      w[a][b] = w[b][a] = mn;
    }
  return w;
}

// Leading principal minors by fraction-free elimination; all positive iff the
// matrix is positive definite.
inline std::vector<Rational> leading_principal_minors(std::vector<std::vector<Rational>> a) {
  int n = int(a.size());
  std::vector<Rational> minors;
  Rational det = 1;
  for (int i = 0; i < n; ++i) {
    // expand determinant of the leading (i+1)x(i+1) block via elimination
    std::vector<std::vector<Rational>> block(i + 1, std::vector<Rational>(i + 1));
    for (int r = 0; r <= i; ++r)
      for (int c = 0; c <= i; ++c) block[r][c] = a[r][c];
    det = 1;
    for (int col = 0; col <= i; ++col) {
      int piv = col;
      while (piv <= i && block[piv][col] == 0) ++piv;
      if (piv > i) {
        det = 0;
        break;
      }
      if (piv != col) {
        std::swap(block[piv], block[col]);
        det = -det;
      }
      det *= block[col][col];
      for (int r = col + 1; r <= i; ++r) {
        Rational f = block[r][col] / block[col][col];
        for (int c = col; c <= i; ++c) block[r][c] -= f * block[col][c];
      }
    }
    minors.push_back(det);
  }
  return minors;
}

}  // namespace largen
