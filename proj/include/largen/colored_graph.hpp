#pragma once

#include <string>

#include "largen/permutation.hpp"
#include "largen/rational_function.hpp"

namespace largen {

// Bipartite D-colored graph indexing a trace invariant: k white and k black
// vertices, the color-c edge at white vertex v ending on black vertex
// beta.perms[c](v). Every vertex is D-valent with one edge per color by
// construction.
struct ColoredGraph {
  int k = 0;
  int D = 0;
  PermTuple beta;

  ColoredGraph() = default;
  ColoredGraph(int k_, int D_, PermTuple b) : k(k_), D(D_), beta(std::move(b)) {
    if (beta.d() != D || beta.k() != k)
      throw ValidationError("colored graph needs one permutation of k elements per color");
    if (k < 1) throw ValidationError("colored graph needs k >= 1");
  }

  // The unique 2-vertex graph: one white, one black, D parallel edges.
  static ColoredGraph dipole(int D) { return ColoredGraph(1, D, PermTuple::identities(D, 1)); }

  int connected_components() const { return tuple_graph_components(beta); }
  bool is_dipole() const {
    if (k != 1) return false;
    for (const auto& p : beta.perms)
      if (!p.is_identity()) return false;
    return true;
  }
};

struct GaussianMomentResult {
  RationalFunctionN value;  // full expectation, scaled by sigma^{2k}
  long omega = 0;           // convergence order: value * N^(omega - 1) -> sigma^{2k} r
  Rational r;
};

// Gaussian expectation of the connected trace invariant indexed by b, for the
// normalized Gaussian of covariance sigma^2: a Wick sum over pairings gamma
// in S_k with one color-c index loop per cycle of gamma^-1 beta_c,
//   value = sigma^{2k} sum_gamma N^{ -k(D-1) + sum_c C(gamma^-1 beta_c) }.
inline GaussianMomentResult gaussian_expectation(const ColoredGraph& b, const Rational& sigma2) {
  if (b.connected_components() != 1)
    throw ValidationError("gaussian_expectation needs a connected graph; factor first");
  if (b.k > 7) throw BudgetError("pairing sum over budget", factorial(b.k).str());
  std::map<long, Rational> acc;
  for_each_permutation(b.k, [&](const Permutation& gamma) {
    Permutation gamma_inv = gamma.inverse();
    long expo = -long(b.k) * (b.D - 1);
    for (const auto& beta_c : b.beta.perms) expo += compose(gamma_inv, beta_c).cycle_count();
    acc[expo] += 1;
  });
  GaussianMomentResult res;
  Rational scale = pow_rational(sigma2, b.k);
  for (auto& [e, c] : acc) c *= scale;
  res.value = RationalFunctionN::from_laurent(acc);
  auto [deg, lead] = res.value.large_n();
  res.omega = 1 - deg;
  res.r = lead / scale;
  return res;
}

// Rescaled cumulant K(B, N) = raw / N^(-2(D-1)k + D - C).
inline RationalFunctionN rescale_cumulant(const RationalFunctionN& raw, const ColoredGraph& b,
                                          int components) {
  long expo = 2 * long(b.D - 1) * b.k - b.D + components;
  return raw * RationalFunctionN::n_power(expo);
}

}  // namespace largen
