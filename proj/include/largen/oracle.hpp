#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "largen/expansion.hpp"

namespace largen {

// Brute-force perturbative computation of the cumulants of the quartically
// perturbed Gaussian tensor measure, by explicit Wick contraction. Entirely
// independent of the tree expansion: the only shared code is the exact
// arithmetic substrate.
struct FeynmanConfig {
  int D = 3;
  ColoredGraph external_graph;   // the target B; k <= 2
  int max_order = 2;             // m <= 3
  bool single_color = false;     // restrict the vertex sum to color 1 (tests)
  Int budget = Int(1) << 28;     // pairings x color assignments
};

namespace detail {

// Per lambda order: delta pattern -> (N exponent -> integer count).
// The pattern key flattens pi_c(l) over colors then cilia; for k = 1 there is
// a single pattern and the key is all zeros.
using PatternCounts = std::map<std::vector<int>, std::map<long, Int>>;

struct WickSums {
  std::vector<PatternCounts> full;       // index: lambda order p
  std::vector<PatternCounts> connected;  // same, connected diagrams only
};

// Enumerate Wick pairings of k external pairs plus p quartic vertices and
// classify by delta pattern, N exponent and diagram connectivity.
inline WickSums wick_sums(int D, int k, int m, bool single_color) {
  WickSums sums;
  sums.full.resize(m + 1);
  sums.connected.resize(m + 1);
  for (int p = 0; p <= m; ++p) {
    int W = k + 2 * p;  // white slots; as many black
    std::vector<int> colors(std::max(p, 1), 0);
    std::vector<int> gamma(W);
    std::vector<int> vd(W);  // scratch: vertex-delta black->white map per color
    std::vector<char> visited(W);
    std::vector<int> pattern(size_t(D) * k);
    std::vector<int> uf_parent(2 * k + p);

    int color_limit = single_color ? 1 : D;
    while (true) {  // vertex color assignments
      std::iota(gamma.begin(), gamma.end(), 0);
      do {  // pairings: white slot w pairs black slot gamma[w]
        long loops = 0;
        for (int c = 0; c < D; ++c) {
          // vertex-delta matching for color c: black slot -> white slot
          for (int v = 0; v < p; ++v) {
            int base = k + 2 * v;
            if (colors[v] == c) {
              vd[base - k] = base;
              vd[base - k + 1] = base + 1;
            } else {
              vd[base - k] = base + 1;
              vd[base - k + 1] = base;
            }
          }
          std::fill(visited.begin(), visited.end(), 0);
          // external paths fix the color-c piece of the delta pattern
          for (int l = 0; l < k; ++l) {
            int black = gamma[l];
            while (black >= k) {
              int white = vd[black - k];
              visited[white] = 1;
              black = gamma[white];
            }
            pattern[size_t(c) * k + l] = black;
          }
          // remaining internal whites close into index loops
          for (int w = k; w < W; ++w) {
            if (visited[w]) continue;
            int cur = w;
            do {
              visited[cur] = 1;
              cur = vd[gamma[cur] - k];
            } while (cur != w);
            ++loops;
          }
        }
        long expo = long(p) * (D - 1) - long(W) * (D - 1) + loops;
        sums.full[p][pattern][expo] += 1;

        // diagram connectivity over 2k external nodes + p vertex nodes
        std::iota(uf_parent.begin(), uf_parent.end(), 0);
        auto find = [&](int x) {
          while (uf_parent[x] != x) x = uf_parent[x] = uf_parent[uf_parent[x]];
          return x;
        };
        auto node_of_white = [&](int w) { return w < k ? w : 2 * k + (w - k) / 2; };
        auto node_of_black = [&](int b) { return b < k ? k + b : 2 * k + (b - k) / 2; };
        for (int w = 0; w < W; ++w) uf_parent[find(node_of_white(w))] = find(node_of_black(gamma[w]));
        int comps = 0;
        for (int x = 0; x < 2 * k + p; ++x) comps += find(x) == x ? 1 : 0;
        if (comps == 1) sums.connected[p][pattern][expo] += 1;
      } while (std::next_permutation(gamma.begin(), gamma.end()));

      if (p == 0) break;
      int v = 0;
      while (v < p && ++colors[v] == color_limit) colors[v++] = 0;
      if (v == p) break;
    }
  }
  return sums;
}

// (-1)^p / p! times the accumulated counts, as a rational function of N.
inline RationalFunctionN order_value(const std::map<long, Int>& counts, int p) {
  std::map<long, Rational> terms;
  Rational f = Rational(1) / factorial(p);
  if (p % 2) f = -f;
  for (const auto& [e, c] : counts) terms[e] = f * Rational(c);
  return RationalFunctionN::from_laurent(terms);
}

using Series = std::vector<RationalFunctionN>;  // index = lambda power

inline Series divide_series(const Series& num, const Series& den) {
  Series out(num.size());
  for (size_t p = 0; p < num.size(); ++p) {
    RationalFunctionN v = num[p];
    for (size_t j = 1; j <= p; ++j) v -= den[j] * out[p - j];
    out[p] = v;  // den[0] == 1
  }
  return out;
}

}  // namespace detail

struct OracleRun {
  CumulantSeries series;               // rescaled K(B, N), exact per lambda order
  bool connected_check_passed = true;  // moment-cumulant subtraction == connected-diagram sum
};

inline OracleRun run_perturbative(const FeynmanConfig& cfg) {
  const ColoredGraph& b = cfg.external_graph;
  int D = cfg.D, k = b.k, m = cfg.max_order;
  if (b.D != D) throw ValidationError("external graph color count must match D");
  if (k > 2) throw ValidationError("perturbative cumulants support k <= 2");
  if (m > 3) throw BudgetError("perturbative order over budget", factorial(k + 2 * m).str());
  Int cost = factorial(k + 2 * m);
  for (int j = 0; j < m; ++j) cost *= cfg.single_color ? 1 : D;
  if (cost > cfg.budget) throw BudgetError("pairing enumeration over budget", cost.str());

  auto sums = detail::wick_sums(D, k, m, cfg.single_color);
  auto vac = detail::wick_sums(D, 0, m, cfg.single_color);

  // partition-function series Z_p (single empty pattern)
  detail::Series z(m + 1, RationalFunctionN(0));
  for (int p = 0; p <= m; ++p) {
    std::vector<int> empty_key;
    auto it = vac.full[p].find(empty_key);
    if (it != vac.full[p].end()) z[p] = detail::order_value(it->second, p);
  }

  // collect all patterns appearing at any order
  std::set<std::vector<int>> patterns;
  for (int p = 0; p <= m; ++p)
    for (const auto& [key, counts] : sums.full[p]) {
      (void)counts;
      patterns.insert(key);
    }

  std::map<std::vector<int>, detail::Series> moments;  // Z-normalized, per pattern
  for (const auto& key : patterns) {
    detail::Series u(m + 1, RationalFunctionN(0));
    for (int p = 0; p <= m; ++p) {
      auto it = sums.full[p].find(key);
      if (it != sums.full[p].end()) u[p] = detail::order_value(it->second, p);
    }
    moments[key] = detail::divide_series(u, z);
  }

  // cumulant extraction
  std::map<std::vector<int>, detail::Series> kappa = moments;
  if (k == 2) {
    // two-point function of the same measure, for the moment-cumulant subtraction
    auto g_sums = detail::wick_sums(D, 1, m, cfg.single_color);
    detail::Series g_num(m + 1, RationalFunctionN(0));
    for (int p = 0; p <= m; ++p) {
      std::vector<int> key(D, 0);
      auto it = g_sums.full[p].find(key);
      if (it != g_sums.full[p].end()) g_num[p] = detail::order_value(it->second, p);
    }
    detail::Series g = detail::divide_series(g_num, z);
    detail::Series g_sq(m + 1, RationalFunctionN(0));
    for (int p = 0; p <= m; ++p)
      for (int j = 0; j <= p; ++j) g_sq[p] += g[j] * g[p - j];

    std::vector<int> id_key(size_t(D) * 2), swap_key(size_t(D) * 2);
    for (int c = 0; c < D; ++c) {
      id_key[size_t(c) * 2] = 0;
      id_key[size_t(c) * 2 + 1] = 1;
      swap_key[size_t(c) * 2] = 1;
      swap_key[size_t(c) * 2 + 1] = 0;
    }
    for (auto* key : {&id_key, &swap_key}) {
      auto it = kappa.find(*key);
      if (it == kappa.end()) it = kappa.emplace(*key, detail::Series(m + 1, RationalFunctionN(0))).first;
      for (int p = 0; p <= m; ++p) it->second[p] -= g_sq[p];
    }
  }

  // direct connected-diagram sums must reproduce the subtraction exactly
  bool consistent = true;
  {
    std::set<std::vector<int>> all_keys = patterns;
    for (const auto& [key, series] : kappa) {
      (void)series;
      all_keys.insert(key);
    }
    for (const auto& key : all_keys) {
      for (int p = 0; p <= m; ++p) {
        RationalFunctionN direct(0);
        auto it = sums.connected[p].find(key);
        if (it != sums.connected[p].end()) direct = detail::order_value(it->second, p);
        RationalFunctionN subtracted(0);
        auto kt = kappa.find(key);
        if (kt != kappa.end()) subtracted = kt->second[p];
        if (!(direct == subtracted)) consistent = false;
      }
    }
  }

  // isolate the target graph's delta pattern and rescale
  std::vector<int> target(size_t(D) * k);
  for (int c = 0; c < D; ++c)
    for (int l = 0; l < k; ++l) target[size_t(c) * k + l] = b.beta.perms[c](l);

  OracleRun run;
  run.connected_check_passed = consistent;
  run.series.graph = b;
  run.series.D = D;
  run.series.max_lambda_power = m;
  run.series.source = "oracle";
  auto it = kappa.find(target);
  for (int p = 0; p <= m; ++p) {
    RationalFunctionN raw = it == kappa.end() ? RationalFunctionN(0) : it->second[p];
    run.series.coefficients[p] = rescale_cumulant(raw, b, b.connected_components());
    run.series.terms_evaluated += 1;
  }
  return run;
}

inline CumulantSeries perturbative_cumulant(const FeynmanConfig& cfg) {
  return run_perturbative(cfg).series;
}

struct UniversalityReport {
  int orders = 0;
  Rational covariance_series_limit;  // truncated large-N covariance
  Rational covariance_closed_form;
  Rational difference_abs;
  Rational next_order_estimate;  // first dropped melonic term
  bool degrees_ok = true;        // every lambda coefficient has N-degree <= 0
};

// Compares the large-N limit of the assembled dipole series against the
// melonic closed form and verifies the proper-uniform-bound scaling on every
// computed coefficient.
inline UniversalityReport universality_check(const ColoredGraph& b, int D, const Rational& lambda,
                                             int m = 2) {
  if (!b.is_dipole()) throw ValidationError("covariance limit is defined for the dipole");
  if (abs_rational(lambda) >= critical_constant(D))
    throw ValidationError("|lambda| must be below the critical constant 1/(8D)");
  CumulantSeries series = assemble_series(b, D, m);
  UniversalityReport rep;
  rep.orders = m;
  Rational lam_pow = 1;
  for (int p = 0; p <= m; ++p) {
    const RationalFunctionN& coeff = series.coefficients.at(p);
    if (!coeff.is_zero()) {
      auto [deg, lead] = coeff.large_n();
      if (deg > 0) rep.degrees_ok = false;
      if (deg == 0) rep.covariance_series_limit += lead * lam_pow;
    }
    lam_pow *= lambda;
  }
  rep.covariance_closed_form =
      melonic_closed_form(D, lambda, Rational(1, Int("100000000000000000000")));
  rep.difference_abs = abs_rational(rep.covariance_series_limit - rep.covariance_closed_form);
  rep.next_order_estimate = abs_rational(melonic_coefficient(D, m + 1) * lam_pow);
  return rep;
}

}  // namespace largen
