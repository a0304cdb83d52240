#pragma once

#include <map>
#include <vector>

#include "largen/permutation.hpp"
#include "largen/rational_function.hpp"

namespace largen {

// Exact Weingarten functions Wg(N, sigma) as rational functions of N, keyed
// by cycle type. Built by inverting the Gram matrix of the monomials
// N^{C(.)}: the entries are the unique solution of
//   sum_{tau in S_k} N^{C(sigma tau^-1)} Wg(N, tau) = delta_{sigma, id}
// which is the defining relation of the unitary moment formula. No symmetric
// group representation theory is needed, and the result is valid symbolically
// in N.
struct WeingartenTable {
  int k = 0;
  std::map<std::vector<int>, RationalFunctionN> entries;  // cycle type -> Wg

  const RationalFunctionN& operator[](const Permutation& sigma) const {
    auto it = entries.find(sigma.cycle_type());
    if (it == entries.end()) throw ValidationError("permutation size does not match table");
    return it->second;
  }
  const RationalFunctionN& at_type(const std::vector<int>& type) const {
    auto it = entries.find(type);
    if (it == entries.end()) throw ValidationError("unknown cycle type");
    return it->second;
  }
};

inline WeingartenTable weingarten_table(int k) {
  if (k < 1) throw ValidationError("weingarten_table needs k >= 1");
  if (k > 6) throw BudgetError("symbolic Gram solve over budget", (factorial(k) * factorial(k)).str());

  std::vector<Permutation> sk = all_permutations(k);
  // one representative per cycle type
  std::map<std::vector<int>, Permutation> reps;
  for (const auto& p : sk) reps.emplace(p.cycle_type(), p);
  std::vector<std::vector<int>> types;
  std::vector<Permutation> rep_perms;
  for (auto& [t, p] : reps) {
    types.push_back(t);
    rep_perms.push_back(p);
  }
  size_t m = types.size();
  std::map<std::vector<int>, size_t> type_index;
  for (size_t i = 0; i < m; ++i) type_index[types[i]] = i;

  // A[i][j] = sum over tau of type j of N^{C(rep_i tau^-1)}
  std::vector<std::vector<RationalFunctionN>> a(m, std::vector<RationalFunctionN>(m));
  for (size_t i = 0; i < m; ++i) {
    std::vector<std::map<long, Rational>> acc(m);
    for (const auto& tau : sk) {
      size_t j = type_index.at(tau.cycle_type());
      acc[j][compose(rep_perms[i], tau.inverse()).cycle_count()] += 1;
    }
    for (size_t j = 0; j < m; ++j) a[i][j] = RationalFunctionN::from_laurent(acc[j]);
  }
  std::vector<RationalFunctionN> rhs(m);
  std::vector<int> id_type(k, 1);
  rhs[type_index.at(id_type)] = RationalFunctionN(1);

  // Gaussian elimination over the rational-function field.
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    while (piv < m && a[piv][col].is_zero()) ++piv;
    if (piv == m) throw ValidationError("Gram matrix unexpectedly singular");
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    RationalFunctionN inv_pivot = RationalFunctionN(1) / a[col][col];
    for (size_t j = col; j < m; ++j) a[col][j] *= inv_pivot;
    rhs[col] *= inv_pivot;
    for (size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      RationalFunctionN f = a[r][col];
      for (size_t j = col; j < m; ++j) a[r][j] -= f * a[col][j];
      rhs[r] -= f * rhs[col];
    }
  }

  WeingartenTable table;
  table.k = k;
  for (size_t i = 0; i < m; ++i) table.entries[types[i]] = rhs[i];
  return table;
}

// Large-N limit of N^{2k - C(sigma)} Wg(N, sigma): a signed Catalan product
// over the cycles of sigma.
inline Rational wg_asymptotic(const Permutation& sigma) {
  Rational prod = 1;
  for (const auto& cycle : sigma.cycles()) {
    long len = long(cycle.size());
    Rational factor = Rational(binomial(2 * len - 2, len - 1)) / len;
    if (len % 2 == 0) factor = -factor;
    prod *= factor;
  }
  return prod;
}

struct WgBoundRow {
  std::vector<int> cycle_type;
  Rational wg_abs;   // |Wg(N0, sigma)|
  Rational bound;    // 2^{2k} / N0^{2k - C(sigma)}
  bool holds = false;
};

// Evaluates the standard Weingarten bound at a concrete N0 > k for every
// cycle type. The bound is only guaranteed for N large enough; the report
// records whether it already holds at N0.
inline std::vector<WgBoundRow> wg_bound_margin(int k, const Rational& N0,
                                               const WeingartenTable* table = nullptr) {
  if (N0 <= k) throw ValidationError("wg_bound_margin needs N0 > k, away from the Gram poles");
  WeingartenTable local;
  if (!table) {
    local = weingarten_table(k);
    table = &local;
  }
  std::vector<WgBoundRow> rows;
  for (const auto& [type, wg] : table->entries) {
    WgBoundRow row;
    row.cycle_type = type;
    row.wg_abs = abs_rational(wg.eval(N0));
    long c = long(type.size());
    row.bound = pow_rational(Rational(2), 2 * k) / pow_rational(N0, 2 * k - c);
    row.holds = row.wg_abs < row.bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace largen
