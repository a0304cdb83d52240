#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "largen/enumeration.hpp"
#include "largen/permutation.hpp"
#include "largen/plane_tree.hpp"

namespace largen {

namespace detail {

// Dense S_k tables: composition, inverse and cycle count by permutation index.
struct SymmetricGroupTables {
  int k = 0;
  std::vector<Permutation> perms;
  std::vector<int> inv;
  std::vector<int> cyc;
  std::vector<int> mul;  // mul[a * size + b] = index of perms[a] o perms[b]
  size_t size = 0;

  explicit SymmetricGroupTables(int k_) : k(k_) {
    perms = all_permutations(k);
    size = perms.size();
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < size; ++i) index[perms[i].images()] = int(i);
    inv.resize(size);
    cyc.resize(size);
    mul.resize(size * size);
    for (size_t a = 0; a < size; ++a) {
      inv[a] = index.at(perms[a].inverse().images());
      cyc[a] = perms[a].cycle_count();
      for (size_t b = 0; b < size; ++b)
        mul[a * size + b] = index.at(compose(perms[a], perms[b]).images());
    }
  }

  int product(int a, int b) const { return mul[a * size + b]; }
};

}  // namespace detail

struct Prop1Report {
  int k = 0;
  uint64_t checked = 0;
  uint64_t saturated = 0;
  // counterexample triples printed as (xi, sigma, tau) cycle strings
  std::vector<std::string> counterexamples;
};

// Exhaustive check of C(tau sigma^-1) + C(tau xi) <= C(xi^-1 sigma^-1) + k
// over all of S_k^3.
inline Prop1Report check_prop1(int k) {
  if (k < 1 || k > 6) throw ValidationError("check_prop1 supports 1 <= k <= 6");
  detail::SymmetricGroupTables tab(k);
  size_t m = tab.size;
  Prop1Report rep;
  rep.k = k;
  for (size_t s = 0; s < m; ++s) {
    int inv_s = tab.inv[s];
    for (size_t x = 0; x < m; ++x) {
      int rhs = tab.cyc[tab.product(tab.inv[x], inv_s)] + k;
      for (size_t t = 0; t < m; ++t) {
        int lhs = tab.cyc[tab.product(int(t), inv_s)] + tab.cyc[tab.product(int(t), int(x))];
        ++rep.checked;
        if (lhs > rhs)
          rep.counterexamples.push_back("(xi=" + tab.perms[x].to_cycle_string() +
                                        ", sigma=" + tab.perms[s].to_cycle_string() +
                                        ", tau=" + tab.perms[t].to_cycle_string() + ")");
        else if (lhs == rhs)
          ++rep.saturated;
      }
    }
  }
  return rep;
}

// Sampled variant of the same inequality for larger k.
inline Prop1Report check_prop1_sampled(int k, int samples, uint64_t seed) {
  Prop1Report rep;
  rep.k = k;
  std::mt19937_64 rng(seed);
  auto rand_perm = [&]() {
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
  };
  for (int i = 0; i < samples; ++i) {
    Permutation xi = rand_perm(), sigma = rand_perm(), tau = rand_perm();
    int lhs = compose(tau, sigma.inverse()).cycle_count() + compose(tau, xi).cycle_count();
    int rhs = compose(xi.inverse(), sigma.inverse()).cycle_count() + k;
    ++rep.checked;
    if (lhs > rhs)
      rep.counterexamples.push_back("(xi=" + xi.to_cycle_string() + ", sigma=" +
                                    sigma.to_cycle_string() + ", tau=" + tau.to_cycle_string() + ")");
    else if (lhs == rhs)
      ++rep.saturated;
  }
  return rep;
}

// All distinct external-face tuples xi realizable by plane trees with n up to
// n_max vertices and cilia on vertices 1..k. Faces never read edge
// orientations, so orientation classes suffice.
inline std::set<PermTuple> realizable_xi_tuples(int D, int k, int n_max, Int budget = Int(1) << 32) {
  if (k < 1) throw ValidationError("realizable_xi_tuples needs k >= 1");
  std::set<PermTuple> out;
  TreeEnumOptions opts;
  opts.distinct_orientations = false;
  opts.budget = budget;
  for (int n = k; n <= n_max; ++n) {
    enumerate_trees(n, k, D, opts, [&](const PlaneTree& t) {
      out.insert(faces(t).xi);
    });
  }
  return out;
}

struct LemmaFacesReport {
  int D = 0, k = 0, n_max = 0;
  uint64_t xi_tuples = 0;
  uint64_t checked = 0;
  uint64_t saturated = 0;
  std::vector<std::string> counterexamples;
};

// Exhaustive check of
//   sum_c C(tau_c sigma_c^-1) - sum_c C(xi_c) + sum_c C(tau_c xi_c)
//     <= (D+1) k - C(B_sigma)
// over every realizable xi (from enumerated trees with n <= n_max) and every
// (sigma, tau) in (S_k^D)^2.
inline LemmaFacesReport check_lemma_faces(int D, int k, int n_max, Int budget = Int(1) << 33) {
  if (k < 1 || k > 4) throw ValidationError("check_lemma_faces supports 1 <= k <= 4");
  detail::SymmetricGroupTables tab(k);
  size_t m = tab.size;
  std::set<PermTuple> xis = realizable_xi_tuples(D, k, n_max);

  Int predicted = Int(xis.size());
  for (int c = 0; c < 2 * D; ++c) predicted *= Int(m);
  if (predicted > budget)
    throw BudgetError("lemma-faces sweep over budget", predicted.str());

  // index form of the xi tuples and their cycle sums
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < m; ++i) index[tab.perms[i].images()] = int(i);
  std::vector<std::vector<int>> xi_idx;
  std::vector<int> xi_cycles;
  for (const auto& xi : xis) {
    std::vector<int> row;
    int cycles = 0;
    for (const auto& p : xi.perms) {
      row.push_back(index.at(p.images()));
      cycles += p.cycle_count();
    }
    xi_idx.push_back(std::move(row));
    xi_cycles.push_back(cycles);
  }

  LemmaFacesReport rep;
  rep.D = D;
  rep.k = k;
  rep.n_max = n_max;
  rep.xi_tuples = xis.size();

  // odometers over sigma and tau tuples
  std::vector<int> sig(D, 0);
  while (true) {
    std::vector<Permutation> sig_perms;
    for (int c = 0; c < D; ++c) sig_perms.push_back(tab.perms[sig[c]]);
    int comp = tuple_graph_components(PermTuple(sig_perms));
    std::vector<int> inv_sig(D);
    for (int c = 0; c < D; ++c) inv_sig[c] = tab.inv[sig[c]];

    std::vector<int> tau(D, 0);
    while (true) {
      int sum_tau_sig = 0;
      for (int c = 0; c < D; ++c) sum_tau_sig += tab.cyc[tab.product(tau[c], inv_sig[c])];
      int rhs = (D + 1) * k - comp;
      for (size_t xi = 0; xi < xi_idx.size(); ++xi) {
        int lhs = sum_tau_sig - xi_cycles[xi];
        for (int c = 0; c < D; ++c) lhs += tab.cyc[tab.product(tau[c], xi_idx[xi][c])];
        ++rep.checked;
        if (lhs > rhs) {
          std::string desc = "(xi#" + std::to_string(xi) + ", sigma=[";
          for (int c = 0; c < D; ++c) desc += tab.perms[sig[c]].to_cycle_string();
          desc += "], tau=[";
          for (int c = 0; c < D; ++c) desc += tab.perms[tau[c]].to_cycle_string();
          desc += "])";
          rep.counterexamples.push_back(desc);
        } else if (lhs == rhs) {
          ++rep.saturated;
        }
      }
      int c = 0;
      while (c < D && ++tau[c] == int(m)) tau[c++] = 0;
      if (c == D) break;
    }
    int c = 0;
    while (c < D && ++sig[c] == int(m)) sig[c++] = 0;
    if (c == D) break;
  }
  return rep;
}

}  // namespace largen
