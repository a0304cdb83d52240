#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "largen/decorated_tree.hpp"
#include "largen/plane_tree.hpp"
#include "largen/rational.hpp"

namespace largen {

// Exact stream size of enumerate_trees for fixed cilia: (2D)^(n-1) * (2n+k-3)! / (n+k-1)!
// (single tree for n = 1). `orientation_classes` counts with orientations
// factored out, i.e. divided by 2^(n-1).
inline Int count_trees_formula(int n, int k, int D, bool orientation_classes = false) {
  if (n < 1 || k < 0 || k > n) throw ValidationError("need n >= 1 and 0 <= k <= n");
  if (n == 1) return 1;
  Int per_edge = orientation_classes ? Int(D) : Int(2 * D);
  Int count = 1;
  for (int i = 0; i < n - 1; ++i) count *= per_edge;
  return count * factorial(2 * n + k - 3) / factorial(n + k - 1);
}

// Loop-insertion stream size: D^s * (2n-2+k)(2n-2+k+1)...(2n-2+k+2s-1).
inline Int count_loop_insertions_formula(int n, int k, int s, int D) {
  Int count = 1;
  long L = 2 * n - 2 + k;
  for (int j = 0; j < 2 * s; ++j) count *= Int(L + j);
  for (int j = 0; j < s; ++j) count *= D;
  return count;
}

namespace detail {

// All permutations of {0..m-1}, flattened, cached per size.
inline const std::vector<int>& permutation_table(int m) {
  static std::vector<std::vector<int>> tables;
  if (m >= int(tables.size())) tables.resize(m + 1);
  auto& tab = tables[m];
  if (tab.empty()) {
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    do {
      tab.insert(tab.end(), perm.begin(), perm.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (m == 0) tab.push_back(-1);  // sentinel so the table is non-empty
  }
  return tab;
}

inline long perm_count(int m) {
  long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// Prufer decode into an edge list (endpoints with a < b, sorted).
inline std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> used(n, false);
  std::vector<int> deg = degree;
  for (int x : seq) {
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1 && !used[v]) {
        leaf = v;
        break;
      }
    used[leaf] = true;
    --deg[x];
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
  }
  int u = -1, v = -1;
  for (int w = 0; w < n; ++w)
    if (!used[w] && deg[w] == 1) (u < 0 ? u : v) = w;
  edges.push_back({std::min(u, v), std::max(u, v)});
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace detail

struct TreeEnumOptions {
  bool distinct_orientations = true;  // if false, orientation classes only
  Int budget = Int(1) << 34;          // refuse work beyond this many trees
};

// Enumerate every plane tree with n labeled vertices, colored oriented edges
// and one cilium on each of the vertices 1..k (the fixed cilia tuple). The
// callback receives a reference that is only valid during the call; trees are
// mutated in place between calls. Returns the number of trees visited.
template <typename F>
uint64_t enumerate_trees(int n, int k, int D, const TreeEnumOptions& opts, F&& f) {
  if (n < 1) throw ValidationError("n >= 1 required");
  if (k < 0 || k > n) throw ValidationError("0 <= k <= n required");
  if (D < 1) throw ValidationError("D >= 1 required");
  Int predicted = count_trees_formula(n, k, D, !opts.distinct_orientations);
  if (predicted > opts.budget)
    throw BudgetError("tree enumeration over budget", predicted.str());

  PlaneTree t;
  t.n = n;
  t.D = D;
  t.rotation.assign(n, {});
  uint64_t count = 0;

  if (n == 1) {
    if (k == 1) {
      Slot s;
      s.id = 0;
      s.is_cilium = true;
      t.rotation[0].push_back(s);
      t.next_cilium_id = 1;
    }
    f(std::as_const(t));
    return 1;
  }

  t.edges.assign(n - 1, {});
  for (int m = 0; m <= n - 2; ++m) detail::permutation_table(m);  // warm the caches

  std::vector<int> prufer(std::max(0, n - 2), 0);
  std::vector<std::vector<int>> incident(n);
  std::vector<long> rot_idx(n), rot_max(n);
  std::vector<int> gap_idx(k), color_digits(n - 1), orient_digits(n - 1);

  while (true) {  // over abstract trees
    auto edge_list = detail::prufer_decode(prufer, n);
    for (auto& v : incident) v.clear();
    for (int i = 0; i < n - 1; ++i) {
      t.edges[i].a = edge_list[i].first;
      t.edges[i].b = edge_list[i].second;
      incident[edge_list[i].first].push_back(i);
      incident[edge_list[i].second].push_back(i);
    }
    for (int v = 0; v < n; ++v) {
      rot_idx[v] = 0;
      rot_max[v] = detail::perm_count(int(incident[v].size()) - 1);
    }
    std::fill(gap_idx.begin(), gap_idx.end(), 0);

    while (true) {  // over rotations x cilium gaps
      // materialize rotations: incident[v][0] stays first, the rest permuted
      for (int v = 0; v < n; ++v) {
        auto& rot = t.rotation[v];
        rot.clear();
        int d = int(incident[v].size());
        rot.push_back({incident[v][0], false});
        const auto& tab = detail::permutation_table(d - 1);
        const int* perm = tab.data() + rot_idx[v] * (d - 1);
        for (int j = 0; j < d - 1; ++j) rot.push_back({incident[v][1 + perm[j]], false});
      }
      t.next_cilium_id = 0;
      for (int v = 0; v < k; ++v) {
        Slot s;
        s.id = t.next_cilium_id++;
        s.is_cilium = true;
        // gap g: immediately after the half-edge at rotation index g
        t.rotation[v].insert(t.rotation[v].begin() + gap_idx[v] + 1, s);
      }

      // colors x orientations odometers, mutating in place
      for (int i = 0; i < n - 1; ++i) {
        t.edges[i].color = 0;
        t.edges[i].a_to_b = true;
        color_digits[i] = 0;
        orient_digits[i] = 0;
      }
      while (true) {  // colors
        if (opts.distinct_orientations) {
          while (true) {  // orientations
            f(std::as_const(t));
            ++count;
            int i = 0;
            while (i < n - 1) {
              orient_digits[i] ^= 1;
              t.edges[i].a_to_b = orient_digits[i] == 0;
              if (orient_digits[i] == 1) break;
              ++i;
            }
            if (i == n - 1) break;
          }
        } else {
          f(std::as_const(t));
          ++count;
        }
        int i = 0;
        while (i < n - 1) {
          if (++color_digits[i] < D) {
            t.edges[i].color = color_digits[i];
            break;
          }
          color_digits[i] = 0;
          t.edges[i].color = 0;
          ++i;
        }
        if (i == n - 1) break;
      }

      // advance cilium gaps, then rotations
      int v = 0;
      while (v < k) {
        if (++gap_idx[v] < int(incident[v].size())) break;
        gap_idx[v] = 0;
        ++v;
      }
      if (v < k) continue;
      v = 0;
      while (v < n) {
        if (++rot_idx[v] < rot_max[v]) break;
        rot_idx[v] = 0;
        ++v;
      }
      if (v == n) break;
    }

    // next Prufer sequence
    int i = 0;
    while (i < n - 2) {
      if (++prufer[i] < n) break;
      prufer[i] = 0;
      ++i;
    }
    if (n == 2 || i == n - 2) break;
  }
  return count;
}

// Enumerate all ordered loop-insertion lists for a walk of length L: s pairs
// of positions, each indexing the walk as extended by the insertions before
// it, together with a color per pair.
template <typename F>
Int enumerate_loop_insertions(int walk_length, int s, int D, F&& f) {
  if (s < 0) throw ValidationError("loop count must be >= 0");
  std::vector<LoopInsertion> list(s);
  Int count = 0;
  auto rec = [&](auto&& self, int p, int L) -> void {
    if (p == s) {
      f(std::as_const(list));
      ++count;
      return;
    }
    for (int pos1 = 1; pos1 <= L; ++pos1)
      for (int pos2 = 1; pos2 <= L + 1; ++pos2)
        for (int c = 1; c <= D; ++c) {
          list[p] = {pos1, pos2, c};
          self(self, p + 1, L + 2);
        }
  };
  rec(rec, 0, walk_length);
  return count;
}

}  // namespace largen
