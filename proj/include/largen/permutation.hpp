#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "largen/errors.hpp"

namespace largen {

// Permutation of {1..k}, stored 0-based: images[i] = sigma(i+1) - 1.
// Cycle notation I/O follows the convention "(1,2)(3)(4)" with explicit fixed
// points, cycles sorted by their smallest element and each cycle starting at
// its smallest element.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= int(img_.size()) || seen[v])
        throw ValidationError("permutation images are not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int k) {
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  // Transposition (a b), 1-based.
  static Permutation transposition(int k, int a, int b) {
    Permutation p = identity(k);
    p.img_[a - 1] = b - 1;
    p.img_[b - 1] = a - 1;
    return p;
  }

  int size() const { return int(img_.size()); }
  int operator()(int i) const { return img_[i]; }  // 0-based
  const std::vector<int>& images() const { return img_; }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  int cycle_count() const {
    std::vector<bool> seen(img_.size(), false);
    int cycles = 0;
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = img_[j]) seen[j] = true;
    }
    return cycles;
  }

  // Cycle lengths sorted in decreasing order (a partition of k).
  std::vector<int> cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> type;
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
  }

  // Cycles as 1-based element lists, each rotated to start at its smallest
  // element, sorted by smallest element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> cyc;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        cyc.push_back(j + 1);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::string to_cycle_string() const {
    if (size() == 0) return "()";
    std::ostringstream os;
    for (const auto& cyc : cycles()) {
      os << '(';
      for (size_t i = 0; i < cyc.size(); ++i) {
        if (i) os << ',';
        os << cyc[i];
      }
      os << ')';
    }
    return os.str();
  }

  // Parse cycle notation. If k >= 0 the permutation acts on {1..k} and
  // elements not mentioned are fixed points; otherwise k is the largest
  // element mentioned.
  static Permutation parse_cycles(const std::string& text, int k = -1) {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    int max_elem = 0;
    while (pos < text.size()) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
      if (pos >= text.size()) break;
      if (text[pos] != '(') throw ValidationError("expected '(' at position " + std::to_string(pos) + " in '" + text + "'");
      size_t close = text.find(')', pos);
      if (close == std::string::npos) throw ValidationError("unbalanced '(' in '" + text + "'");
      std::string inner = text.substr(pos + 1, close - pos - 1);
      std::vector<int> cyc;
      std::istringstream is(inner);
      std::string tok;
      while (std::getline(is, tok, ',')) {
        try {
          cyc.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw ValidationError("bad element '" + tok + "' in cycle notation");
        }
        if (cyc.back() < 1) throw ValidationError("cycle elements are 1-based");
        max_elem = std::max(max_elem, cyc.back());
      }
      if (!inner.empty() && cyc.empty()) throw ValidationError("empty cycle in '" + text + "'");
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      pos = close + 1;
    }
    if (k < 0) k = max_elem;
    if (max_elem > k) throw ValidationError("cycle element exceeds permutation size");
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(k, false);
    for (const auto& cyc : cycles) {
      for (size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i] - 1, to = cyc[(i + 1) % cyc.size()] - 1;
        if (used[from]) throw ValidationError("element " + std::to_string(from + 1) + " appears twice");
        used[from] = true;
        img[from] = to;
      }
    }
    return Permutation(std::move(img));
  }

private:
  std::vector<int> img_;
};

// compose(a, b) = a after b: result(l) = a(b(l)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ValidationError("composing permutations of different sizes");
  std::vector<int> img(a.size());
  for (int i = 0; i < a.size(); ++i) img[i] = a(b(i));
  return Permutation(std::move(img));
}

inline int cycle_count(const Permutation& p) { return p.cycle_count(); }

// Visit all k! permutations in lexicographic image order.
template <typename F>
void for_each_permutation(int k, F&& f) {
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 0);
  do {
    f(Permutation(std::vector<int>(img)));
  } while (std::next_permutation(img.begin(), img.end()));
}

inline std::vector<Permutation> all_permutations(int k) {
  std::vector<Permutation> out;
  for_each_permutation(k, [&](Permutation p) { out.push_back(std::move(p)); });
  return out;
}

// D-tuple of permutations over the same k elements; doubles as the
// connectivity encoding of a bipartite D-colored graph with labelled
// vertices 1..k (white) and 1..k (black): color-c edge from black l to
// white perms[c](l).
struct PermTuple {
  std::vector<Permutation> perms;

  PermTuple() = default;
  explicit PermTuple(std::vector<Permutation> ps) : perms(std::move(ps)) {
    for (const auto& p : perms)
      if (p.size() != perms.front().size())
        throw ValidationError("permutations in a tuple must share k");
  }

  static PermTuple identities(int d, int k) {
    return PermTuple(std::vector<Permutation>(d, Permutation::identity(k)));
  }

  int d() const { return int(perms.size()); }
  int k() const { return perms.empty() ? 0 : perms.front().size(); }

  friend bool operator==(const PermTuple& a, const PermTuple& b) { return a.perms == b.perms; }
  friend bool operator<(const PermTuple& a, const PermTuple& b) { return a.perms < b.perms; }
};

namespace detail {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};
}  // namespace detail

// Number of connected components of the 2k-vertex graph with a color-c edge
// from black vertex l to white vertex perms[c](l), for every l and c.
inline int tuple_graph_components(const PermTuple& t) {
  int k = t.k();
  if (k == 0) return 0;
  detail::UnionFind uf(2 * k);
  for (const auto& p : t.perms)
    for (int l = 0; l < k; ++l) uf.unite(k + l, p(l));  // black l is node k+l
  int comps = 0;
  for (int v = 0; v < 2 * k; ++v)
    if (uf.find(v) == v) ++comps;
  return comps;
}

// Visit all k!^D tuples.
template <typename F>
void for_each_perm_tuple(int d, int k, F&& f) {
  std::vector<Permutation> basis = all_permutations(k);
  std::vector<size_t> idx(d, 0);
  while (true) {
    std::vector<Permutation> ps;
    ps.reserve(d);
    for (int c = 0; c < d; ++c) ps.push_back(basis[idx[c]]);
    f(PermTuple(std::move(ps)));
    int c = 0;
    while (c < d && ++idx[c] == basis.size()) idx[c++] = 0;
    if (c == d) break;
  }
}

}  // namespace largen
