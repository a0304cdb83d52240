#pragma once

#include <string>
#include <vector>

#include "largen/plane_tree.hpp"

namespace largen {

// Insert a cilium at the given 1-based position of the tree's current walk:
// the new cilium takes over that walk position and everything behind shifts
// by one step. Returns the new cilium's id; the caller must recompute walks.
inline int insert_cilium_at(PlaneTree& t, const ContourWalk& walk, int pos_1based) {
  if (pos_1based < 1 || pos_1based > walk.length())
    throw ValidationError("cilium insertion position " + std::to_string(pos_1based) +
                          " outside walk of length " + std::to_string(walk.length()));
  const WalkStep& st = walk.steps[pos_1based - 1];
  int at = st.cause_slot + 1;  // directly after the slot that produced the entry
  Slot s;
  s.id = t.next_cilium_id++;
  s.is_cilium = true;
  t.rotation[st.vertex].insert(t.rotation[st.vertex].begin() + at, s);
  return s.id;
}

struct LoopInsertion {
  int pos1 = 0;  // 1-based position in the walk at the moment of insertion
  int pos2 = 0;  // 1-based position in the walk extended by the first cilium
  int color = 0; // 1-based color
};

// Plane tree with external edges (tau) and optional loop edges. All derived
// data (walk of the augmented tree, xi', tau~, tau', the m/t index maps and
// face counts) is kept consistent by the constructors below.
struct DecoratedTree {
  PlaneTree base;
  PermTuple tau;   // external-edge permutations over the base cilia

  PlaneTree augmented;            // base plus loop cilia
  std::vector<LoopInsertion> insertions;
  std::vector<int> loop_cilium_ids;      // 2 per insertion, in insertion order

  ContourWalk walk;               // walk of `augmented`
  FaceSet face_set;               // faces of `augmented`; face_set.xi is xi'
  PermTuple xi;                   // xi of the base tree
  PermTuple tau_tilde;            // loop cilia reconnected trivially
  PermTuple tau_prime;            // loop cilia swapped pairwise on the loop color
  std::vector<int> m_map;         // base cilium l -> walk-order index, 0-based
  std::vector<int> t_first, t_second;  // per loop: walk-order indices of its cilia
  std::vector<std::pair<int, int>> loop_vertices;  // per loop: host vertices

  int n() const { return base.n; }
  int D() const { return base.D; }
  int k() const { return tau.k(); }
  int q() const { return int(insertions.size()); }

  // |F| of the tree with external edges and loop edges.
  int face_count() const {
    int s = int(face_set.internal_faces.size());
    for (int c = 0; c < D(); ++c) s += compose(tau_prime.perms[c], face_set.xi.perms[c]).cycle_count();
    return s;
  }

  // |F| after step 1 only (trivial reconnection); equals the undecorated
  // face count whatever the insertions.
  int face_count_tilde() const {
    int s = int(face_set.internal_faces.size());
    for (int c = 0; c < D(); ++c) s += compose(tau_tilde.perms[c], face_set.xi.perms[c]).cycle_count();
    return s;
  }
};

inline DecoratedTree attach_external(const PlaneTree& t, const PermTuple& tau) {
  DecoratedTree d;
  d.base = t;
  d.augmented = t;
  d.walk = contour_walk(d.augmented);
  int k = d.walk.k();
  if (tau.d() != t.D || tau.k() != k)
    throw ValidationError("tau must be a D-tuple of permutations over the k cilia");
  d.tau = tau;
  d.face_set = faces(d.augmented, d.walk);
  d.xi = d.face_set.xi;
  d.tau_tilde = tau;
  d.tau_prime = tau;
  d.m_map.resize(k);
  for (int l = 0; l < k; ++l) d.m_map[l] = l;
  return d;
}

// Apply loop-edge insertions in order; each position indexes the walk as
// already extended by the previous insertions, and insertion p pairs its two
// cilia by an unoriented loop edge of the given color.
inline DecoratedTree insert_loops(const DecoratedTree& in, const std::vector<LoopInsertion>& insertions) {
  DecoratedTree d = in;
  for (const auto& ins : insertions) {
    if (ins.color < 1 || ins.color > d.D())
      throw ValidationError("loop-edge color out of range");
    int id1 = insert_cilium_at(d.augmented, d.walk, ins.pos1);
    d.walk = contour_walk(d.augmented);
    int id2 = insert_cilium_at(d.augmented, d.walk, ins.pos2);
    d.walk = contour_walk(d.augmented);
    d.insertions.push_back(ins);
    d.loop_cilium_ids.push_back(id1);
    d.loop_cilium_ids.push_back(id2);
  }
  if (insertions.empty()) return d;

  d.face_set = faces(d.augmented, d.walk);

  // Walk-order index of every cilium id in the augmented tree.
  auto walk_index_of = [&](int cilium_id) {
    for (size_t l = 0; l < d.walk.cilium_ids.size(); ++l)
      if (d.walk.cilium_ids[l] == cilium_id) return int(l);
    throw ValidationError("cilium id missing from walk");
  };

  // Base cilium ids in base walk order.
  ContourWalk base_walk = contour_walk(d.base);
  int k = base_walk.k();
  d.m_map.resize(k);
  for (int l = 0; l < k; ++l) d.m_map[l] = walk_index_of(base_walk.cilium_ids[l]);
  int s = d.q();
  d.t_first.resize(s);
  d.t_second.resize(s);
  d.loop_vertices.assign(s, {-1, -1});
  for (int p = 0; p < s; ++p) {
    d.t_first[p] = walk_index_of(d.loop_cilium_ids[2 * p]);
    d.t_second[p] = walk_index_of(d.loop_cilium_ids[2 * p + 1]);
    d.loop_vertices[p] = {d.walk.steps[d.walk.cilium_positions[d.t_first[p]]].vertex,
                          d.walk.steps[d.walk.cilium_positions[d.t_second[p]]].vertex};
  }

  int k_aug = k + 2 * s;
  std::vector<int> tilde(k_aug), prime(k_aug);
  for (int r = 0; r < k_aug; ++r) tilde[r] = prime[r] = r;
  std::vector<Permutation> tau_tilde, tau_prime;
  for (int c = 0; c < d.D(); ++c) {
    std::vector<int> tt = tilde, tp = prime;
    for (int l = 0; l < k; ++l) {
      tt[d.m_map[l]] = d.m_map[d.tau.perms[c](l)];
      tp[d.m_map[l]] = d.m_map[d.tau.perms[c](l)];
    }
    for (int p = 0; p < s; ++p) {
      if (d.insertions[p].color - 1 == c) {
        tp[d.t_first[p]] = d.t_second[p];
        tp[d.t_second[p]] = d.t_first[p];
      }
    }
    tau_tilde.push_back(Permutation(std::move(tt)));
    tau_prime.push_back(Permutation(std::move(tp)));
  }
  d.tau_tilde = PermTuple(std::move(tau_tilde));
  d.tau_prime = PermTuple(std::move(tau_prime));
  return d;
}

// External faces of the decorated tree: the cycles of tau'_c xi'_c, each face
// the concatenation of strands l -> xi(l) for l, tau xi (l), (tau xi)^2 (l), ...
// Returned as (color, walk-step list) pairs.
inline std::vector<Face> merged_external_faces(const DecoratedTree& d) {
  std::vector<Face> out;
  int k_all = d.face_set.xi.k();
  for (int c = 0; c < d.D(); ++c) {
    const Permutation& xi = d.face_set.xi.perms[c];
    const Permutation& tau = d.tau_prime.perms[c];
    Permutation theta = compose(tau, xi);
    std::vector<bool> seen(k_all, false);
    for (int l0 = 0; l0 < k_all; ++l0) {
      if (seen[l0]) continue;
      Face f;
      f.color = c;
      for (int l = l0; !seen[l]; l = theta(l)) {
        seen[l] = true;
        f.cilia.push_back(l);
        for (const Strand& s : d.face_set.strands)
          if (s.color == c && s.from == l) {
            f.steps.insert(f.steps.end(), s.steps.begin(), s.steps.end());
            break;
          }
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace largen
