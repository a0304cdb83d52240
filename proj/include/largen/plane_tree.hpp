#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "largen/errors.hpp"
#include "largen/permutation.hpp"

namespace largen {

// A slot in a vertex's clockwise rotation: either a half-edge (id = edge
// index) or a cilium (id = cilium serial, unique within the tree).
struct Slot {
  int id = -1;
  bool is_cilium = false;
};

// Labeled plane tree with colored oriented edges and cilia. Vertices are
// 0-based internally and 1-based in every textual form. Base trees carry at
// most one cilium per vertex; loop-edge insertion may add more.
struct PlaneTree {
  struct Edge {
    int a = -1, b = -1;   // endpoints
    int color = 0;        // 0-based internally, 1-based in text
    bool a_to_b = true;   // orientation
  };

  int n = 0;  // vertex count
  int D = 0;  // color count
  std::vector<Edge> edges;
  std::vector<std::vector<Slot>> rotation;  // per vertex, clockwise slot order
  int next_cilium_id = 0;

  int degree(int v) const {
    int d = 0;
    for (const Slot& s : rotation[v])
      if (!s.is_cilium) ++d;
    return d;
  }

  int cilium_count() const {
    int k = 0;
    for (const auto& slots : rotation)
      for (const Slot& s : slots) k += s.is_cilium ? 1 : 0;
    return k;
  }

  int other_endpoint(int edge_id, int v) const {
    const Edge& e = edges[edge_id];
    return e.a == v ? e.b : e.a;
  }

  int slot_of_edge(int v, int edge_id) const {
    for (size_t i = 0; i < rotation[v].size(); ++i)
      if (!rotation[v][i].is_cilium && rotation[v][i].id == edge_id) return int(i);
    throw ValidationError("edge not incident to vertex");
  }

  // Full structural check; the enumerator and parser maintain these
  // invariants, so this is only called on externally supplied trees.
  void validate() const {
    if (n < 1) throw ValidationError("tree needs at least one vertex");
    if (D < 1) throw ValidationError("color count must be >= 1");
    if (int(edges.size()) != n - 1) throw ValidationError("a tree on n vertices has n-1 edges");
    if (int(rotation.size()) != n) throw ValidationError("rotation table size mismatch");
    detail::UnionFind uf(n);
    for (const Edge& e : edges) {
      if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n || e.a == e.b)
        throw ValidationError("bad edge endpoints");
      if (e.color < 0 || e.color >= D) throw ValidationError("edge color out of range");
      uf.unite(e.a, e.b);
    }
    int comps = 0;
    for (int v = 0; v < n; ++v) comps += uf.find(v) == v ? 1 : 0;
    if (comps != 1) throw ValidationError("edges do not form a connected tree");
    std::vector<int> edge_slots(edges.size(), 0);
    for (int v = 0; v < n; ++v)
      for (const Slot& s : rotation[v])
        if (!s.is_cilium) {
          if (s.id < 0 || s.id >= int(edges.size())) throw ValidationError("bad slot edge id");
          if (edges[s.id].a != v && edges[s.id].b != v) throw ValidationError("slot for non-incident edge");
          ++edge_slots[s.id];
        }
    for (int c : edge_slots)
      if (c != 2) throw ValidationError("every edge must appear once at each endpoint");
  }
};

// One entry of the contour walk. `cause_slot` is the slot index in
// rotation[vertex] whose processing emitted this entry (the arrival
// half-edge, or the cilium just passed, or -1 for the standing start of a
// single-vertex tree). `cilium_after` is the id of the cilium passed right
// after this entry, -1 if none; entries with cilium_after >= 0 are the
// flagged steps q_l of the walk.
struct WalkStep {
  int vertex = -1;
  int cause_slot = -1;
  int cilium_after = -1;
};

struct ContourWalk {
  std::vector<WalkStep> steps;
  std::vector<int> cilium_positions;  // 0-based step indices of flagged steps, walk order
  std::vector<int> cilium_ids;        // cilium slot ids in the same order

  int length() const { return int(steps.size()); }
  int k() const { return int(cilium_positions.size()); }

  // Walk-order cilium index (0-based) at a flagged step, -1 otherwise.
  int cilium_index_at(int step) const {
    for (size_t l = 0; l < cilium_positions.size(); ++l)
      if (cilium_positions[l] == step) return int(l);
    return -1;
  }
};

// Contour walk starting at `start_vertex`, about to traverse the half-edge at
// slot `start_half_edge_slot` of its rotation; the canonical walk (used
// everywhere unless stated) starts at vertex 0 and its first half-edge slot.
inline ContourWalk contour_walk_from(const PlaneTree& t, int start_vertex, int start_half_edge_slot) {
  ContourWalk w;
  if (t.n == 1) {
    // All slots are cilia; the walk has one entry per cilium.
    const auto& slots = t.rotation[0];
    for (size_t j = 0; j < slots.size(); ++j) {
      WalkStep s;
      s.vertex = 0;
      s.cause_slot = j == 0 ? -1 : int(j) - 1;
      s.cilium_after = slots[j].id;
      w.steps.push_back(s);
    }
  } else {
    const auto& rot0 = t.rotation[start_vertex];
    int nslots = int(rot0.size());
    if (rot0[start_half_edge_slot].is_cilium)
      throw ValidationError("walk must start at a half-edge slot");
    // Predecessor half-edge slot: the walk's final traversal returns through it.
    int pred = start_half_edge_slot;
    do {
      pred = (pred + nslots - 1) % nslots;
    } while (t.rotation[start_vertex][pred].is_cilium);

    WalkStep first;
    first.vertex = start_vertex;
    first.cause_slot = pred;
    w.steps.push_back(first);
    // Cilia sitting between the predecessor and the first half-edge.
    for (int s = (pred + 1) % nslots; s != start_half_edge_slot; s = (s + 1) % nslots) {
      w.steps.back().cilium_after = rot0[s].id;
      WalkStep dup;
      dup.vertex = start_vertex;
      dup.cause_slot = s;
      w.steps.push_back(dup);
    }

    int total_traversals = 2 * (t.n - 1);
    int v = start_vertex, slot = start_half_edge_slot;
    for (int done = 1; ; ++done) {
      int e = t.rotation[v][slot].id;
      int u = t.other_endpoint(e, v);
      if (done == total_traversals) break;  // closes the cyclic walk at the start entry
      int aslot = t.slot_of_edge(u, e);
      WalkStep st;
      st.vertex = u;
      st.cause_slot = aslot;
      w.steps.push_back(st);
      int s = (aslot + 1) % int(t.rotation[u].size());
      while (t.rotation[u][s].is_cilium) {
        w.steps.back().cilium_after = t.rotation[u][s].id;
        WalkStep dup;
        dup.vertex = u;
        dup.cause_slot = s;
        w.steps.push_back(dup);
        s = (s + 1) % int(t.rotation[u].size());
      }
      v = u;
      slot = s;
    }
  }

  for (size_t q = 0; q < w.steps.size(); ++q)
    if (w.steps[q].cilium_after >= 0) {
      w.cilium_positions.push_back(int(q));
      w.cilium_ids.push_back(w.steps[q].cilium_after);
    }
  return w;
}

inline ContourWalk contour_walk(const PlaneTree& t) {
  if (t.n == 1) return contour_walk_from(t, 0, 0);
  int h0 = 0;
  while (t.rotation[0][h0].is_cilium) ++h0;
  return contour_walk_from(t, 0, h0);
}

// Walk text in the printed convention: entries comma-separated, with a
// semicolon instead of a comma after every flagged entry ("...5;5,6...").
// A flagged final entry yields a trailing semicolon.
inline std::string print_walk(const ContourWalk& w) {
  std::ostringstream os;
  for (size_t q = 0; q < w.steps.size(); ++q) {
    os << (w.steps[q].vertex + 1);
    if (w.steps[q].cilium_after >= 0) os << ';';
    else if (q + 1 < w.steps.size()) os << ',';
  }
  return os.str();
}

inline std::string print_walk(const PlaneTree& t) { return print_walk(contour_walk(t)); }

// Sidecar edge annotation "a-b:c:>" (color c, oriented a->b; '<' for b->a),
// comma-separated, all labels and colors 1-based.
inline std::string print_edge_annotation(const PlaneTree& t) {
  std::vector<std::string> rows;
  for (const auto& e : t.edges) {
    int lo = std::min(e.a, e.b), hi = std::max(e.a, e.b);
    bool lo_to_hi = (e.a == lo) == e.a_to_b;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%d-%d:%d:%c", lo + 1, hi + 1, e.color + 1, lo_to_hi ? '>' : '<');
    rows.push_back(buf);
  }
  std::sort(rows.begin(), rows.end(), [](const std::string& x, const std::string& y) {
    int xa, xb, ya, yb;
    std::sscanf(x.c_str(), "%d-%d", &xa, &xb);
    std::sscanf(y.c_str(), "%d-%d", &ya, &yb);
    return std::pair(xa, xb) < std::pair(ya, yb);
  });
  std::ostringstream os;
  for (size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i];
  return os.str();
}

namespace detail {

struct ParsedWalkEntry {
  int vertex;
  bool flagged;
};

inline std::vector<ParsedWalkEntry> tokenize_walk(const std::string& text) {
  std::vector<ParsedWalkEntry> entries;
  std::string cur;
  auto push = [&](bool flagged, size_t pos) {
    if (cur.empty()) throw ValidationError("empty walk entry at position " + std::to_string(pos));
    int v;
    try {
      v = std::stoi(cur);
    } catch (const std::exception&) {
      throw ValidationError("bad walk entry '" + cur + "' at position " + std::to_string(pos));
    }
    if (v < 1) throw ValidationError("walk vertex labels are 1-based");
    entries.push_back({v - 1, flagged});
    cur.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == ' ' || ch == '(' || ch == ')' || ch == '\t') continue;
    if (ch == ',') push(false, i);
    else if (ch == ';') push(true, i);
    else cur += ch;
  }
  if (!cur.empty()) push(false, text.size());
  if (entries.empty()) throw ValidationError("empty walk");
  return entries;
}

}  // namespace detail

// Rebuild a PlaneTree from its printed walk plus the edge color/orientation
// annotation. parse_walk(print_walk(t), ...) reproduces t for canonical
// walks. Base-tree rule: at most one cilium per vertex.
inline PlaneTree parse_walk(const std::string& text, int D, const std::string& edge_annotation) {
  auto entries = detail::tokenize_walk(text);
  int L = int(entries.size());
  int n = 0;
  for (const auto& e : entries) n = std::max(n, e.vertex + 1);

  PlaneTree t;
  t.n = n;
  t.D = D;
  t.rotation.assign(n, {});

  std::vector<int> cilium_of_vertex(n, -1);
  std::map<std::pair<int, int>, int> edge_ids;
  std::vector<int> stack;  // ancestor chain
  stack.push_back(entries[0].vertex);
  std::vector<bool> seen(n, false);
  seen[entries[0].vertex] = true;

  for (int q = 0; q < L; ++q) {
    int v = entries[q].vertex;
    int u = entries[(q + 1) % L].vertex;
    if (v != stack.back())
      throw ValidationError("walk inconsistent at step " + std::to_string(q + 1));
    if (entries[q].flagged) {
      if (u != v)
        throw ValidationError("cilium at step " + std::to_string(q + 1) + " must repeat the vertex");
      if (cilium_of_vertex[v] >= 0)
        throw ValidationError("vertex " + std::to_string(v + 1) + " carries more than one cilium");
      Slot s;
      s.id = t.next_cilium_id++;
      s.is_cilium = true;
      cilium_of_vertex[v] = s.id;
      t.rotation[v].push_back(s);
      continue;
    }
    if (u == v) throw ValidationError("repeated vertex without cilium at step " + std::to_string(q + 1));
    std::pair<int, int> key{std::min(v, u), std::max(v, u)};
    auto it = edge_ids.find(key);
    if (it == edge_ids.end()) {
      // new edge: u must be unvisited (descend)
      if (seen[u])
        throw ValidationError("walk re-enters vertex " + std::to_string(u + 1) +
                              " through a new edge at step " + std::to_string(q + 1) +
                              "; not a tree walk");
      PlaneTree::Edge e;
      e.a = v;
      e.b = u;
      int id = int(t.edges.size());
      t.edges.push_back(e);
      edge_ids[key] = id;
      t.rotation[v].push_back({id, false});
      t.rotation[u].push_back({id, false});
      seen[u] = true;
      stack.push_back(u);
    } else {
      // must be the ascent through the edge to the parent
      if (stack.size() < 2 || stack[stack.size() - 2] != u)
        throw ValidationError("edge {" + std::to_string(key.first + 1) + "," +
                              std::to_string(key.second + 1) +
                              "} traversed more than twice at step " + std::to_string(q + 1));
      stack.pop_back();
    }
  }
  if (stack.size() != 1)
    throw ValidationError("walk does not close back to its starting vertex");
  if (int(t.edges.size()) != n - 1)
    throw ValidationError("walk visits " + std::to_string(n) + " vertices but traces " +
                          std::to_string(t.edges.size()) + " edges; not a tree");
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw ValidationError("vertex labels must be contiguous 1..n");

  // Apply the annotation.
  if (n > 1) {
    if (edge_annotation.empty()) throw ValidationError("edge annotation required for n > 1");
    std::istringstream is(edge_annotation);
    std::string tok;
    size_t annotated = 0;
    while (std::getline(is, tok, ',')) {
      int a, b, c;
      char dir;
      if (std::sscanf(tok.c_str(), "%d-%d:%d:%c", &a, &b, &c, &dir) != 4)
        throw ValidationError("bad edge annotation '" + tok + "' (want a-b:color:> or a-b:color:<)");
      if (c < 1 || c > D) throw ValidationError("edge color out of range in '" + tok + "'");
      if (dir != '>' && dir != '<') throw ValidationError("bad orientation in '" + tok + "'");
      std::pair<int, int> key{std::min(a, b) - 1, std::max(a, b) - 1};
      auto it = edge_ids.find(key);
      if (it == edge_ids.end())
        throw ValidationError("annotation names edge " + tok + " absent from the walk");
      auto& e = t.edges[it->second];
      e.color = c - 1;
      bool from_a = dir == '>' ? (a - 1 == e.a) : (b - 1 == e.a);
      e.a_to_b = from_a;
      ++annotated;
    }
    if (annotated != t.edges.size())
      throw ValidationError("annotation covers " + std::to_string(annotated) + " of " +
                            std::to_string(t.edges.size()) + " edges");
  }
  return t;
}

// --- faces -----------------------------------------------------------------

struct Face {
  int color = 0;               // 0-based
  std::vector<int> steps;      // 0-based walk step indices, ascending
  std::vector<int> cilia;      // walk-order cilium indices on this face, in face order
};

struct Strand {
  int color = 0;
  int from = 0, to = 0;        // walk-order cilium indices: from -> xi_c(from)
  std::vector<int> steps;
};

struct FaceSet {
  std::vector<Face> internal_faces;
  std::vector<Face> external_faces;
  PermTuple xi;                // external-face permutations, one per color
  std::vector<Strand> strands;

  int total_faces() const { return int(internal_faces.size() + external_faces.size()); }
  int sum_xi_cycles() const {
    int s = 0;
    for (const auto& p : xi.perms) s += p.cycle_count();
    return s;
  }
};

// Color components of the vertex set (restriction to color-c edges); every
// vertex belongs to exactly one component per color.
inline std::vector<std::vector<int>> color_components(const PlaneTree& t) {
  std::vector<std::vector<int>> comp(t.D, std::vector<int>(t.n));
  for (int c = 0; c < t.D; ++c) {
    detail::UnionFind uf(t.n);
    for (const auto& e : t.edges)
      if (e.color == c) uf.unite(e.a, e.b);
    for (int v = 0; v < t.n; ++v) comp[c][v] = uf.find(v);
  }
  return comp;
}

// Faces, strands and the permutations xi_c from the contour walk: the face of
// color c through a vertex collects all walk steps of its color-c component,
// and xi_c sends each cilium to the next one met along that face's walk.
inline FaceSet faces(const PlaneTree& t, const ContourWalk& w) {
  FaceSet fs;
  int k = w.k();
  auto comp = color_components(t);

  std::vector<Permutation> xi;
  for (int c = 0; c < t.D; ++c) {
    // Gather faces of color c keyed by component root.
    std::map<int, Face> by_root;
    for (int q = 0; q < w.length(); ++q) {
      int root = comp[c][w.steps[q].vertex];
      auto& f = by_root[root];
      f.color = c;
      f.steps.push_back(q);
    }
    // Attach cilia in walk order of their positions.
    for (int l = 0; l < k; ++l) {
      int q = w.cilium_positions[l];
      by_root[comp[c][w.steps[q].vertex]].cilia.push_back(l);
    }
    std::vector<int> xi_img(k, -1);
    for (auto& [root, f] : by_root) {
      (void)root;
      if (f.cilia.empty()) {
        fs.internal_faces.push_back(std::move(f));
        continue;
      }
      // Next cilium along the face walk; cilia are already in ascending step
      // order, which is the face walk order.
      int d = int(f.cilia.size());
      for (int i = 0; i < d; ++i) xi_img[f.cilia[i]] = f.cilia[(i + 1) % d];
      // Strands: steps strictly after q_l through q_{xi(l)} inclusive, cyclically.
      for (int i = 0; i < d; ++i) {
        int from = f.cilia[i], to = f.cilia[(i + 1) % d];
        Strand s;
        s.color = c;
        s.from = from;
        s.to = to;
        int q_from = w.cilium_positions[from], q_to = w.cilium_positions[to];
        size_t start = 0;
        while (f.steps[start] != q_from) ++start;
        for (size_t j = (start + 1) % f.steps.size();; j = (j + 1) % f.steps.size()) {
          s.steps.push_back(f.steps[j]);
          if (f.steps[j] == q_to) break;
        }
        fs.strands.push_back(std::move(s));
      }
      fs.external_faces.push_back(std::move(f));
    }
    xi.push_back(k > 0 ? Permutation(std::move(xi_img)) : Permutation());
  }
  fs.xi = PermTuple(std::move(xi));
  return fs;
}

inline FaceSet faces(const PlaneTree& t) { return faces(t, contour_walk(t)); }

// Lean face/xi consistency check for exhaustive sweeps: rebuilds xi_c by
// walk-following with preallocated buffers and verifies the face-count
// identity |F_int| + sum_c C(xi_c) = D + (n-1)(D-1). Returns false on any
// inconsistency.
class FaceIdentityChecker {
public:
  bool check(const PlaneTree& t, const ContourWalk& w) {
    int n = t.n, D = t.D, k = w.k();
    parent_.assign(n, 0);
    cil_index_.assign(w.length(), -1);
    for (size_t l = 0; l < w.cilium_positions.size(); ++l) cil_index_[w.cilium_positions[l]] = int(l);
    int faces_total = 0;
    for (int c = 0; c < D; ++c) {
      for (int v = 0; v < n; ++v) parent_[v] = v;
      for (const auto& e : t.edges)
        if (e.color == c) unite(e.a, e.b);

      first_cil_.assign(n, -1);
      prev_cil_.assign(n, -1);
      xi_.assign(k, -1);
      for (int q = 0; q < w.length(); ++q) {
        if (w.steps[q].cilium_after >= 0) {
          int root = find(w.steps[q].vertex);
          int l = cil_index_[q];
          if (first_cil_[root] < 0) first_cil_[root] = l;
          else xi_[prev_cil_[root]] = l;
          prev_cil_[root] = l;
        }
      }
      int internal = 0, external = 0;
      for (int v = 0; v < n; ++v) {
        if (find(v) != v) continue;
        if (first_cil_[v] < 0) ++internal;
        else {
          xi_[prev_cil_[v]] = first_cil_[v];  // close the cycle
          ++external;
        }
      }
      // xi must be a bijection whose cycle count equals the external face count.
      seen_.assign(k, 0);
      int cycles = 0;
      for (int l = 0; l < k; ++l) {
        if (xi_[l] < 0) return false;
        if (seen_[l]) continue;
        ++cycles;
        for (int j = l; !seen_[j]; j = xi_[j]) seen_[j] = 1;
      }
      if (cycles != external) return false;
      faces_total += internal + external;
    }
    return faces_total == D + (t.n - 1) * (D - 1);
  }

private:
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

  std::vector<int> parent_, first_cil_, prev_cil_, xi_, cil_index_;
  std::vector<char> seen_;
};

// Stepwise face counting surface used in a few formulas.
inline int face_count_formula(int n, int D) { return D + (n - 1) * (D - 1); }

// Path between two vertices in the underlying abstract tree, as edge ids.
inline std::vector<int> tree_path_edges(const PlaneTree& t, int from, int to) {
  if (from == to) return {};
  std::vector<std::vector<std::pair<int, int>>> adj(t.n);  // (neighbor, edge id)
  for (size_t i = 0; i < t.edges.size(); ++i) {
    adj[t.edges[i].a].push_back({t.edges[i].b, int(i)});
    adj[t.edges[i].b].push_back({t.edges[i].a, int(i)});
  }
  std::vector<int> parent_edge(t.n, -1), parent(t.n, -1);
  std::vector<int> order{from};
  std::vector<bool> seen(t.n, false);
  seen[from] = true;
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (auto [u, e] : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        parent[u] = v;
        parent_edge[u] = e;
        order.push_back(u);
      }
  }
  std::vector<int> path;
  for (int v = to; v != from; v = parent[v]) path.push_back(parent_edge[v]);
  return path;
}

}  // namespace largen
