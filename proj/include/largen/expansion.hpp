#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "largen/colored_graph.hpp"
#include "largen/decorated_tree.hpp"
#include "largen/enumeration.hpp"
#include "largen/w_integral.hpp"
#include "largen/weingarten.hpp"

namespace largen {

// Radius of convergence of the tree expansion; the melonic series diverges at
// lambda = -1/(8D).
inline Rational critical_constant(int D) { return Rational(1, 8 * D); }

// Contribution of one decorated tree to the cumulant of the graph b.
// `coefficient` is the full tree weight divided by lambda^q:
//   (1/q!) (-1)^q N^{-q(D-1)} k! prod_c Wg(N, tau_c sigma_c(B)^-1)
//     * w-integral * N^{ -D + 2k(D-1) + C(B) - (k+n-1)(D-1) + |F| } ,
// so the melonic trees (k=1, q=0, tau trivial) have coefficient exactly 1.
// The series-level factors (-1)^{n-1} and the 1/(n-k)! cilium multiplicity
// are attached during assembly.
struct ExpansionTerm {
  int n = 0, k = 0, q = 0;
  int lambda_power = 0;  // n - 1 + q
  RationalFunctionN coefficient;
};

inline ExpansionTerm term_value(const DecoratedTree& d, const ColoredGraph& b,
                                const WeingartenTable& wg) {
  if (d.k() != b.k) throw ValidationError("decorated tree and graph must share k");
  if (d.D() != b.D) throw ValidationError("decorated tree and graph must share D");
  ExpansionTerm term;
  term.n = d.n();
  term.k = d.k();
  term.q = d.q();
  term.lambda_power = term.n - 1 + term.q;

  int D = d.D(), k = term.k, n = term.n, q = term.q;

  RationalFunctionN wg_product(1);
  for (int c = 0; c < D; ++c)
    wg_product *= wg[compose(d.tau.perms[c], b.beta.perms[c].inverse())];

  std::vector<std::pair<int, int>> pairs(d.loop_vertices.begin(), d.loop_vertices.end());
  Rational w_int = w_integral(d.base, pairs);

  long expo = -D + 2L * k * (D - 1) + b.connected_components() - long(k + n - 1) * (D - 1) -
              long(q) * (D - 1) + d.face_count();
  Rational scalar = Rational(factorial(k)) / factorial(q) * w_int;
  if (q % 2) scalar = -scalar;
  term.coefficient = RationalFunctionN(scalar) * wg_product * RationalFunctionN::n_power(expo);
  return term;
}

struct CumulantSeries {
  ColoredGraph graph;
  int D = 0;
  std::map<int, RationalFunctionN> coefficients;  // lambda power -> coefficient of K(B, N)
  int max_lambda_power = 0;
  std::string truncation = "exact-to-order";
  std::string source = "expansion";
  uint64_t terms_evaluated = 0;
};

struct AssembleOptions {
  Int budget = Int(1) << 26;  // decorated-tree evaluations
};

// Number of decorated-tree terms the assembly of order p sums for given k.
inline Int assemble_cost(int k, int D, int m) {
  Int total = 0;
  for (int p = 0; p <= m; ++p)
    for (int n = std::max(k, 1); n <= p + 1; ++n) {
      int q = p - (n - 1);
      Int taus = 1;
      for (int c = 0; c < D; ++c) taus *= factorial(k);
      total += count_trees_formula(n, k, D) * taus * count_loop_insertions_formula(n, k, q, D);
    }
  return total;
}

// The 1/N-expansion series of the rescaled cumulant K(B, N), exact to each
// lambda order p <= m: the coefficient of lambda^p sums (-1)^p times every
// decorated-tree weight with n - 1 + q = p, over all plane trees with the
// fixed cilia tuple (multiplicity 1/(n-k)!), all external-edge tuples tau and
// all ordered loop insertions.
inline CumulantSeries assemble_series(const ColoredGraph& b, int D, int m,
                                      const AssembleOptions& opts = {}) {
  if (b.D != D) throw ValidationError("graph color count must match D");
  int k = b.k;
  if (k < 1) throw ValidationError("cumulants need k >= 1");
  Int cost = assemble_cost(k, D, m);
  if (cost > opts.budget) throw BudgetError("series assembly over budget", cost.str());

  WeingartenTable wg = weingarten_table(k);
  CumulantSeries series;
  series.graph = b;
  series.D = D;
  series.max_lambda_power = m;

  TreeEnumOptions tree_opts;
  for (int p = 0; p <= m; ++p) {
    RationalFunctionN acc(0);
    for (int n = std::max(k, 1); n <= p + 1; ++n) {
      int q = p - (n - 1);
      Rational multiplicity = Rational(1) / factorial(n - k);  // (1/n!) sum over cilium tuples
      if (n % 2 == 0) multiplicity = -multiplicity;            // (-1)^{n-1}
      RationalFunctionN n_acc(0);
      enumerate_trees(n, k, D, tree_opts, [&](const PlaneTree& t) {
        int L = 2 * n - 2 + k;
        for_each_perm_tuple(D, k, [&](const PermTuple& tau) {
          DecoratedTree d0 = attach_external(t, tau);
          enumerate_loop_insertions(L, q, D, [&](const std::vector<LoopInsertion>& ins) {
            DecoratedTree d = ins.empty() ? d0 : insert_loops(d0, ins);
            n_acc += term_value(d, b, wg).coefficient;
            ++series.terms_evaluated;
          });
        });
      });
      acc += RationalFunctionN(multiplicity) * n_acc;
    }
    series.coefficients[p] = acc;
  }
  return series;
}

// --- the melonic two-point series -------------------------------------------

// (-2D)^p Catalan(p): the large-N limit of the lambda^p coefficient of the
// dipole cumulant.
inline Rational melonic_coefficient(int D, int p) {
  Rational c = catalan(p);
  return c * pow_rational(Rational(-2 * D), p);
}

// Partial sum sum_{n=1}^{n_max} (-2 D lambda)^{n-1} (2n-2)! / ((n-1)! n!).
inline Rational melonic_series(int D, int n_max, const Rational& lambda) {
  Rational sum = 0, power = 1;
  for (int n = 1; n <= n_max; ++n) {
    sum += power * catalan(n - 1);
    power *= Rational(-2 * D) * lambda;
  }
  return sum;
}

// (-1 + sqrt(1 + 8 D lambda)) / (4 D lambda), continued by 1 at lambda = 0;
// computed with a controlled-precision square root so the result is within
// eps of the exact value.
inline Rational melonic_closed_form(int D, const Rational& lambda, const Rational& eps) {
  if (lambda == 0) return 1;
  Rational radicand = 1 + Rational(8 * D) * lambda;
  if (radicand < 0)
    throw ValidationError("1 + 8 D lambda < 0: past the critical point -1/(8D)");
  Rational denom = Rational(4 * D) * lambda;
  Rational sqrt_eps = eps * abs_rational(denom);
  return (sqrt_rational(radicand, sqrt_eps) - 1) / denom;
}

// --- explicit bounds ---------------------------------------------------------

struct BoundParams {
  Rational lambda_abs;      // |lambda|
  Rational phi = 0;         // phase of lambda, radians, in (-pi, pi)
  Rational N0;              // evaluation point for N
  Rational rest_K = 1;      // the constants of the remainder bound, not fixed
  Rational rest_sigma = 1;  //   by the statement; reported as-is
  Rational cos_eps = Rational(1, Int("1000000000000000000"));
};

struct BoundReport {
  Rational cos_half_phi;
  Rational tq_bound;       // per-tree bound on |T^{(q)}|
  Rational rs_bound;       // per-tree bound on |R^{(s)}|
  Rational rest_domain;    // 5^-2 2^-1 D^-1 cos^2(phi/2)
  Rational rest_bound;     // K sigma^s s! N^{-s(D-2)} |lambda|^{s+k-1} / cos^{2s+3k-1}
};

// Evaluates the explicit bound expressions of the mixed expansion and of the
// 1/N-expansion remainder at concrete (lambda, phi, N0).
inline BoundReport bound_suite(int D, int n, int k, int q, int s, const BoundParams& p) {
  if (p.lambda_abs < 0) throw ValidationError("|lambda| must be >= 0");
  if (p.N0 <= 0) throw ValidationError("N0 must be positive");
  if (abs_rational(p.phi) >= parse_rational("3141592/1000000"))
    throw ValidationError("phi must lie strictly inside (-pi, pi)");
  if (s < 1) throw ValidationError("the remainder order s must be >= 1");
  BoundReport rep;
  rep.cos_half_phi = p.phi == 0 ? Rational(1) : cos_rational(p.phi / 2, p.cos_eps);

  Rational lam_pow_q = pow_rational(p.lambda_abs, q);
  Rational n_pow_q = pow_rational(p.N0, long(q) * (D - 2));
  rep.tq_bound = lam_pow_q / n_pow_q * Rational(factorial(k)) *
                 pow_rational(Rational(2), 2 * D * k) * pow_rational(Rational(D), q) *
                 Rational(factorial(2 * n + 2 * q + k - 3)) /
                 (factorial(q) * factorial(2 * n + k - 3));

  rep.rs_bound = pow_rational(p.lambda_abs, s) / pow_rational(p.N0, long(s) * (D - 2)) *
                 Rational(factorial(k)) * pow_rational(Rational(2), 2 * D * k) *
                 pow_rational(Rational(D), s) * Rational(factorial(2 * n + 2 * s + k - 3)) /
                 (factorial(s - 1) * factorial(2 * n + k - 3)) /
                 pow_rational(rep.cos_half_phi, 2 * n + 2 * s + k - 2);

  rep.rest_domain = rep.cos_half_phi * rep.cos_half_phi / Rational(50 * D);
  if (p.lambda_abs >= rep.rest_domain)
    throw ValidationError("remainder bound requires |lambda| < 5^-2 2^-1 D^-1 cos^2(phi/2) = " +
                          rational_to_string(rep.rest_domain));
  rep.rest_bound = p.rest_K * pow_rational(p.rest_sigma, s) * Rational(factorial(s)) /
                   pow_rational(p.N0, long(s) * (D - 2)) *
                   pow_rational(p.lambda_abs, s + k - 1) /
                   pow_rational(rep.cos_half_phi, 2 * s + 3 * k - 1);
  return rep;
}

struct TqDominationReport {
  uint64_t trees_checked = 0;
  uint64_t values_checked = 0;
  std::vector<std::string> violations;
};

// For every plane tree with n <= n_max (orientation classes; the tree weight
// never reads orientations), every tau and every q <= q_max, evaluates
// T^{(q)} = sum over loop decorations of the tree weight at (N0, lambda0) and
// checks it against the mixed-expansion bound.
inline TqDominationReport check_tq_bounds(const ColoredGraph& b, int n_max, int q_max,
                                          const Rational& N0, const Rational& lambda0) {
  int D = b.D, k = b.k;
  WeingartenTable wg = weingarten_table(k);
  TqDominationReport rep;
  TreeEnumOptions opts;
  opts.distinct_orientations = false;
  BoundParams params;
  params.lambda_abs = abs_rational(lambda0);
  params.N0 = N0;
  for (int n = std::max(1, k); n <= n_max; ++n) {
    enumerate_trees(n, k, D, opts, [&](const PlaneTree& t) {
      ++rep.trees_checked;
      int L = 2 * n - 2 + k;
      for_each_perm_tuple(D, k, [&](const PermTuple& tau) {
        DecoratedTree d0 = attach_external(t, tau);
        for (int q = 0; q <= q_max; ++q) {
          RationalFunctionN tq(0);
          enumerate_loop_insertions(L, q, D, [&](const std::vector<LoopInsertion>& ins) {
            DecoratedTree d = ins.empty() ? d0 : insert_loops(d0, ins);
            tq += term_value(d, b, wg).coefficient;
          });
          Rational value = abs_rational(tq.eval(N0)) * pow_rational(abs_rational(lambda0), q);
          Rational bound = bound_suite(D, n, k, q, /*s=*/q + 1, params).tq_bound;
          ++rep.values_checked;
          if (value > bound)
            rep.violations.push_back("n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                     " walk=" + print_walk(t) + " |T|=" + rational_to_string(value) +
                                     " bound=" + rational_to_string(bound));
        }
      });
    });
  }
  return rep;
}

}  // namespace largen
