#pragma once

#include <optional>
#include <string>

#include "posetmat/extremal.hpp"
#include "posetmat/family.hpp"
#include "posetmat/numeric.hpp"
#include "posetmat/poset.hpp"

namespace posetmat {

/// Sum of the k-1 largest binomial coefficients binom(n, i).
BigInt erdos_bound(int n, int k);

/// |P| - 1, the coefficient of binom(n, n/2) from embedding P in a chain.
BigInt general_weak_bound(const Poset& p);

/// (|P| + (m^2 + 3m - 2)(h(P) - 1)/2 - 1) / (m + 1), for m >= 1.
Rational chen_li_bound(const Poset& p, int m);
/// Minimizing m over [1, |P|]; ties go to the smaller m.
int best_m(const Poset& p);

/// (|P| + (3k - 5) 2^(k-2) (h(P) - 1) - 1) / 2^(k-1), for k >= 2.
Rational gmt_bound(const Poset& p, int k);
/// Minimizing k over [2, |P| + 2]; ties go to the smaller k.
int best_k(const Poset& p);

/// 2 k^4 binom(k^2, k): ex_2(n, A) <= this * n for a k x k permutation matrix A.
BigInt marcus_tardos_constant(int k);

/// binom(n + 2d - 2, floor(n/2) + d - 1) <= 4^(d-1) binom(n, floor(n/2)).
bool binomial_shift_check(int n, int d);

/// 4^(d-1) (d-1)! / (d-1)^(d-1); the d = 1 value is taken as 1.
Rational refined_factor(int d);

enum class KSource { Exact, Supplied, MarcusTardos };
std::string to_string(KSource s);

struct PipelineOptions {
  KSource source = KSource::MarcusTardos;
  std::optional<Rational> supplied_k;
  ExOptions ex;  // for the exact source
  int dimension_cap = 4;
};

/// Constant chain from ex_d(n, M_P) <= K n^(d-1) to La#(n, P) <= coefficient * binom(n, n/2).
struct PipelineReport {
  int dimension = 0;
  Realizer realizer;
  HyperMatrix mp{{1}, {}};
  KSource source = KSource::MarcusTardos;
  Rational k;
  std::string provenance;
  Rational coefficient;          // 2^d K
  Rational refined_coefficient;  // 4^(d-1) (d-1)!/(d-1)^(d-1) K
  int exact_n_max = 0;           // largest n solved for the exact source
};

/// Throws std::invalid_argument for chains (dimension 1) and for the
/// Marcus-Tardos source when the dimension is not 2.
PipelineReport induced_bound_pipeline(const Poset& p, const PipelineOptions& options = {});

/// The m middle levels of 2^[n]; the lowest level is ceil((n - m) / 2).
/// m >= n + 1 gives the whole cube.
SetFamily middle_levels(int n, int m);
bool middle_levels_free(int n, int m, const Poset& p, bool induced);

/// Largest m such that the m middle levels are (induced) P-free for every
/// n in [1, n_max]. Only an estimate of the all-n quantity.
int e_estimate(const Poset& p, bool induced, int n_max);

/// Whether the cover graph of P, as an undirected graph, is a tree.
bool hasse_is_tree(const Poset& p);

}  // namespace posetmat
