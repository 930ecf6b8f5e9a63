#include "posetmat/bounds.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace posetmat {

BigInt erdos_bound(int n, int k) {
  if (n < 1 || k < 2) throw std::invalid_argument("erdos_bound: needs n >= 1 and k >= 2");
  std::vector<BigInt> levels;
  for (int i = 0; i <= n; ++i) levels.push_back(binomial(n, i));
  std::sort(levels.begin(), levels.end(), std::greater<>());
  BigInt total = 0;
  for (int i = 0; i < k - 1 && i <= n; ++i) total += levels[i];
  return total;
}

BigInt general_weak_bound(const Poset& p) {
  if (p.size() == 0) throw std::invalid_argument("general_weak_bound: empty poset");
  return BigInt(p.size() - 1);
}

Rational chen_li_bound(const Poset& p, int m) {
  if (m < 1) throw std::invalid_argument("chen_li_bound: m must be at least 1");
  const Rational size = static_cast<long>(p.size());
  const Rational h1 = height(p) - 1;
  const Rational inner = size + Rational(m * m + 3 * m - 2, 2) * h1 - 1;
  return inner / (m + 1);
}

int best_m(const Poset& p) {
  int best = 1;
  Rational value = chen_li_bound(p, 1);
  for (int m = 2; m <= static_cast<int>(p.size()); ++m) {
    const Rational v = chen_li_bound(p, m);
    if (v < value) {
      value = v;
      best = m;
    }
  }
  return best;
}

Rational gmt_bound(const Poset& p, int k) {
  if (k < 2) throw std::invalid_argument("gmt_bound: k must be at least 2");
  const Rational size = static_cast<long>(p.size());
  const Rational h1 = height(p) - 1;
  const BigInt pow_k2 = BigInt(1) << (k - 2);
  const BigInt pow_k1 = BigInt(1) << (k - 1);
  const Rational inner = size + Rational(BigInt(3 * k - 5) * pow_k2) * h1 - 1;
  return inner / Rational(pow_k1);
}

int best_k(const Poset& p) {
  int best = 2;
  Rational value = gmt_bound(p, 2);
  for (int k = 3; k <= static_cast<int>(p.size()) + 2; ++k) {
    const Rational v = gmt_bound(p, k);
    if (v < value) {
      value = v;
      best = k;
    }
  }
  return best;
}

BigInt marcus_tardos_constant(int k) {
  if (k < 1) throw std::invalid_argument("marcus_tardos_constant: k must be at least 1");
  const BigInt k4 = BigInt(k) * k * k * k;
  return 2 * k4 * binomial(static_cast<long long>(k) * k, k);
}

bool binomial_shift_check(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("binomial_shift_check: needs n >= 0, d >= 1");
  const BigInt lhs = binomial(n + 2 * d - 2, n / 2 + d - 1);
  const BigInt rhs = (BigInt(1) << (2 * (d - 1))) * binomial(n, n / 2);
  return lhs <= rhs;
}

Rational refined_factor(int d) {
  if (d < 1) throw std::invalid_argument("refined_factor: d must be at least 1");
  if (d == 1) return 1;
  BigInt power = 1;
  for (int i = 0; i < d - 1; ++i) power *= d - 1;
  return Rational((BigInt(1) << (2 * (d - 1))) * factorial(d - 1), power);
}

std::string to_string(KSource s) {
  switch (s) {
    case KSource::Exact:
      return "exact";
    case KSource::Supplied:
      return "supplied";
    case KSource::MarcusTardos:
      return "marcus-tardos";
  }
  return "unknown";
}

PipelineReport induced_bound_pipeline(const Poset& p, const PipelineOptions& options) {
  PipelineReport report;
  const DimensionResult dim = dimension(p, options.dimension_cap);
  if (dim.dimension == 1) {
    throw std::invalid_argument("induced_bound_pipeline: chains have dimension 1; use erdos_bound");
  }
  report.dimension = dim.dimension;
  report.realizer = dim.witness;
  report.mp = realizer_to_matrix(p, dim.witness);
  report.source = options.source;
  const int d = report.dimension;
  const int k = static_cast<int>(p.size());

  switch (options.source) {
    case KSource::MarcusTardos:
      if (d != 2) throw std::invalid_argument("induced_bound_pipeline: the Marcus-Tardos constant needs d = 2");
      report.k = Rational(marcus_tardos_constant(k));
      report.provenance = "Marcus-Tardos constant 2k^4 binom(k^2,k) for the " + std::to_string(k) + "x" +
                          std::to_string(k) + " permutation matrix M_P";
      break;
    case KSource::Supplied:
      if (!options.supplied_k || *options.supplied_k <= 0) {
        throw std::invalid_argument("induced_bound_pipeline: supplied K must be positive");
      }
      report.k = *options.supplied_k;
      report.provenance = "supplied by caller";
      break;
    case KSource::Exact: {
      // max over solvable n of ex_d(n, M_P) / n^(d-1): empirical, not a proof.
      Rational best = 0;
      for (int n = 1;; ++n) {
        BigInt cells = 1;
        for (int i = 0; i < d; ++i) cells *= n;
        if (cells > options.ex.cell_cap) break;
        const ExResult ex = ex_exact(std::vector<int>(d, n), report.mp, options.ex);
        BigInt denom = 1;
        for (int i = 0; i < d - 1; ++i) denom *= n;
        best = std::max(best, Rational(BigInt(ex.value), denom));
        report.exact_n_max = n;
      }
      report.k = best;
      report.provenance = "empirical, not a proof: max ex_d(n, M_P)/n^(d-1) over n <= " +
                          std::to_string(report.exact_n_max);
      break;
    }
  }
  report.coefficient = Rational(BigInt(1) << d) * report.k;
  report.refined_coefficient = refined_factor(d) * report.k;
  return report;
}

SetFamily middle_levels(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("middle_levels: needs n, m >= 0");
  if (n > 20) throw std::invalid_argument("middle_levels: n must be at most 20");
  int low = 0;
  int high = n;
  if (m <= n) {
    low = (n - m + 1) / 2;
    high = low + m - 1;
  }
  std::vector<SetMask> sets;
  for (SetMask s = 0; s < (SetMask{1} << n); ++s) {
    const int size = set_size(s);
    if (size >= low && size <= high) sets.push_back(s);
  }
  return SetFamily(n, std::move(sets));
}

bool middle_levels_free(int n, int m, const Poset& p, bool induced) {
  return !family_contains(middle_levels(n, m), p, induced);
}

int e_estimate(const Poset& p, bool induced, int n_max) {
  if (n_max < 1) throw std::invalid_argument("e_estimate: n_max must be at least 1");
  int best = 0;
  for (int m = 1; m <= n_max + 1; ++m) {
    bool ok = true;
    for (int n = 1; n <= n_max && ok; ++n) ok = middle_levels_free(n, m, p, induced);
    if (!ok) break;
    best = m;
  }
  return best;
}

bool hasse_is_tree(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return false;
  const auto covers = p.covers();
  if (covers.size() != n - 1) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (auto [a, b] : covers) {
    const std::size_t ra = root(a);
    const std::size_t rb = root(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

}  // namespace posetmat
