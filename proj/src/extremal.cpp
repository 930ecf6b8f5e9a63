#include "posetmat/extremal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "posetmat/cache.hpp"
#include "posetmat/error.hpp"
#include "posetmat/io.hpp"
#include "posetmat/matcher.hpp"

namespace posetmat {

namespace {

void check_patterns(const std::vector<int>& dims, const std::vector<HyperMatrix>& patterns) {
  if (dims.empty()) throw std::invalid_argument("ex_exact: empty dims");
  for (int n : dims) {
    if (n < 1) throw std::invalid_argument("ex_exact: side lengths must be positive");
  }
  if (patterns.empty()) throw std::invalid_argument("ex_exact: no forbidden pattern given");
  for (const HyperMatrix& a : patterns) {
    if (a.dimension() != dims.size()) throw std::invalid_argument("ex_exact: pattern dimension mismatch");
    if (a.weight() == 0) throw std::invalid_argument("ex_exact: pattern has no 1-entries");
  }
}

std::string ex_key(const std::vector<int>& dims, const std::vector<HyperMatrix>& patterns) {
  Json key = {{"kind", "ex"}, {"dims", dims}};
  std::vector<HyperMatrix> sorted = patterns;
  std::sort(sorted.begin(), sorted.end());
  Json list = Json::array();
  for (const auto& a : sorted) list.push_back(matrix_to_json(a));
  key["patterns"] = list;
  return key.dump();
}

class ExSolver {
 public:
  using Memo = std::map<std::vector<int>, long>;

  ExSolver(std::vector<int> dims, const std::vector<PatternMatcher>& matchers, Memo& memo)
      : dims_(std::move(dims)), matchers_(matchers), memo_(memo) {
    d_ = dims_.size();
    cells_ = 1;
    for (int n : dims_) cells_ *= static_cast<std::size_t>(n);
    slab_ = cells_ / static_cast<std::size_t>(dims_[0]);
    coords_.resize(cells_ * d_);
    std::vector<int> c(d_, 1);
    for (std::size_t i = 0; i < cells_; ++i) {
      std::copy(c.begin(), c.end(), coords_.begin() + static_cast<long>(i * d_));
      for (std::size_t j = d_; j-- > 0;) {
        if (c[j] < dims_[j]) {
          ++c[j];
          break;
        }
        c[j] = 1;
      }
    }
    dense_.assign(cells_, 0);
    slab_count_.assign(dims_[0], 0);
  }

  ExResult solve() {
    // Optima of the boxes made of the last r first-axis slabs, r < n_1.
    rest_.assign(dims_[0], 0);
    for (int r = 1; r < dims_[0]; ++r) {
      std::vector<int> sub = dims_;
      sub[0] = r;
      if (auto it = memo_.find(sub); it != memo_.end()) {
        rest_[r] = it->second;
      } else {
        ExSolver inner(sub, matchers_, memo_);
        rest_[r] = inner.solve().value;
        nodes_ += inner.nodes_;
      }
    }
    slab_best_ = dims_[0] > 1 ? rest_[1] : -1;
    best_ = -1;
    search(0, 0);
    memo_[dims_] = best_;
    ExResult result;
    result.value = best_;
    result.nodes = nodes_;
    std::vector<Coord> ones;
    for (std::size_t i = 0; i + d_ <= best_ones_.size(); i += d_) {
      ones.emplace_back(best_ones_.begin() + static_cast<long>(i), best_ones_.begin() + static_cast<long>(i + d_));
    }
    result.witness = HyperMatrix(dims_, std::move(ones));
    return result;
  }

 private:
  long bound(std::size_t cell, long current) const {
    const std::size_t slab = cell / slab_;
    const long left_in_slab = static_cast<long>(slab_ - cell % slab_);
    long in_slab = left_in_slab;
    if (slab_best_ >= 0) in_slab = std::min(in_slab, std::max(0L, slab_best_ - slab_count_[slab]));
    return current + in_slab + rest_[dims_[0] - 1 - static_cast<int>(slab)];
  }

  bool completes_pattern(const int* coord) const {
    const GridView view{dims_, std::span<const int>(ones_.data(), ones_.size()), dense_.data()};
    for (const PatternMatcher& m : matchers_) {
      if (m.occurs_with_last_at(view, coord)) return true;
    }
    return false;
  }

  void search(std::size_t cell, long current) {
    ++nodes_;
    if (cell == cells_) {
      if (current > best_) {
        best_ = current;
        best_ones_ = ones_;
      }
      return;
    }
    if (bound(cell, current) <= best_) return;
    const int* coord = coords_.data() + cell * d_;
    const std::size_t slab = cell / slab_;
    ones_.insert(ones_.end(), coord, coord + d_);
    dense_[cell] = 1;
    if (!completes_pattern(coord)) {
      ++slab_count_[slab];
      search(cell + 1, current + 1);
      --slab_count_[slab];
    }
    dense_[cell] = 0;
    ones_.resize(ones_.size() - d_);
    search(cell + 1, current);
  }

  std::vector<int> dims_;
  const std::vector<PatternMatcher>& matchers_;
  Memo& memo_;
  std::size_t d_ = 0;
  std::size_t cells_ = 0;
  std::size_t slab_ = 0;
  std::vector<int> coords_;
  std::vector<std::uint8_t> dense_;
  std::vector<int> ones_;
  std::vector<long> slab_count_;
  std::vector<long> rest_;
  long slab_best_ = -1;
  long best_ = -1;
  std::vector<int> best_ones_;
  std::uint64_t nodes_ = 0;
};

bool is_free(const HyperMatrix& m, const std::vector<HyperMatrix>& patterns) {
  return std::none_of(patterns.begin(), patterns.end(), [&](const HyperMatrix& a) { return contains(m, a); });
}

}  // namespace

ExResult ex_exact(const std::vector<int>& dims, const std::vector<HyperMatrix>& patterns,
                  const ExOptions& options) {
  check_patterns(dims, patterns);
  std::size_t cells = 1;
  for (int n : dims) cells *= static_cast<std::size_t>(n);
  if (cells > options.cell_cap && !options.cap_override) {
    throw CapExceeded("ex_exact: " + std::to_string(cells) + " cells exceeds the cap of " +
                      std::to_string(options.cell_cap));
  }

  const std::string key = ex_key(dims, patterns);
  if (options.cache != nullptr) {
    if (auto record = options.cache->load(key)) {
      try {
        ExResult cached;
        cached.value = record->at("value").get<long>();
        cached.witness = matrix_from_json(record->at("witness"));
        cached.from_cache = true;
        if (cached.witness.dims() == dims && static_cast<long>(cached.witness.weight()) == cached.value &&
            is_free(cached.witness, patterns)) {
          return cached;
        }
      } catch (const std::exception&) {
        // Unusable record; fall through and recompute.
      }
    }
  }

  std::vector<PatternMatcher> matchers;
  for (const auto& a : patterns) matchers.emplace_back(a);
  ExSolver::Memo memo;
  ExSolver solver(dims, matchers, memo);
  ExResult result = solver.solve();
  if (!is_free(result.witness, patterns)) {
    throw std::logic_error("ex_exact: witness contains a forbidden pattern");
  }
  if (options.cache != nullptr) {
    options.cache->store(key, Json{{"value", result.value}, {"witness", matrix_to_json(result.witness)}});
  }
  return result;
}

ExResult ex_exact(const std::vector<int>& dims, const HyperMatrix& pattern, const ExOptions& options) {
  return ex_exact(dims, std::vector<HyperMatrix>{pattern}, options);
}

MonotonicityReport ex_monotonicity_check(const std::vector<HyperMatrix>& patterns,
                                         const std::vector<int>& small_dims,
                                         const std::vector<int>& big_dims, const ExOptions& options) {
  if (small_dims.size() != big_dims.size()) throw std::invalid_argument("monotonicity: arity mismatch");
  for (std::size_t j = 0; j < small_dims.size(); ++j) {
    if (small_dims[j] > big_dims[j]) throw std::invalid_argument("monotonicity: small dims exceed big dims");
  }
  MonotonicityReport report;
  report.small_value = ex_exact(small_dims, patterns, options).value;
  report.big_value = ex_exact(big_dims, patterns, options).value;
  // ex(big) * prod m_i <= prod n_i * ex(small)
  BigInt lhs = report.big_value;
  BigInt rhs = report.small_value;
  for (std::size_t j = 0; j < small_dims.size(); ++j) {
    lhs *= small_dims[j];
    rhs *= big_dims[j];
  }
  report.holds = lhs <= rhs;
  return report;
}

namespace {

class LaSolver {
 public:
  LaSolver(int n, const Poset& p, bool induced, long smaller_optimum)
      : n_(n), p_(p), induced_(induced), smaller_(smaller_optimum) {
    for (SetMask s = 0; s < (SetMask{1} << n); ++s) ground_.push_back(s);
    std::sort(ground_.begin(), ground_.end(), ground_less);
    for (std::size_t x = 0; x < p.size(); ++x) {
      bool top = true;
      for (std::size_t y = 0; y < p.size(); ++y) top = top && !p.less(x, y);
      if (top) maximal_.push_back(x);
    }
    // suffix_in_[i * n + e]: sets at index >= i that contain element e.
    const std::size_t total = ground_.size();
    suffix_in_.assign((total + 1) * static_cast<std::size_t>(n), 0);
    for (std::size_t i = total; i-- > 0;) {
      for (int e = 0; e < n; ++e) {
        suffix_in_[i * n + e] = suffix_in_[(i + 1) * n + e] + ((ground_[i] >> e & 1) ? 1 : 0);
      }
    }
    in_count_.assign(n, 0);
  }

  LaResult solve() {
    best_ = -1;
    search(0);
    LaResult out;
    out.value = best_;
    out.witness = SetFamily(n_, best_family_);
    out.nodes = nodes_;
    return out;
  }

 private:
  long bound(std::size_t i) const {
    const long current = static_cast<long>(family_.size());
    const long remaining = static_cast<long>(ground_.size() - i);
    long best = current + remaining;
    if (smaller_ < 0) return best;
    // Members containing e, and members avoiding e, are each copies of a
    // P-free family on n-1 points.
    for (int e = 0; e < n_; ++e) {
      const long rem_in = suffix_in_[i * n_ + e];
      const long with = std::min<long>(in_count_[e] + rem_in, smaller_);
      const long without = std::min<long>(current - in_count_[e] + (remaining - rem_in), smaller_);
      best = std::min(best, with + without);
    }
    return best;
  }

  bool creates_copy(SetMask s) const {
    const std::size_t m = family_.size();
    Relation r(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && (family_[i] & family_[j]) == family_[i]) r.set_less(i, j);
      }
      if ((family_[i] & s) == family_[i]) r.set_less(i, m);
    }
    // The new set is maximal in ground order, so it can only play a maximal element.
    for (std::size_t x : maximal_) {
      if (find_embedding(p_, r, induced_, std::make_pair(x, m))) return true;
    }
    return false;
  }

  void search(std::size_t i) {
    ++nodes_;
    const long current = static_cast<long>(family_.size());
    if (i == ground_.size()) {
      if (current > best_) {
        best_ = current;
        best_family_ = family_;
      }
      return;
    }
    if (bound(i) <= best_) return;
    const SetMask s = ground_[i];
    if (!creates_copy(s)) {
      family_.push_back(s);
      for (int e = 0; e < n_; ++e) in_count_[e] += (s >> e & 1) ? 1 : 0;
      search(i + 1);
      for (int e = 0; e < n_; ++e) in_count_[e] -= (s >> e & 1) ? 1 : 0;
      family_.pop_back();
    }
    search(i + 1);
  }

  int n_;
  const Poset& p_;
  bool induced_;
  long smaller_;
  std::vector<SetMask> ground_;
  std::vector<std::size_t> maximal_;
  std::vector<long> suffix_in_;
  std::vector<long> in_count_;
  std::vector<SetMask> family_;
  long best_ = -1;
  std::vector<SetMask> best_family_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

LaResult la_exact(int n, const Poset& p, bool induced, const LaOptions& options) {
  if (n < 0) throw std::invalid_argument("la_exact: n must be non-negative");
  const int cap = options.cap_override ? std::max(options.n_cap, 6) : options.n_cap;
  if (n > cap) {
    throw CapExceeded("la_exact: n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
  }
  if (p.size() == 0) throw std::invalid_argument("la_exact: empty poset");

  const std::string key =
      Json{{"kind", "la"}, {"n", n}, {"poset", poset_to_json(p)}, {"induced", induced}}.dump();
  if (options.cache != nullptr) {
    if (auto record = options.cache->load(key)) {
      try {
        LaResult cached;
        cached.value = record->at("value").get<long>();
        cached.witness = family_from_json(record->at("witness"));
        cached.from_cache = true;
        if (cached.witness.ground() == n && static_cast<long>(cached.witness.size()) == cached.value &&
            !family_contains(cached.witness, p, induced)) {
          return cached;
        }
      } catch (const std::exception&) {
      }
    }
  }

  LaResult result;
  long smaller = -1;
  std::uint64_t nodes = 0;
  for (int m = 0; m <= n; ++m) {
    LaSolver solver(m, p, induced, smaller);
    result = solver.solve();
    nodes += result.nodes;
    smaller = result.value;
  }
  result.nodes = nodes;
  if (family_contains(result.witness, p, induced)) {
    throw std::logic_error("la_exact: witness contains the forbidden poset");
  }
  if (options.cache != nullptr) {
    options.cache->store(key, Json{{"value", result.value}, {"witness", family_to_json(result.witness)}});
  }
  return result;
}

TardosReport tardos_diamond_check(int n, const ExOptions& options) {
  if (n < 1) throw std::invalid_argument("tardos_diamond_check: n must be positive");
  const auto patterns = enumerate_patterns(diamond(), 2);
  const ExResult ex = ex_exact({n, n}, patterns, options);
  TardosReport report;
  report.n = n;
  report.value = ex.value;
  report.bound = 4L * n;
  report.holds = report.value <= report.bound;
  report.witness = ex.witness;
  return report;
}

HyperMatrix random_free_matrix(const std::vector<int>& dims, const std::vector<HyperMatrix>& patterns, Rng& rng,
                               std::size_t max_ones) {
  check_patterns(dims, patterns);
  std::vector<Coord> cells;
  Coord c(dims.size(), 1);
  while (true) {
    cells.push_back(c);
    std::size_t j = dims.size();
    bool done = true;
    while (j-- > 0) {
      if (c[j] < dims[j]) {
        ++c[j];
        done = false;
        break;
      }
      c[j] = 1;
    }
    if (done) break;
  }
  std::shuffle(cells.begin(), cells.end(), rng);
  std::vector<Coord> ones;
  for (const Coord& cell : cells) {
    if (ones.size() >= max_ones) break;
    ones.push_back(cell);
    if (!is_free(HyperMatrix(dims, ones), patterns)) ones.pop_back();
  }
  return HyperMatrix(dims, std::move(ones));
}

}  // namespace posetmat
