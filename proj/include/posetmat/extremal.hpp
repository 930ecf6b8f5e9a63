#pragma once

#include <cstdint>
#include <vector>

#include "posetmat/family.hpp"
#include "posetmat/hypermatrix.hpp"
#include "posetmat/poset.hpp"
#include "posetmat/random.hpp"

namespace posetmat {

class ResultCache;

struct ExOptions {
  std::size_t cell_cap = 36;
  bool cap_override = false;
  const ResultCache* cache = nullptr;
};

struct ExResult {
  long value = 0;
  HyperMatrix witness{{1}, {}};
  std::uint64_t nodes = 0;
  bool from_cache = false;
};

/// Largest number of ones in a matrix of the given dims that avoids every
/// pattern in `patterns`, with the lexicographically least optimal set of
/// ones as witness.
///
/// Branch and bound over cells in row-major order, trying 1 before 0. Adding
/// a 1 is rejected when it completes an occurrence; since it is the largest
/// 1 so far, only occurrences ending in it are searched. A partial solution
/// is cut when even filling the rest of the current first-axis slab (bounded
/// by the slab optimum) plus the optimum of the remaining slabs cannot beat
/// the incumbent; those sub-box optima are solved first.
///
/// Throws CapExceeded when the grid exceeds options.cell_cap without
/// options.cap_override, std::invalid_argument for empty or mismatched patterns.
ExResult ex_exact(const std::vector<int>& dims, const std::vector<HyperMatrix>& patterns,
                  const ExOptions& options = {});
ExResult ex_exact(const std::vector<int>& dims, const HyperMatrix& pattern, const ExOptions& options = {});

struct MonotonicityReport {
  long small_value = 0;
  long big_value = 0;
  bool holds = false;
};

/// ex(big) <= prod(big_i / small_i) * ex(small), from two exact solves.
MonotonicityReport ex_monotonicity_check(const std::vector<HyperMatrix>& patterns,
                                         const std::vector<int>& small_dims,
                                         const std::vector<int>& big_dims, const ExOptions& options = {});

struct LaOptions {
  int n_cap = 5;
  bool cap_override = false;  // raises the cap to 6
  const ResultCache* cache = nullptr;
};

struct LaResult {
  long value = 0;
  SetFamily witness{0, {}};
  std::uint64_t nodes = 0;
  bool from_cache = false;
};

/// La(n, P) (weak) or La#(n, P) (induced) by exhaustive branch and bound over
/// the subsets of [n] in ground order; the witness is the least optimal
/// family in that order.
LaResult la_exact(int n, const Poset& p, bool induced, const LaOptions& options = {});

struct TardosReport {
  int n = 0;
  long value = 0;
  long bound = 0;
  bool holds = false;
  HyperMatrix witness{{1}, {}};
};

/// Exact extremal value for n x n matrices avoiding all 2-dimensional
/// diamond patterns at once, against 4n.
TardosReport tardos_diamond_check(int n, const ExOptions& options = {});

/// Random matrix free of every pattern: cells are visited in random order
/// and kept when they create no occurrence, stopping after `max_ones`.
HyperMatrix random_free_matrix(const std::vector<int>& dims, const std::vector<HyperMatrix>& patterns,
                               Rng& rng, std::size_t max_ones = static_cast<std::size_t>(-1));

}  // namespace posetmat
