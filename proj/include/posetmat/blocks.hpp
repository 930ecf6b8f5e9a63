#pragma once

#include <map>
#include <vector>

#include "posetmat/hypermatrix.hpp"
#include "posetmat/numeric.hpp"

namespace posetmat {

/// One s^d block of a block decomposition.
struct BlockInfo {
  std::vector<int> index;      // 1-based block coordinate
  std::vector<int> wide_axes;  // 1-based axes i for which the block is i-wide
  std::size_t weight = 0;

  bool thin() const { return wide_axes.empty(); }
};

/// Classification of every block of M against a permutation pattern A.
///
/// A block S is i-wide when Proj_i S contains Proj_i A, and thin when it is
/// wide along no axis. When a side is not a multiple of s the last block on
/// that axis is shorter.
struct BlockReport {
  int side = 1;
  std::vector<int> grid;  // number of blocks along each axis
  std::vector<BlockInfo> blocks;
  /// wide_counts[i-1] maps an i-blockcolumn (block index with component i
  /// removed) to its number of i-wide blocks. Every blockcolumn is present.
  std::vector<std::map<std::vector<int>, int>> wide_counts;
  /// M': a 1 at every thin block that holds at least one 1 of M.
  HyperMatrix coarse{{1}, {}};

  int max_wide_per_blockcolumn(int axis) const;
};

/// Throws std::invalid_argument unless A is a permutation matrix of the same
/// dimension d >= 2 as M and s >= 1.
BlockReport block_analyze(const HyperMatrix& m, const HyperMatrix& a, int s);

/// (k-1) * binom(s^{d-1}, k): the most i-wide blocks an i-blockcolumn of an
/// A-free matrix can hold.
BigInt wide_block_limit(int k, int s, int d);

}  // namespace posetmat
