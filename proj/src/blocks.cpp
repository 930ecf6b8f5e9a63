#include "posetmat/blocks.hpp"

#include <algorithm>
#include <stdexcept>

#include "posetmat/matcher.hpp"

namespace posetmat {

int BlockReport::max_wide_per_blockcolumn(int axis) const {
  int best = 0;
  for (const auto& [column, count] : wide_counts.at(axis - 1)) best = std::max(best, count);
  return best;
}

BigInt wide_block_limit(int k, int s, int d) {
  BigInt cells = 1;
  for (int i = 1; i < d; ++i) cells *= s;
  return BigInt(k - 1) * binomial(static_cast<long long>(cells), k);
}

BlockReport block_analyze(const HyperMatrix& m, const HyperMatrix& a, int s) {
  const std::size_t d = m.dimension();
  if (a.dimension() != d) throw std::invalid_argument("block_analyze: dimension mismatch");
  if (d < 2) throw std::invalid_argument("block_analyze: needs dimension at least 2");
  if (s < 1) throw std::invalid_argument("block_analyze: block side must be positive");
  if (!a.is_cubic() || !is_permutation_matrix(a)) {
    throw std::invalid_argument("block_analyze: pattern is not a permutation matrix");
  }
  const int k = a.dims().front();

  BlockReport report;
  report.side = s;
  report.grid.resize(d);
  for (std::size_t j = 0; j < d; ++j) report.grid[j] = (m.dims()[j] + s - 1) / s;

  std::vector<PatternMatcher> projected;
  for (std::size_t i = 1; i <= d; ++i) projected.emplace_back(projection(a, static_cast<int>(i)));

  // Bucket the ones of M by block so each block is materialized once.
  std::map<std::vector<int>, std::vector<Coord>> buckets;
  for (const Coord& c : m.ones()) {
    std::vector<int> b(d);
    for (std::size_t j = 0; j < d; ++j) b[j] = (c[j] - 1) / s + 1;
    buckets[b].push_back(c);
  }

  report.wide_counts.resize(d);
  std::vector<Coord> coarse_ones;
  std::vector<int> b(d, 1);
  while (true) {
    BlockInfo info;
    info.index = b;
    std::vector<int> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = (b[j] - 1) * s + 1;
      hi[j] = std::min(b[j] * s, m.dims()[j]);
    }
    if (auto it = buckets.find(b); it != buckets.end()) {
      const HyperMatrix block = sub_box(m, lo, hi);
      info.weight = block.weight();
      if (block.weight() >= static_cast<std::size_t>(k)) {
        for (std::size_t i = 1; i <= d; ++i) {
          const HyperMatrix proj = projection(block, static_cast<int>(i));
          if (projected[i - 1].occurs_in(proj.view())) info.wide_axes.push_back(static_cast<int>(i));
        }
      }
    }
    for (std::size_t i = 1; i <= d; ++i) {
      std::vector<int> column = b;
      column.erase(column.begin() + static_cast<long>(i - 1));
      const bool wide = std::find(info.wide_axes.begin(), info.wide_axes.end(),
                                  static_cast<int>(i)) != info.wide_axes.end();
      report.wide_counts[i - 1][column] += wide ? 1 : 0;
    }
    if (info.thin() && info.weight > 0) coarse_ones.push_back(b);
    report.blocks.push_back(std::move(info));

    std::size_t j = d;
    bool done = true;
    while (j > 0) {
      --j;
      if (b[j] < report.grid[j]) {
        ++b[j];
        done = false;
        break;
      }
      b[j] = 1;
    }
    if (done) break;
  }
  report.coarse = HyperMatrix(report.grid, std::move(coarse_ones));
  return report;
}

}  // namespace posetmat
