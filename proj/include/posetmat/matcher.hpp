#pragma once

#include <vector>

#include "posetmat/hypermatrix.hpp"

namespace posetmat {

/// Depth-first occurrence search for one fixed pattern.
///
/// The pattern's ones are placed in lexicographic order. For every axis the
/// partial map from pattern indices to target indices must stay strictly
/// increasing and leave room for unmapped pattern lines, so each placement is
/// confined to a box derived from the already mapped neighbours. Because the
/// index maps are monotone, images appear in lexicographic order too, which
/// bounds the candidate scan from below.
class PatternMatcher {
 public:
  explicit PatternMatcher(const HyperMatrix& pattern);

  const HyperMatrix& pattern() const { return pattern_; }

  bool occurs_in(const GridView& target) const;

  /// Occurrence whose image of the pattern's lexicographically last 1 is
  /// `cell`. When `cell` is the lexicographically largest 1 of the target,
  /// this is exactly the set of occurrences that use `cell`.
  bool occurs_with_last_at(const GridView& target, const int* cell) const;

 private:
  struct State;
  bool place(State& st, std::size_t t, long prev) const;

  HyperMatrix pattern_;
  std::vector<int> flat_;
};

}  // namespace posetmat
