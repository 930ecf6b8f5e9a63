#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posetmat/numeric.hpp"
#include "posetmat/poset.hpp"

namespace posetmat {

/// Subset of [n] as a bitmask; element e is bit e-1.
using SetMask = std::uint64_t;

inline int set_size(SetMask s) { return __builtin_popcountll(s); }

/// Strict order on subsets used throughout: by size, then colex (which for
/// equal sizes is plain numeric order of the masks).
inline bool ground_less(SetMask a, SetMask b) {
  const int sa = set_size(a);
  const int sb = set_size(b);
  return sa != sb ? sa < sb : a < b;
}

/// A duplicate-free family of subsets of [n], kept in ground order.
class SetFamily {
 public:
  static constexpr int kMaxGround = 62;

  SetFamily(int n, std::vector<SetMask> sets);

  static SetFamily power_set(int n);
  /// All k-subsets of [n].
  static SetFamily level(int n, int k);

  int ground() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<SetMask>& sets() const { return sets_; }
  bool has(SetMask s) const;

  /// Strict inclusion among the members, indexed as in sets().
  Relation inclusion() const;

 private:
  int n_;
  std::vector<SetMask> sets_;
};

/// Members of `family` forming a (weak or induced) copy of P, indexed by the
/// elements of P, or nothing when the family is P-free.
std::optional<std::vector<SetMask>> find_copy(const SetFamily& family, const Poset& p, bool induced);

bool family_contains(const SetFamily& family, const Poset& p, bool induced);

/// sum over F of 1 / binom(n, |F|).
Rational lubell(const SetFamily& family);

/// sum over F of 1 / binom(n + 2d - 2, |F| + d - 1); d = 1 gives lubell.
Rational shifted_lubell(const SetFamily& family, int d);

}  // namespace posetmat
