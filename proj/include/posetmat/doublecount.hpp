#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posetmat/family.hpp"
#include "posetmat/hypermatrix.hpp"
#include "posetmat/numeric.hpp"
#include "posetmat/poset.hpp"
#include "posetmat/random.hpp"

namespace posetmat {

/// An ordered partition Q_1 | ... | Q_d of a permutation of [n]. Parts may be
/// empty and their order matters.
class PermutationPartition {
 public:
  explicit PermutationPartition(std::vector<std::vector<int>> parts);

  /// "142|5|3" (single digits, n <= 9) or comma separated "10,2|1,3|...".
  static PermutationPartition parse(std::string_view text);
  std::string to_string() const;

  int ground() const { return n_; }
  std::size_t part_count() const { return parts_.size(); }
  const std::vector<std::vector<int>>& parts() const { return parts_; }
  /// Q_j(i), both 1-based.
  int at(std::size_t j, std::size_t i) const { return parts_.at(j - 1).at(i - 1); }

  friend bool operator==(const PermutationPartition&, const PermutationPartition&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> parts_;
};

/// Q[i) = union over j of {Q_j(1), ..., Q_j(i_j - 1)}, with 1 <= i_j <= |Q_j| + 1.
SetMask prefix_union(const PermutationPartition& q, std::span<const int> idx);

/// Whether `s` equals some prefix union of `q`.
bool is_prefix_union(const PermutationPartition& q, SetMask s);

/// (n + d - 1)! / (d - 1)!
BigInt partition_count(int n, int d);

/// Visits every permutation d-partition of [n] exactly once: permutations in
/// lexicographic order, and for each, part sizes from (n, 0, ..., 0) down in
/// reverse lexicographic order. Throws CapExceeded above `cap` partitions.
void for_each_partition(int n, int d, const std::function<void(const PermutationPartition&)>& visit,
                        std::uint64_t cap = 10'000'000);
std::vector<PermutationPartition> enumerate_partitions(int n, int d, std::uint64_t cap = 10'000'000);

/// Uniform over all permutation d-partitions of [n].
PermutationPartition random_partition(int n, int d, Rng& rng);

/// (f + d - 1)!/(d - 1)! * (n - f + d - 1)!/(d - 1)!: partitions having a
/// fixed f-subset as a prefix union.
BigInt count_partitions_with_prefix(int n, int d, int f);

/// Dims (|Q_1|+1, ..., |Q_d|+1); a 1 exactly where the prefix union lies in F.
HyperMatrix build_mq(const PermutationPartition& q, const SetFamily& family);

/// Random induced-P-free family: a random subfamily of 2^[n], thinned by
/// deleting a random member of some induced copy until none is left.
SetFamily random_induced_free_family(int n, const Poset& p, Rng& rng);

struct MqCounterexample {
  SetFamily family;
  PermutationPartition partition;
};

struct MqFreenessReport {
  int trials = 0;
  int violations = 0;
  std::optional<MqCounterexample> counterexample;
};

/// For random (induced-P-free F, random Q) pairs checks that M_Q avoids the
/// permutation matrix of the realizer. Requires at least two extensions.
MqFreenessReport verify_mq_freeness(const Poset& p, const Realizer& r, int n, int trials, std::uint64_t seed);

struct DoubleCountResult {
  BigInt lhs;  // closed-form count summed over F
  BigInt rhs;  // pairs (Q, F) found by enumeration
  bool equal = false;
};

DoubleCountResult double_count_identity(const SetFamily& family, int d, std::uint64_t cap = 10'000'000);

}  // namespace posetmat
