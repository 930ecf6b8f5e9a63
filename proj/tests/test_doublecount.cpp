#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "posetmat/doublecount.hpp"
#include "posetmat/error.hpp"
#include "posetmat/extremal.hpp"
#include "posetmat/poset.hpp"

using namespace posetmat;

namespace {

constexpr SetMask mask(std::initializer_list<int> elems) {
  SetMask m = 0;
  for (int e : elems) m |= SetMask{1} << (e - 1);
  return m;
}

// Counts partitions of [n] into d parts with `s` as a prefix union, by enumeration.
long enumerated_prefix_count(int n, int d, SetMask s) {
  long count = 0;
  for_each_partition(n, d, [&](const PermutationPartition& q) { count += is_prefix_union(q, s); });
  return count;
}

}  // namespace

TEST_SUITE("doublecount") {

TEST_CASE("parsing and validation") {
  auto q = PermutationPartition::parse("142|5|3");
  CHECK(q.ground() == 5);
  CHECK(q.part_count() == 3);
  CHECK(q.at(1, 2) == 4);
  CHECK(q.to_string() == "142|5|3");
  CHECK(PermutationPartition::parse("10,2,1|3,4,5,6,7,8,9").ground() == 10);
  CHECK(PermutationPartition::parse("|21").to_string() == "|21");
  CHECK_THROWS_AS(PermutationPartition::parse("13|4"), std::invalid_argument);
  CHECK_THROWS_AS(PermutationPartition::parse("11|2"), std::invalid_argument);
  CHECK_THROWS_AS(PermutationPartition::parse("1a"), std::invalid_argument);
}

TEST_CASE("prefix unions") {
  auto q = PermutationPartition::parse("142|5|3");
  std::vector<int> idx{3, 1, 2};
  CHECK(prefix_union(q, idx) == mask({1, 3, 4}));
  std::vector<int> low{1, 1, 1}, high{4, 2, 2};
  CHECK(prefix_union(q, low) == 0);
  CHECK(prefix_union(q, high) == mask({1, 2, 3, 4, 5}));
  std::vector<int> bad{5, 1, 1}, short_idx{1, 1};
  CHECK_THROWS_AS(prefix_union(q, bad), std::invalid_argument);
  CHECK_THROWS_AS(prefix_union(q, short_idx), std::invalid_argument);
  CHECK(is_prefix_union(q, mask({1, 3, 4})));
  CHECK_FALSE(is_prefix_union(q, mask({4})));
}

TEST_CASE("enumeration") {
  std::vector<std::string> listed;
  for (const auto& q : enumerate_partitions(2, 2)) listed.push_back(q.to_string());
  CHECK(listed == std::vector<std::string>{"12|", "1|2", "|12", "21|", "2|1", "|21"});
  CHECK(enumerate_partitions(1, 1).size() == 1);
  CHECK(enumerate_partitions(3, 2).size() == 24);
  for (int n = 0; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      auto all = enumerate_partitions(n, d);
      CHECK(BigInt(all.size()) == partition_count(n, d));
      std::set<std::string> distinct;
      for (const auto& q : all) distinct.insert(q.to_string());
      CHECK(distinct.size() == all.size());
    }
  CHECK_THROWS_AS(enumerate_partitions(8, 3, 1000), CapExceeded);
}

TEST_CASE("prefix counts") {
  CHECK(count_partitions_with_prefix(3, 2, 1) == 12);
  CHECK(enumerated_prefix_count(3, 2, mask({1})) == 12);
  CHECK(count_partitions_with_prefix(2, 1, 1) == 1);
  CHECK(enumerated_prefix_count(2, 1, mask({1})) == 1);
  CHECK(count_partitions_with_prefix(2, 2, 0) == 6);
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d)
      for (SetMask s = 0; s < (SetMask{1} << n); ++s)
        CHECK(BigInt(enumerated_prefix_count(n, d, s)) == count_partitions_with_prefix(n, d, set_size(s)));
}

TEST_CASE("random partitions are valid and cover the space") {
  Rng rng(17);
  std::set<std::string> seen;
  for (int t = 0; t < 600; ++t) seen.insert(random_partition(2, 2, rng).to_string());
  CHECK(seen.size() == 6);
}

TEST_CASE("build_mq") {
  auto q = PermutationPartition::parse("142|5|3");
  CHECK(build_mq(q, SetFamily(5, {})).weight() == 0);
  CHECK(build_mq(q, SetFamily(5, {0})) == HyperMatrix({4, 2, 2}, {{1, 1, 1}}));
  CHECK(build_mq(q, SetFamily(5, {mask({1, 3, 4})})) == HyperMatrix({4, 2, 2}, {{3, 1, 2}}));
  CHECK_THROWS_AS(build_mq(q, SetFamily(4, {})), std::invalid_argument);
}

TEST_CASE("double counting identity") {
  auto base = double_count_identity(SetFamily(2, {0}), 2);
  CHECK(base.lhs == 6);
  CHECK(base.rhs == 6);
  CHECK(base.equal);
  CHECK(double_count_identity(SetFamily::power_set(2), 2).equal);
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    auto f = random_induced_free_family(4, diamond(), rng);
    for (int d : {1, 2, 3}) CHECK(double_count_identity(f, d).equal);
  }
}

TEST_CASE("M_Q freeness") {
  for (const auto& p : {diamond(), vee(2), butterfly()}) {
    auto dim = dimension(p);
    auto report = verify_mq_freeness(p, dim.witness, 5, 60, 9);
    CHECK(report.trials == 60);
    CHECK(report.violations == 0);
  }
  auto best = la_exact(4, diamond(), true);
  auto mp = realizer_to_matrix(diamond(), dimension(diamond()).witness);
  Rng rng(1);
  for (int t = 0; t < 50; ++t) CHECK_FALSE(contains(build_mq(random_partition(4, 2, rng), best.witness), mp));
  CHECK_THROWS_AS(verify_mq_freeness(chain(2), dimension(chain(2)).witness, 3, 1, 1), std::invalid_argument);
}

TEST_CASE("random induced-free families") {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    auto f = random_induced_free_family(4, butterfly(), rng);
    CHECK_FALSE(family_contains(f, butterfly(), true));
  }
}

}  // TEST_SUITE
