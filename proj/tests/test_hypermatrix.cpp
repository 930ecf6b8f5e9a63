#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "posetmat/blocks.hpp"
#include "posetmat/extremal.hpp"
#include "posetmat/hypermatrix.hpp"
#include "posetmat/random.hpp"

using namespace posetmat;

namespace {

HyperMatrix random_matrix(const std::vector<int>& dims, double density, Rng& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Coord> ones;
  for (const auto& c : oracle::all_cells(dims))
    if (coin(rng)) ones.push_back(c);
  return HyperMatrix(dims, ones);
}

HyperMatrix identity(int k, int d = 2) {
  std::vector<Coord> ones;
  for (int i = 1; i <= k; ++i) ones.push_back(Coord(d, i));
  return HyperMatrix(std::vector<int>(d, k), ones);
}

}  // namespace

TEST_SUITE("hypermatrix") {

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(HyperMatrix({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(HyperMatrix({2, 0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(HyperMatrix({2, 2}, {{3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(HyperMatrix({2, 2}, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(HyperMatrix({2, 2}, {{1, 1}, {1, 1}}), std::invalid_argument);
  HyperMatrix m({2, 3}, {{2, 1}, {1, 3}});
  CHECK(m.weight() == 2);
  CHECK(m.ones().front() == Coord{1, 3});
  CHECK(m.at({2, 1}));
  CHECK_FALSE(m.at({2, 2}));
  CHECK(m.cell_count() == 6);
  CHECK_FALSE(m.is_cubic());
}

TEST_CASE("contains: examples") {
  const auto i2 = identity(2);
  CHECK(contains(i2, i2));
  CHECK(contains(identity(3), i2));
  CHECK_FALSE(contains(HyperMatrix({3, 3}, {{1, 1}}), i2));
  CHECK_FALSE(contains(HyperMatrix({3, 3}, {{1, 3}, {2, 2}, {3, 1}}), i2));
  CHECK_THROWS_AS(contains(identity(3), identity(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(contains(identity(3), HyperMatrix({2, 2}, {})), std::invalid_argument);
}

TEST_CASE("contains agrees with the brute-force oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int d = uniform_int(rng, 1, 3);
    std::vector<int> mdims(d), adims(d);
    for (int j = 0; j < d; ++j) {
      mdims[j] = uniform_int(rng, 1, d == 3 ? 3 : 4);
      adims[j] = uniform_int(rng, 1, 2);
    }
    auto a = random_matrix(adims, 0.6, rng);
    if (a.weight() == 0) continue;
    auto m = random_matrix(mdims, 0.5, rng);
    CAPTURE(trial);
    CHECK(contains(m, a) == oracle::contains(m, a));
  }
}

TEST_CASE("contains is monotone and invariant under axis reversal") {
  Rng rng(5);
  const auto pattern = HyperMatrix({2, 3}, {{1, 2}, {2, 1}, {2, 3}});
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_matrix({5, 5}, 0.4, rng);
    const bool c = contains(m, pattern);
    auto ones = m.ones();
    ones.push_back({uniform_int(rng, 1, 5), uniform_int(rng, 1, 5)});
    std::sort(ones.begin(), ones.end());
    ones.erase(std::unique(ones.begin(), ones.end()), ones.end());
    if (c) CHECK(contains(HyperMatrix({5, 5}, ones), pattern));
    for (int axis = 1; axis <= 2; ++axis)
      CHECK(contains(reverse_axis(m, axis), reverse_axis(pattern, axis)) == c);
  }
}

TEST_CASE("permutation matrices") {
  CHECK(is_permutation_matrix(HyperMatrix({1, 1, 1}, {{1, 1, 1}})));
  CHECK(is_permutation_matrix(identity(2)));
  CHECK_FALSE(is_permutation_matrix(HyperMatrix({2, 2}, {{1, 1}, {1, 2}})));
  CHECK_FALSE(is_permutation_matrix(HyperMatrix({2, 2}, {{1, 1}})));
  CHECK(is_permutation_matrix(HyperMatrix({3, 3, 3}, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}})));
  CHECK_THROWS_AS(is_permutation_matrix(HyperMatrix({2, 3}, {})), std::invalid_argument);
}

TEST_CASE("projection") {
  auto p = projection(HyperMatrix({2, 2}, {{1, 1}, {2, 1}}), 1);
  CHECK(p == HyperMatrix({2}, {{1}}));
  auto q = projection(HyperMatrix({2, 2, 2}, {{1, 1, 1}, {2, 2, 1}}), 3);
  CHECK(q == HyperMatrix({2, 2}, {{1, 1}, {2, 2}}));
  CHECK_THROWS_AS(projection(identity(2), 3), std::invalid_argument);
  CHECK_THROWS_AS(projection(HyperMatrix({3}, {{1}}), 1), std::invalid_argument);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    auto m = random_matrix({3, 4, 2}, 0.3, rng);
    for (int axis = 1; axis <= 3; ++axis) CHECK(projection(m, axis).weight() <= m.weight());
  }
}

TEST_CASE("Loomis-Whitney") {
  CHECK(loomis_whitney_holds(HyperMatrix({3, 3, 3}, {{2, 1, 3}})));
  CHECK(loomis_whitney_holds(HyperMatrix::full({3, 3, 3})));
  CHECK(loomis_whitney_holds(HyperMatrix::full({2, 2, 2, 2})));
  CHECK(loomis_whitney_holds(HyperMatrix({4, 4, 4}, {})));
}

TEST_CASE("sub_box") {
  HyperMatrix m({3, 3}, {{1, 1}, {2, 2}, {3, 3}, {2, 3}});
  std::vector<int> lo{2, 2}, hi{3, 3};
  CHECK(sub_box(m, lo, hi) == HyperMatrix({2, 2}, {{1, 1}, {1, 2}, {2, 2}}));
}

TEST_CASE("block analysis") {
  const auto i2 = identity(2);
  auto single = block_analyze(HyperMatrix({4, 4}, {{2, 3}}), i2, 1);
  for (const auto& b : single.blocks) CHECK(b.thin());
  CHECK(single.coarse.weight() == 1);

  auto full = block_analyze(HyperMatrix::full({4, 4}), i2, 2);
  CHECK(full.grid == std::vector<int>{2, 2});
  for (const auto& b : full.blocks) CHECK(b.wide_axes == std::vector<int>{1, 2});
  CHECK(full.max_wide_per_blockcolumn(1) == 2);
  CHECK(full.coarse.weight() == 0);

  auto ragged = block_analyze(HyperMatrix({5, 3}, {{5, 3}}), i2, 2);
  CHECK(ragged.grid == std::vector<int>{3, 2});
  CHECK(ragged.coarse == HyperMatrix({3, 2}, {{3, 2}}));

  CHECK_THROWS_AS(block_analyze(HyperMatrix({3, 3}, {}), HyperMatrix({2, 2}, {{1, 1}}), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(block_analyze(HyperMatrix({3, 3}, {}), i2, 0), std::invalid_argument);
  CHECK(wide_block_limit(2, 2, 2) == 1);
  CHECK(wide_block_limit(2, 2, 3) == 6);
}

TEST_CASE("block properties on A-free matrices") {
  const auto i2 = identity(2);
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = uniform_int(rng, 2, 8);
    auto m = random_free_matrix({n, n}, {i2}, rng);
    CHECK_FALSE(contains(m, i2));
    for (int s : {1, 2, 3}) {
      auto r = block_analyze(m, i2, s);
      for (int axis = 1; axis <= 2; ++axis)
        CHECK(BigInt(r.max_wide_per_blockcolumn(axis)) <= wide_block_limit(2, s, 2));
      CHECK_FALSE(contains(r.coarse, i2));
    }
  }
}

}  // TEST_SUITE
