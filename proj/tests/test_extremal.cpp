#include <filesystem>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "posetmat/cache.hpp"
#include "posetmat/error.hpp"
#include "posetmat/extremal.hpp"
#include "posetmat/poset.hpp"

using namespace posetmat;

namespace {

const HyperMatrix kI2({2, 2}, {{1, 1}, {2, 2}});

bool is_free(const HyperMatrix& m, const std::vector<HyperMatrix>& ps) {
  for (const auto& a : ps)
    if (contains(m, a)) return false;
  return true;
}

}  // namespace

TEST_SUITE("extremal") {

TEST_CASE("one-dimensional law") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= 5; ++k) {
      std::vector<Coord> ones;
      for (int i = 1; i <= k; ++i) ones.push_back({i});
      CHECK(ex_exact({n}, HyperMatrix({k}, ones)).value == std::min(n, k - 1));
    }
  CHECK(ex_exact({5}, HyperMatrix({3}, {{1}, {2}, {3}})).value == 2);
}

TEST_CASE("single-one pattern") {
  for (auto dims : std::vector<std::vector<int>>{{1, 1}, {2, 3}, {4, 4}, {2, 2, 2}})
    CHECK(ex_exact(dims, HyperMatrix(std::vector<int>(dims.size(), 1), {Coord(dims.size(), 1)})).value == 0);
}

TEST_CASE("identity pattern n=3 against the oracle") {
  auto r = ex_exact({3, 3}, kI2);
  CHECK(r.value == oracle::ex({3, 3}, {kI2}));
  CHECK(r.value == 5);
  CHECK(r.witness.weight() == 5);
  CHECK_FALSE(contains(r.witness, kI2));
}

TEST_CASE("ex_exact matches the oracle on small grids") {
  std::vector<std::vector<HyperMatrix>> sets{
      {kI2},
      {HyperMatrix({2, 2}, {{1, 2}, {2, 1}})},
      {HyperMatrix({2, 2}, {{1, 1}, {1, 2}, {2, 1}})},
      {HyperMatrix({2, 3}, {{1, 1}, {2, 2}, {1, 3}})},
      {HyperMatrix({2, 2}, {{1, 1}, {2, 2}}), HyperMatrix({1, 2}, {{1, 1}, {1, 2}})},
      {HyperMatrix({2, 2, 2}, {{1, 1, 1}, {2, 2, 2}})},
  };
  for (const auto& ps : sets) {
    const int d = static_cast<int>(ps.front().dimension());
    std::vector<std::vector<int>> grids =
        d == 2 ? std::vector<std::vector<int>>{{2, 3}, {3, 3}, {3, 4}, {4, 4}}
               : std::vector<std::vector<int>>{{2, 2, 2}, {2, 2, 3}};
    for (const auto& g : grids) {
      auto r = ex_exact(g, ps);
      CHECK(r.value == oracle::ex(g, ps));
      CHECK(static_cast<long>(r.witness.weight()) == r.value);
      CHECK(is_free(r.witness, ps));
    }
  }
}

TEST_CASE("witness is the lexicographically least optimum") {
  auto r = ex_exact({3, 3}, kI2);
  CHECK(r.witness == HyperMatrix({3, 3}, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}}));
}

TEST_CASE("caps and errors") {
  CHECK_THROWS_AS(ex_exact({7, 7}, kI2), CapExceeded);
  ExOptions over;
  over.cap_override = true;
  CHECK(ex_exact({7, 7}, kI2, over).value == 13);
  CHECK_THROWS_AS(ex_exact({3, 3}, std::vector<HyperMatrix>{}), std::invalid_argument);
  CHECK_THROWS_AS(ex_exact({3, 3}, HyperMatrix({2}, {{1}})), std::invalid_argument);
}

TEST_CASE("monotonicity") {
  CHECK(ex_monotonicity_check({kI2}, {3, 3}, {3, 3}).holds);
  auto r = ex_monotonicity_check({kI2}, {2, 2}, {4, 4});
  CHECK(r.small_value == 3);
  CHECK(r.big_value == 7);
  CHECK(r.holds);
  auto cube = ex_monotonicity_check({HyperMatrix({2, 2, 2}, {{1, 1, 1}, {2, 2, 2}})}, {2, 2, 2}, {3, 3, 3});
  CHECK(cube.holds);
}

TEST_CASE("la_exact against the oracle") {
  for (const auto& p : {chain(2), chain(3), diamond(), vee(2), butterfly(), antichain(2)})
    for (int n = 1; n <= 3; ++n)
      for (bool induced : {false, true}) {
        auto r = la_exact(n, p, induced);
        CAPTURE(n);
        CAPTURE(induced);
        CHECK(r.value == oracle::la(n, p, induced));
        CHECK(static_cast<long>(r.witness.size()) == r.value);
        CHECK_FALSE(family_contains(r.witness, p, induced));
      }
}

TEST_CASE("la_exact classical values") {
  CHECK(la_exact(2, diamond(), true).value == 3);
  CHECK(la_exact(4, chain(2), false).value == 6);
  CHECK(la_exact(4, chain(3), true).value == 10);
  CHECK(la_exact(4, antichain(2), true).value == 5);
  for (const auto& p : {diamond(), vee(2), butterfly()})
    CHECK(la_exact(4, p, false).value <= la_exact(4, p, true).value);
  CHECK_THROWS_AS(la_exact(6, chain(2), false), CapExceeded);
}

TEST_CASE("tardos diamond") {
  CHECK(tardos_diamond_check(1).value == 1);
  auto two = tardos_diamond_check(2);
  CHECK(two.value <= 4);
  CHECK(two.holds);
  auto three = tardos_diamond_check(3);
  CHECK(three.value == oracle::ex({3, 3}, enumerate_patterns(diamond())));
  CHECK(three.bound == 12);
  CHECK(three.holds);
}

TEST_CASE("result cache") {
  auto dir = std::filesystem::temp_directory_path() / "posetmat-test-cache";
  std::filesystem::remove_all(dir);
  ResultCache cache(dir);
  ExOptions opts;
  opts.cache = &cache;
  auto first = ex_exact({4, 4}, kI2, opts);
  CHECK_FALSE(first.from_cache);
  auto second = ex_exact({4, 4}, kI2, opts);
  CHECK(second.from_cache);
  CHECK(second.value == first.value);
  CHECK(second.witness == first.witness);

  LaOptions lopts;
  lopts.cache = &cache;
  auto la1 = la_exact(3, diamond(), true, lopts);
  auto la2 = la_exact(3, diamond(), true, lopts);
  CHECK(la2.from_cache);
  CHECK(la2.witness.sets() == la1.witness.sets());
  std::filesystem::remove_all(dir);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
}

}  // TEST_SUITE
