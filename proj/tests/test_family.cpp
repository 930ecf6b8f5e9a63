#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "posetmat/family.hpp"
#include "posetmat/io.hpp"
#include "posetmat/random.hpp"

using namespace posetmat;

namespace {

SetFamily random_family(int n, double density, Rng& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<SetMask> sets;
  for (SetMask s = 0; s < (SetMask{1} << n); ++s)
    if (coin(rng)) sets.push_back(s);
  return SetFamily(n, sets);
}

}  // namespace

TEST_SUITE("family") {

TEST_CASE("construction") {
  CHECK_THROWS_AS(SetFamily(2, {0b100}), std::invalid_argument);
  CHECK_THROWS_AS(SetFamily(2, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SetFamily(63, {}), std::invalid_argument);
  SetFamily f(3, {0b111, 0b010, 0b001, 0});
  CHECK(f.sets() == std::vector<SetMask>{0, 0b001, 0b010, 0b111});
  CHECK(f.has(0b010));
  CHECK_FALSE(f.has(0b011));
  CHECK(SetFamily::power_set(4).size() == 16);
  CHECK(SetFamily::level(5, 2).size() == 10);
}

TEST_CASE("family_contains examples") {
  CHECK(family_contains(SetFamily::power_set(2), diamond(), true));
  for (int n = 1; n <= 6; ++n) CHECK_FALSE(family_contains(SetFamily::level(n, n / 2), chain(2), false));
  CHECK(family_contains(SetFamily(3, {0, 0b1, 0b11, 0b111}), chain(4), true));
  CHECK_FALSE(family_contains(SetFamily(3, {0, 0b1, 0b11}), chain(4), false));
}

TEST_CASE("family_contains agrees with the oracle") {
  Rng rng(8);
  std::vector<Poset> ps{diamond(), butterfly(), vee(2), chain(3), antichain(3)};
  for (int trial = 0; trial < 150; ++trial) {
    const int n = uniform_int(rng, 2, 4);
    auto f = random_family(n, 0.35, rng);
    if (f.size() > 9) continue;
    for (const auto& p : ps)
      for (bool induced : {false, true}) {
        auto copy = find_copy(f, p, induced);
        CHECK(copy.has_value() == oracle::family_contains(f.sets(), p, induced));
        if (copy) {
          for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = 0; y < p.size(); ++y) {
              if (x == y) continue;
              const bool inc = (*copy)[x] != (*copy)[y] && ((*copy)[x] & (*copy)[y]) == (*copy)[x];
              if (p.less(x, y)) CHECK(inc);
              else if (induced) CHECK_FALSE(inc);
            }
        }
      }
  }
}

TEST_CASE("lubell") {
  for (int n = 0; n <= 6; ++n) CHECK(lubell(SetFamily::power_set(n)) == n + 1);
  CHECK(lubell(SetFamily::level(6, 2)) == 1);
  CHECK(lubell(SetFamily(3, {0})) == 1);
  CHECK(shifted_lubell(SetFamily(2, {0}), 2) == Rational(1, 4));
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    auto f = random_family(uniform_int(rng, 1, 5), 0.5, rng);
    CHECK(shifted_lubell(f, 1) == lubell(f));
    for (int d = 2; d <= 4; ++d) CHECK(shifted_lubell(f, d) <= lubell(f));
  }
  CHECK_THROWS_AS(shifted_lubell(SetFamily(2, {0}), 0), std::invalid_argument);
}

TEST_CASE("json round trip") {
  SetFamily f(4, {0, 0b1001, 0b1111});
  auto g = family_from_json(family_to_json(f));
  CHECK(g.sets() == f.sets());
  CHECK(g.ground() == 4);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n":2,"sets":[[3]]})")), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n":2,"sets":[[1],[1]]})")), std::invalid_argument);
}

}  // TEST_SUITE
