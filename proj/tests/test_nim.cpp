#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "goishi/nim.hpp"
#include "goishi/oracle.hpp"

using namespace goishi;
using Piles = std::vector<std::uint64_t>;

TEST_CASE("nim grundy") {
  CHECK(nim::grundy(Piles{}) == 0);
  CHECK(nim::grundy(Piles{3, 5}) == 6);
  CHECK(nim::grundy(Piles{5, 3, 4}) == 2);
  // Same value from the brute-force search over three-pile nim.
  CHECK(oracle::grundy({5, 3, 4}, oracle::nim_graph(3, 5)) == 2);
}

TEST_CASE("nim grundy is permutation invariant and additive over concatenation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint64_t> pile(0, 1000);
  std::uniform_int_distribution<int> count(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    Piles p(count(rng)), q(count(rng));
    for (auto& v : p) v = pile(rng);
    for (auto& v : q) v = pile(rng);
    Piles shuffled = p;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(nim::grundy(shuffled) == nim::grundy(p));
    Piles joined = p;
    joined.insert(joined.end(), q.begin(), q.end());
    CHECK(nim::grundy(joined) == (nim::grundy(p) ^ nim::grundy(q)));
  }
}

TEST_CASE("nim outcome under normal play") {
  CHECK(nim::outcome_normal(Piles{}) == Outcome::P);
  CHECK(nim::outcome_normal(Piles{1}) == Outcome::N);
  for (std::uint64_t x = 0; x < 20; ++x) {
    for (std::uint64_t y = 0; y < 20; ++y) {
      CHECK(nim::outcome_normal(Piles{x, y, x ^ y}) == Outcome::P);
    }
  }
}

TEST_CASE("three-pile nim agrees with the oracle up to 15") {
  oracle::Solver solver(oracle::nim_graph(3, 15));
  for (std::size_t x = 0; x <= 15; ++x) {
    for (std::size_t y = 0; y <= 15; ++y) {
      for (std::size_t z = 0; z <= 15; ++z) {
        REQUIRE(nim::outcome_normal(Piles{x, y, z}) ==
                solver.solve({x, y, z}, Convention::Normal));
      }
    }
  }
}

TEST_CASE("misere two-pile nim") {
  const auto gm1 = ValueTable::build(SeedKind::GM1, 41);
  CHECK(nim::misere_two_pile_outcome(gm1, 0, 1) == Outcome::P);
  CHECK(nim::misere_two_pile_outcome(gm1, 7, 7) == Outcome::P);
  CHECK(nim::misere_two_pile_outcome(gm1, 0, 0) == Outcome::N);

  oracle::Solver solver(oracle::nim_graph(2, 40));
  for (std::size_t x = 0; x <= 40; ++x) {
    for (std::size_t y = 0; y <= 40; ++y) {
      const bool closed_form = (x + y == 1) || (x == y && x >= 2);
      const Outcome o = nim::misere_two_pile_outcome(gm1, x, y);
      REQUIRE((o == Outcome::P) == closed_form);
      REQUIRE(o == solver.solve({x, y, 0}, Convention::Misere));
    }
  }

  CHECK_THROWS_AS(nim::misere_two_pile_outcome(gm1, 41, 0), CapacityError);
  CHECK_THROWS_AS(nim::misere_two_pile_outcome(ValueTable::build(SeedKind::G0, 4), 1, 1),
                  std::invalid_argument);
}
