#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "goishi/core.hpp"

using namespace goishi;

namespace {

constexpr SeedKind kKinds[] = {SeedKind::G0, SeedKind::G1, SeedKind::GM1, SeedKind::GM1Star};

// Straight from the definition: smallest nonnegative integer missing from s.
int mex_by_definition(const std::set<int>& s) {
  int m = 0;
  while (s.contains(m)) ++m;
  return m;
}

}  // namespace

TEST_CASE("mex") {
  CHECK(mex(std::vector<int>{}) == 0);
  CHECK(mex(std::vector<int>{0, 1, 3}) == 2);
  CHECK(mex(std::vector<int>{-1, 0}) == 1);
  CHECK(mex(std::vector<int>{-1}) == 0);
  CHECK(mex(std::vector<int>{2, 2, 0, 1, 1}) == 3);
}

TEST_CASE("mex property on random sets with negatives") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> len(0, 20);
  std::uniform_int_distribution<int> val(-3, 12);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> values(len(rng));
    for (auto& v : values) v = val(rng);
    const std::set<int> s(values.begin(), values.end());
    const int m = mex(values);
    CHECK(m >= 0);
    CHECK_FALSE(s.contains(m));
    for (int k = 0; k < m; ++k) CHECK(s.contains(k));
    CHECK(m == mex_by_definition(s));
  }
}

TEST_CASE("seed specs") {
  using Cell = std::tuple<std::size_t, std::size_t, int>;
  auto seeds = [](SeedKind k) {
    std::vector<Cell> out;
    for (const auto& c : SeedSpec::of(k).cells()) out.emplace_back(c.x, c.y, c.value);
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(seeds(SeedKind::G0) == std::vector<Cell>{Cell{0, 0, 0}});
  CHECK(seeds(SeedKind::G1) == std::vector<Cell>{Cell{0, 0, 1}});
  CHECK(seeds(SeedKind::GM1) == std::vector<Cell>{Cell{0, 0, -1}});
  CHECK(seeds(SeedKind::GM1Star) ==
        std::vector<Cell>{Cell{0, 0, 0}, Cell{0, 1, -1}, Cell{1, 0, -1}});
  CHECK(parse_seed_kind("gm1star") == SeedKind::GM1Star);
  CHECK_FALSE(parse_seed_kind("G2").has_value());
}

TEST_CASE("build_table published cells") {
  const auto g0 = ValueTable::build(SeedKind::G0, 12);
  const std::vector<int> row2{2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9};
  auto r = g0.row(2);
  CHECK(std::vector<int>(r.begin(), r.end()) == row2);

  const auto gm1 = ValueTable::build(SeedKind::GM1, 12);
  CHECK(gm1.value(0, 0) == -1);
  CHECK(gm1.value(5, 2) == 3);
  CHECK(gm1.value(3, 4) == 1);

  const auto star = ValueTable::build(SeedKind::GM1Star, 12);
  CHECK(star.value(0, 1) == -1);
  CHECK(star.value(4, 6) == 2);
  CHECK(star.value(8, 11) == 4);

  CHECK(ValueTable::build(SeedKind::G1, 12).value(1, 0) == 0);
}

TEST_CASE("build_table errors") {
  CHECK_THROWS_AS(ValueTable::build(SeedKind::G0, 0), std::invalid_argument);
  CHECK_THROWS_AS(ValueTable::build(SeedKind::G0, 513), CapacityError);
  CHECK_THROWS_AS(ValueTable::build(SeedKind::G0, 20, 16), CapacityError);
  try {
    (void)ValueTable::build(SeedKind::GM1, 600);
  } catch (const CapacityError& e) {
    CHECK(e.limit() == 512);
  }
  const auto t = ValueTable::build(SeedKind::GM1, 4);
  CHECK_THROWS_AS((void)t.value(4, 0), std::out_of_range);
  CHECK_THROWS_AS((void)t.value(0, 4), std::out_of_range);
  // A one-cell table is just the seed.
  CHECK(ValueTable::build(SeedKind::G1, 1).value(0, 0) == 1);
}

TEST_CASE("every unseeded cell is the mex of its row and column prefixes") {
  constexpr std::size_t n = 64;
  for (auto kind : kKinds) {
    CAPTURE(to_string(kind));
    const auto t = ValueTable::build(kind, n);
    const auto& spec = t.spec();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (auto s = spec.seeded(x, y)) {
          CHECK(t(x, y) == *s);
          continue;
        }
        std::set<int> before;
        for (std::size_t xp = 0; xp < x; ++xp) before.insert(t(xp, y));
        for (std::size_t yp = 0; yp < y; ++yp) before.insert(t(x, yp));
        REQUIRE(t(x, y) == mex_by_definition(before));
      }
    }
  }
}

TEST_CASE("symmetry, lower bound and determinism") {
  constexpr std::size_t n = 200;
  for (auto kind : kKinds) {
    CAPTURE(to_string(kind));
    const auto t = ValueTable::build(kind, n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        REQUIRE(t(x, y) == t(y, x));
        REQUIRE(t(x, y) >= -1);
        if (t(x, y) == -1) REQUIRE(t.spec().seeded(x, y) == -1);
      }
    }
    CHECK(t == ValueTable::build(kind, n));
  }
}

TEST_CASE("G0 is XOR and G1 swaps 0/1 on the corner") {
  constexpr std::size_t n = 128;
  const auto g0 = ValueTable::build(SeedKind::G0, n);
  const auto g1 = ValueTable::build(SeedKind::G1, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      REQUIRE(g0(x, y) == static_cast<int>(x ^ y));
      if (x < 2 && y < 2) {
        REQUIRE(g1(x, y) == 1 - g0(x, y));
      } else {
        REQUIRE(g1(x, y) == g0(x, y));
      }
    }
  }
}
