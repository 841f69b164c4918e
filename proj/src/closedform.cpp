#include "goishi/closedform.hpp"

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace goishi::closedform {

namespace {

using Cell = std::pair<long, long>;

// {(step*n + dx, step*n + dy) | n >= min_n}
struct Family {
  long step;
  long dx;
  long dy;
  long min_n;

  bool contains(long x, long y) const {
    const long shifted = x - dx;
    if (shifted % step != 0) return false;
    const long n = shifted / step;
    return n >= min_n && y == step * n + dy;
  }
};

struct ValueSet {
  std::span<const Family> families;
  std::span<const Cell> exceptions;

  bool contains(long x, long y) const {
    for (const auto& f : families) {
      if (f.contains(x, y)) return true;
    }
    for (const auto& [ex, ey] : exceptions) {
      if (ex == x && ey == y) return true;
    }
    return false;
  }
};

// GM1 == 0: (n, n), n >= 2
constexpr std::array kA0{Family{1, 0, 0, 2}};
constexpr std::array kA0Extra{Cell{0, 1}, Cell{1, 0}};
// GM1 == 1: (2n, 2n-1), (2n-1, 2n), n >= 2
constexpr std::array kA1{Family{2, 0, -1, 2}, Family{2, -1, 0, 2}};
constexpr std::array kA1Extra{Cell{0, 2}, Cell{1, 1}, Cell{2, 0}};
// GM1 == 2: (2n, 2n+1), (2n+1, 2n), n >= 2
constexpr std::array kA2{Family{2, 0, 1, 2}, Family{2, 1, 0, 2}};
constexpr std::array kA2Extra{Cell{0, 3}, Cell{1, 2}, Cell{2, 1}, Cell{3, 0}};
// GM1 == 3: (4n-2, 4n), (4n-1, 4n+1), (4n, 4n-2), (4n+1, 4n-1), n >= 2
constexpr std::array kA3{Family{4, -2, 0, 2}, Family{4, -1, 1, 2}, Family{4, 0, -2, 2},
                         Family{4, 1, -1, 2}};
constexpr std::array kA3Extra{Cell{0, 4}, Cell{1, 3}, Cell{2, 5},
                              Cell{3, 1}, Cell{4, 0}, Cell{5, 2}};

// GM1STAR == 0: (n, n), n >= 0
constexpr std::array kB0{Family{1, 0, 0, 0}};
// GM1STAR == 1: (2n, 2n+1), (2n+1, 2n), n >= 2
constexpr std::array kB1{Family{2, 0, 1, 2}, Family{2, 1, 0, 2}};
constexpr std::array kB1Extra{Cell{0, 2}, Cell{1, 3}, Cell{2, 0}, Cell{3, 1}};
// GM1STAR == 2: (4n+2, 4n), (4n+3, 4n+1), (4n, 4n+2), (4n+1, 4n+3), n >= 1
constexpr std::array kB2{Family{4, 2, 0, 1}, Family{4, 3, 1, 1}, Family{4, 0, 2, 1},
                         Family{4, 1, 3, 1}};
constexpr std::array kB2Extra{Cell{0, 3}, Cell{1, 2}, Cell{2, 1}, Cell{3, 0}};
// GM1STAR == 3: same family as GM1 == 3, different exceptions.
constexpr std::array kB3{Family{4, -2, 0, 2}, Family{4, -1, 1, 2}, Family{4, 0, -2, 2},
                         Family{4, 1, -1, 2}};
constexpr std::array kB3Extra{Cell{0, 4}, Cell{1, 5}, Cell{2, 3},
                              Cell{3, 2}, Cell{4, 0}, Cell{5, 1}};

ValueSet a_set(int k) {
  switch (k) {
    case 0: return {kA0, kA0Extra};
    case 1: return {kA1, kA1Extra};
    case 2: return {kA2, kA2Extra};
    case 3: return {kA3, kA3Extra};
  }
  throw std::invalid_argument("closed forms exist only for values 0..3, got " +
                              std::to_string(k));
}

ValueSet b_set(int k) {
  switch (k) {
    case 0: return {kB0, {}};
    case 1: return {kB1, kB1Extra};
    case 2: return {kB2, kB2Extra};
    case 3: return {kB3, kB3Extra};
  }
  throw std::invalid_argument("closed forms exist only for values 0..3, got " +
                              std::to_string(k));
}

}  // namespace

bool in_A(int k, std::size_t x, std::size_t y) {
  return a_set(k).contains(static_cast<long>(x), static_cast<long>(y));
}

bool in_B(int k, std::size_t x, std::size_t y) {
  return b_set(k).contains(static_cast<long>(x), static_cast<long>(y));
}

bool block_symmetric(const ValueTable& gm1star, std::size_t bound) {
  if (gm1star.spec().kind() != SeedKind::GM1Star) {
    throw std::invalid_argument("block symmetry is a property of GM1STAR tables");
  }
  if (2 * bound + 1 >= gm1star.size()) {
    throw CapacityError("bound " + std::to_string(bound) + " needs a table of size " +
                            std::to_string(2 * bound + 2) + ", have " +
                            std::to_string(gm1star.size()),
                        gm1star.size());
  }
  for (std::size_t n = 0; n <= bound; ++n) {
    for (std::size_t m = 0; m <= bound; ++m) {
      const std::size_t x = 2 * n;
      const std::size_t y = 2 * m;
      if (gm1star(x, y) != gm1star(x + 1, y + 1)) return false;
      if (gm1star(x + 1, y) != gm1star(x, y + 1)) return false;
    }
  }
  return true;
}

}  // namespace goishi::closedform
