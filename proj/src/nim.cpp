#include "goishi/nim.hpp"

#include <functional>
#include <numeric>

namespace goishi::nim {

std::uint64_t grundy(std::span<const std::uint64_t> piles) {
  return std::accumulate(piles.begin(), piles.end(), std::uint64_t{0},
                         std::bit_xor<>());
}

Outcome outcome_normal(std::span<const std::uint64_t> piles) {
  return grundy(piles) == 0 ? Outcome::P : Outcome::N;
}

Outcome misere_two_pile_outcome(const ValueTable& gm1, std::size_t x, std::size_t y) {
  if (gm1.spec().kind() != SeedKind::GM1) {
    throw std::invalid_argument("misere two-pile nim needs a GM1 table");
  }
  if (x >= gm1.size() || y >= gm1.size()) {
    throw CapacityError("pile sizes must be below " + std::to_string(gm1.size()),
                        gm1.size());
  }
  return gm1(x, y) == 0 ? Outcome::P : Outcome::N;
}

}  // namespace goishi::nim
