#pragma once

#include <cstdint>
#include <span>

#include "goishi/core.hpp"
#include "goishi/outcome.hpp"

namespace goishi::nim {

/// XOR of the pile sizes. An empty list is the terminal position, value 0.
std::uint64_t grundy(std::span<const std::uint64_t> piles);

Outcome outcome_normal(std::span<const std::uint64_t> piles);

/// Two-pile misere nim read off a GM1 table: P exactly where the table is 0.
/// Throws std::invalid_argument for a table of the wrong kind and
/// CapacityError when (x, y) lies beyond it.
Outcome misere_two_pile_outcome(const ValueTable& gm1, std::size_t x, std::size_t y);

}  // namespace goishi::nim
