#pragma once

#include <cstddef>

#include "goishi/core.hpp"

namespace goishi::closedform {

/// Membership in the set where GM1 takes the value k (0 <= k <= 3): a periodic
/// family plus a short list of small exceptions. Throws std::invalid_argument
/// for any other k.
bool in_A(int k, std::size_t x, std::size_t y);

/// Same for GM1STAR.
bool in_B(int k, std::size_t x, std::size_t y);

/// Checks that every aligned 2x2 block of a GM1STAR table has equal
/// diagonal entries, for block indices n, m <= bound. Needs 2*bound+1 below
/// the table size, otherwise throws CapacityError.
bool block_symmetric(const ValueTable& gm1star, std::size_t bound);

}  // namespace goishi::closedform
