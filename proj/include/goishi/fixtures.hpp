#pragma once

// Published 12x12 value tables, transcribed by hand. Rows are x, columns y.

#include <array>
#include <cstddef>

#include "goishi/core.hpp"

namespace goishi::fixtures {

inline constexpr std::size_t kSize = 12;
using Grid = std::array<std::array<int, kSize>, kSize>;

const Grid& published(SeedKind kind);

}  // namespace goishi::fixtures
