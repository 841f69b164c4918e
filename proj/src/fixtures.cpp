#include "goishi/fixtures.hpp"

namespace goishi::fixtures {

namespace {

// clang-format off
constexpr Grid kG0{{
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
    {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10},
    {2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9},
    {3, 2, 1, 0, 7, 6, 5, 4, 11, 10, 9, 8},
    {4, 5, 6, 7, 0, 1, 2, 3, 12, 13, 14, 15},
    {5, 4, 7, 6, 1, 0, 3, 2, 13, 12, 15, 14},
    {6, 7, 4, 5, 2, 3, 0, 1, 14, 15, 12, 13},
    {7, 6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12},
    {8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3},
    {9, 8, 11, 10, 13, 12, 15, 14, 1, 0, 3, 2},
    {10, 11, 8, 9, 14, 15, 12, 13, 2, 3, 0, 1},
    {11, 10, 9, 8, 15, 14, 13, 12, 3, 2, 1, 0},
}};

constexpr Grid kG1{{
    {1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
    {0, 1, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10},
    {2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9},
    {3, 2, 1, 0, 7, 6, 5, 4, 11, 10, 9, 8},
    {4, 5, 6, 7, 0, 1, 2, 3, 12, 13, 14, 15},
    {5, 4, 7, 6, 1, 0, 3, 2, 13, 12, 15, 14},
    {6, 7, 4, 5, 2, 3, 0, 1, 14, 15, 12, 13},
    {7, 6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12},
    {8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3},
    {9, 8, 11, 10, 13, 12, 15, 14, 1, 0, 3, 2},
    {10, 11, 8, 9, 14, 15, 12, 13, 2, 3, 0, 1},
    {11, 10, 9, 8, 15, 14, 13, 12, 3, 2, 1, 0},
}};

constexpr Grid kGM1{{
    {-1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
    {1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9},
    {2, 3, 4, 0, 1, 6, 8, 5, 9, 7, 12, 13},
    {3, 4, 5, 1, 0, 2, 9, 10, 11, 6, 7, 8},
    {4, 5, 3, 6, 2, 0, 1, 9, 10, 11, 8, 7},
    {5, 6, 7, 8, 9, 1, 0, 2, 3, 4, 13, 12},
    {6, 7, 8, 5, 10, 9, 2, 0, 1, 3, 4, 14},
    {7, 8, 6, 9, 11, 10, 3, 1, 0, 2, 5, 4},
    {8, 9, 10, 7, 6, 11, 4, 3, 2, 0, 1, 5},
    {9, 10, 11, 12, 7, 8, 13, 4, 5, 1, 0, 2},
    {10, 11, 9, 13, 8, 7, 12, 14, 4, 5, 2, 0},
}};

constexpr Grid kGM1Star{{
    {0, -1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
    {-1, 0, 2, 1, 4, 3, 6, 5, 8, 7, 10, 9},
    {1, 2, 0, 3, 5, 6, 4, 7, 9, 10, 8, 11},
    {2, 1, 3, 0, 6, 5, 7, 4, 10, 9, 11, 8},
    {3, 4, 5, 6, 0, 1, 2, 8, 11, 12, 7, 13},
    {4, 3, 6, 5, 1, 0, 8, 2, 12, 11, 13, 7},
    {5, 6, 4, 7, 2, 8, 0, 1, 3, 13, 12, 14},
    {6, 5, 7, 4, 8, 2, 1, 0, 13, 3, 14, 12},
    {7, 8, 9, 10, 11, 12, 3, 13, 0, 1, 2, 4},
    {8, 7, 10, 9, 12, 11, 13, 3, 1, 0, 4, 2},
    {9, 10, 8, 11, 7, 13, 12, 14, 2, 4, 0, 1},
    {10, 9, 11, 8, 13, 7, 14, 12, 4, 2, 1, 0},
}};
// clang-format on

}  // namespace

const Grid& published(SeedKind kind) {
  switch (kind) {
    case SeedKind::G0:
      return kG0;
    case SeedKind::G1:
      return kG1;
    case SeedKind::GM1:
      return kGM1;
    case SeedKind::GM1Star:
      return kGM1Star;
  }
  return kG0;
}

}  // namespace goishi::fixtures
