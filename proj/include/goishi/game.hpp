#pragma once

// Linear two-player goishi hiroi.
//
// A position is the stone line A^x B^y A^z. A move picks up one or more
// consecutive stones of a single colour; a colour change ends the sweep and
// empty points are skipped. Once the middle block is gone the two A blocks
// touch and behave as a single block of x + z stones.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "goishi/core.hpp"
#include "goishi/outcome.hpp"

namespace goishi {

struct Position {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;

  std::size_t total() const noexcept { return x + y + z; }
  bool terminal() const noexcept { return total() == 0; }

  friend auto operator<=>(const Position&, const Position&) = default;
};

std::string to_string(const Position& p);

enum class Block { Left, Middle, Right, Merged };

std::string_view to_string(Block block);

/// Which block a move swept and how many stones it picked up.
struct Pickup {
  Block block = Block::Middle;
  std::size_t removed = 0;

  std::string describe() const;

  friend bool operator==(const Pickup&, const Pickup&) = default;
};

struct Move {
  Position from;
  Position to;
  Pickup pickup;

  friend bool operator==(const Move&, const Move&) = default;
};

/// (x, 0, z) becomes (x + z, 0, 0); anything with a middle block is unchanged.
Position canonicalize(const Position& p);

/// All legal moves, in the engine's tie-break order: middle-block results by
/// increasing y', then left by increasing x', then right by increasing z'.
/// With no middle block the results are (t, 0, 0) for increasing t.
std::vector<Move> moves(const Position& p);

/// Outcome classification and perfect play backed by the GM1 and GM1STAR
/// tables. A position is P exactly when its middle block holds one more stone
/// than the table value at (x, z).
class Engine {
 public:
  explicit Engine(std::size_t table_size = kDefaultMaxTableSize,
                  std::size_t max_size = kDefaultMaxTableSize);

  std::size_t capacity() const noexcept { return gm1_.size(); }
  const ValueTable& table(Convention c) const noexcept {
    return c == Convention::Normal ? gm1_ : gm1star_;
  }

  /// True when outcome() can classify `p` without growing the tables.
  bool fits(const Position& p) const noexcept;

  /// The table value at (x, z): GM1 for normal play, GM1STAR for misere.
  /// Throws CapacityError unless x and z are both below capacity().
  int aux_value(const Position& p, Convention c) const;

  Outcome outcome(const Position& p, Convention c) const;

  /// First P option in tie-break order, or nothing from a P-position.
  std::optional<Move> winning_move(const Position& p, Convention c) const;

  /// The winning move when there is one, otherwise the first legal move.
  /// Nothing only at the terminal position.
  std::optional<Move> engine_move(const Position& p, Convention c) const;

 private:
  int lookup(const ValueTable& t, const Position& p) const;

  ValueTable gm1_;
  ValueTable gm1star_;
};

}  // namespace goishi
