#include "goishi/game.hpp"

#include <algorithm>

namespace goishi {

std::string to_string(const Position& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," +
         std::to_string(p.z) + ")";
}

std::string_view to_string(Block block) {
  switch (block) {
    case Block::Left:
      return "left";
    case Block::Middle:
      return "middle";
    case Block::Right:
      return "right";
    case Block::Merged:
      return "merged";
  }
  return "?";
}

std::string Pickup::describe() const {
  return "take " + std::to_string(removed) + (removed == 1 ? " stone" : " stones") +
         " from the " + std::string(to_string(block)) + " block";
}

Position canonicalize(const Position& p) {
  if (p.y == 0) return {p.x + p.z, 0, 0};
  return p;
}

std::vector<Move> moves(const Position& p) {
  std::vector<Move> out;
  if (p.y == 0) {
    const std::size_t t = p.x + p.z;
    out.reserve(t);
    for (std::size_t rest = 0; rest < t; ++rest) {
      out.push_back({p, {rest, 0, 0}, {Block::Merged, t - rest}});
    }
    return out;
  }
  out.reserve(p.total());
  for (std::size_t y = 0; y < p.y; ++y) {
    out.push_back({p, {p.x, y, p.z}, {Block::Middle, p.y - y}});
  }
  for (std::size_t x = 0; x < p.x; ++x) {
    out.push_back({p, {x, p.y, p.z}, {Block::Left, p.x - x}});
  }
  for (std::size_t z = 0; z < p.z; ++z) {
    out.push_back({p, {p.x, p.y, z}, {Block::Right, p.z - z}});
  }
  return out;
}

Engine::Engine(std::size_t table_size, std::size_t max_size)
    : gm1_(ValueTable::build(SeedKind::GM1, table_size, max_size)),
      gm1star_(ValueTable::build(SeedKind::GM1Star, table_size, max_size)) {}

bool Engine::fits(const Position& p) const noexcept {
  const std::size_t n = capacity();
  if (p.x < n && p.z < n) return true;
  // A merged block can be split any way we like without changing the game.
  return p.y == 0 && p.x + p.z <= 2 * (n - 1);
}

int Engine::lookup(const ValueTable& t, const Position& p) const {
  const std::size_t n = t.size();
  if (p.x < n && p.z < n) return t(p.x, p.z);
  if (fits(p)) {
    const std::size_t total = p.x + p.z;
    const std::size_t left = std::min(total, n - 1);
    return t(left, total - left);
  }
  throw CapacityError("position " + to_string(p) + " needs x and z below " +
                          std::to_string(n),
                      n);
}

int Engine::aux_value(const Position& p, Convention c) const {
  const std::size_t n = capacity();
  if (p.x >= n || p.z >= n) {
    throw CapacityError("position " + to_string(p) + " needs x and z below " +
                            std::to_string(n),
                        n);
  }
  return table(c)(p.x, p.z);
}

Outcome Engine::outcome(const Position& p, Convention c) const {
  const long long target = static_cast<long long>(lookup(table(c), p)) + 1;
  return static_cast<long long>(p.y) == target ? Outcome::P : Outcome::N;
}

std::optional<Move> Engine::winning_move(const Position& p, Convention c) const {
  // A misere terminal is N yet has nothing to play.
  if (p.terminal() || outcome(p, c) == Outcome::P) return std::nullopt;
  for (const auto& m : moves(p)) {
    if (outcome(m.to, c) == Outcome::P) return m;
  }
  // Unreachable while the classification is correct.
  throw std::logic_error("N-position " + to_string(p) + " has no P option");
}

std::optional<Move> Engine::engine_move(const Position& p, Convention c) const {
  if (p.terminal()) return std::nullopt;
  if (auto m = winning_move(p, c)) return m;
  return moves(p).front();
}

}  // namespace goishi
