#include "goishi/core.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace goishi {

std::string_view to_string(SeedKind kind) {
  switch (kind) {
    case SeedKind::G0:
      return "G0";
    case SeedKind::G1:
      return "G1";
    case SeedKind::GM1:
      return "GM1";
    case SeedKind::GM1Star:
      return "GM1STAR";
  }
  return "?";
}

std::optional<SeedKind> parse_seed_kind(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (auto kind : {SeedKind::G0, SeedKind::G1, SeedKind::GM1, SeedKind::GM1Star}) {
    if (upper == to_string(kind)) return kind;
  }
  return std::nullopt;
}

const SeedSpec& SeedSpec::of(SeedKind kind) {
  static const SeedSpec g0(SeedKind::G0, {{0, 0, 0}});
  static const SeedSpec g1(SeedKind::G1, {{0, 0, 1}});
  static const SeedSpec gm1(SeedKind::GM1, {{0, 0, -1}});
  static const SeedSpec gm1star(SeedKind::GM1Star, {{0, 0, 0}, {0, 1, -1}, {1, 0, -1}});
  switch (kind) {
    case SeedKind::G0:
      return g0;
    case SeedKind::G1:
      return g1;
    case SeedKind::GM1:
      return gm1;
    case SeedKind::GM1Star:
      return gm1star;
  }
  throw std::invalid_argument("unknown seed kind");
}

std::optional<int> SeedSpec::seeded(std::size_t x, std::size_t y) const noexcept {
  for (const auto& cell : cells_) {
    if (cell.x == x && cell.y == y) return cell.value;
  }
  return std::nullopt;
}

int mex(std::span<const int> values) {
  // The answer is at most values.size(), so anything larger can be dropped.
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v >= 0 && static_cast<std::size_t>(v) < seen.size()) seen[v] = true;
  }
  int result = 0;
  while (seen[result]) ++result;
  return result;
}

ValueTable ValueTable::build(const SeedSpec& spec, std::size_t n,
                             std::size_t max_size) {
  if (n == 0) throw std::invalid_argument("table size must be at least 1");
  if (n > max_size) {
    throw CapacityError("table size " + std::to_string(n) +
                            " exceeds the maximum of " + std::to_string(max_size),
                        max_size);
  }

  ValueTable table(spec, n);
  auto& cells = table.cells_;
  std::vector<char> seen;

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (auto fixed = spec.seeded(x, y)) {
        cells[x * n + y] = *fixed;
        continue;
      }
      // x + y predecessors, so the mex is at most x + y.
      const std::size_t bound = x + y + 1;
      seen.assign(bound, 0);
      for (std::size_t xp = 0; xp < x; ++xp) {
        const int v = cells[xp * n + y];
        if (v >= 0 && static_cast<std::size_t>(v) < bound) seen[v] = 1;
      }
      for (std::size_t yp = 0; yp < y; ++yp) {
        const int v = cells[x * n + yp];
        if (v >= 0 && static_cast<std::size_t>(v) < bound) seen[v] = 1;
      }
      std::size_t m = 0;
      while (seen[m]) ++m;
      cells[x * n + y] = static_cast<std::int32_t>(m);
    }
  }

  assert(std::all_of(cells.begin(), cells.end(), [](int v) { return v >= -1; }));
  return table;
}

int ValueTable::value(std::size_t x, std::size_t y) const {
  if (x >= n_ || y >= n_) {
    throw std::out_of_range("cell (" + std::to_string(x) + "," + std::to_string(y) +
                            ") is outside the " + std::to_string(n_) + "x" +
                            std::to_string(n_) + " table");
  }
  return cells_[x * n_ + y];
}

std::span<const std::int32_t> ValueTable::row(std::size_t x) const {
  if (x >= n_) throw std::out_of_range("row index outside table");
  return std::span<const std::int32_t>(cells_).subspan(x * n_, n_);
}

}  // namespace goishi
