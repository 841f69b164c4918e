#pragma once

// Seeded mex recurrences over two coordinates.
//
// Every table here is defined by the same rule: a cell (x, y) holds the mex of
// everything earlier in its row and column, except for a handful of seeded
// cells whose values are fixed up front. With seed (0,0) -> 0 this is plain
// two-pile nim; the other seeds produce the misere-flavoured variants.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace goishi {

inline constexpr std::size_t kDefaultMaxTableSize = 512;

/// Raised whenever a request needs a table larger than the configured bound.
class CapacityError : public std::length_error {
 public:
  CapacityError(const std::string& what, std::size_t limit)
      : std::length_error(what), limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

enum class SeedKind { G0, G1, GM1, GM1Star };

std::string_view to_string(SeedKind kind);
/// Accepts "G0", "G1", "GM1", "GM1STAR" (case-insensitive).
std::optional<SeedKind> parse_seed_kind(std::string_view text);

struct SeedCell {
  std::size_t x;
  std::size_t y;
  int value;
};

class SeedSpec {
 public:
  static const SeedSpec& of(SeedKind kind);

  SeedKind kind() const noexcept { return kind_; }
  std::span<const SeedCell> cells() const noexcept { return cells_; }
  std::optional<int> seeded(std::size_t x, std::size_t y) const noexcept;

 private:
  SeedSpec(SeedKind kind, std::vector<SeedCell> cells)
      : kind_(kind), cells_(std::move(cells)) {}

  SeedKind kind_;
  std::vector<SeedCell> cells_;
};

/// Minimum excluded nonnegative integer. Negative entries are ignored and
/// duplicates are allowed.
int mex(std::span<const int> values);

class ValueTable {
 public:
  /// Builds the n x n table for `spec`. Throws CapacityError when n exceeds
  /// `max_size` and std::invalid_argument when n is zero.
  static ValueTable build(const SeedSpec& spec, std::size_t n,
                          std::size_t max_size = kDefaultMaxTableSize);
  static ValueTable build(SeedKind kind, std::size_t n,
                          std::size_t max_size = kDefaultMaxTableSize) {
    return build(SeedSpec::of(kind), n, max_size);
  }

  const SeedSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return n_; }

  /// Throws std::out_of_range outside the built bound.
  int value(std::size_t x, std::size_t y) const;
  int operator()(std::size_t x, std::size_t y) const noexcept {
    return cells_[x * n_ + y];
  }
  std::span<const std::int32_t> row(std::size_t x) const;

  friend bool operator==(const ValueTable& a, const ValueTable& b) {
    return a.spec_.kind() == b.spec_.kind() && a.n_ == b.n_ &&
           a.cells_ == b.cells_;
  }

 private:
  ValueTable(SeedSpec spec, std::size_t n)
      : spec_(std::move(spec)), n_(n), cells_(n * n, 0) {}

  SeedSpec spec_;
  std::size_t n_;
  std::vector<std::int32_t> cells_;
};

}  // namespace goishi
