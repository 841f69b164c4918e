#pragma once

// Self-checks that pit the table-driven code against the published tables and
// the brute-force oracle. Shared by the `verify` command and the tests.

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goishi/core.hpp"

namespace goishi::verify {

/// Largest coordinate the goishi and misere-nim oracle sweeps accept.
inline constexpr std::size_t kGameOracleCap = 40;
/// Largest coordinate the forbidden-move Grundy sweeps accept.
inline constexpr std::size_t kGrundyOracleCap = 60;

struct Mismatch {
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string check;
  std::string range;
  std::size_t cases = 0;
  std::vector<Mismatch> mismatches;
  std::chrono::duration<double> elapsed{};

  bool passed() const noexcept { return mismatches.empty(); }
};

enum class Check { Tables, Theorems, ClosedForm, Symmetry, OracleGrundy };

std::string_view to_string(Check check);
std::optional<Check> parse_check(std::string_view name);
std::span<const Check> all_checks();

/// Published 12x12 tables, the XOR law for G0 up to `max` and the G0/G1 swap.
VerifyReport tables(std::size_t max);
/// Table-based outcomes and winning moves against the oracle on every
/// (x, y, z) with coordinates up to min(max, kGameOracleCap), both conventions.
VerifyReport theorems(std::size_t max);
/// in_A / in_B against the tables for x, y <= max and k in 0..3.
VerifyReport closed_forms(std::size_t max);
/// 2x2 block symmetry of GM1STAR for block indices up to max.
VerifyReport symmetry(std::size_t max);
/// Forbidden-move nim Grundy values against G0, GM1 and GM1STAR, plus misere
/// two-pile nim against the zeros of GM1.
VerifyReport oracle_grundy(std::size_t max);

/// Dispatches one check. Table-building checks are limited to tables of at
/// most `capacity` cells per side: symmetry clamps its block bound to fit.
/// Throws CapacityError when max + 1 exceeds capacity.
VerifyReport run(Check check, std::size_t max, std::size_t capacity = kDefaultMaxTableSize);
/// Runs each check on its own thread; reports come back in request order.
std::vector<VerifyReport> run_all(std::span<const Check> checks, std::size_t max,
                                  std::size_t capacity = kDefaultMaxTableSize);

}  // namespace goishi::verify
