#pragma once

#include <optional>
#include <string_view>

namespace goishi {

/// Normal: whoever moves last wins. Misere: whoever moves last loses.
enum class Convention { Normal, Misere };

/// P: the previous player wins. N: the next player wins.
enum class Outcome { P, N };

constexpr std::string_view to_string(Convention c) {
  return c == Convention::Normal ? "normal" : "misere";
}

constexpr std::string_view to_string(Outcome o) { return o == Outcome::P ? "P" : "N"; }

/// Accepts "normal" and "misere" (also the accented spelling).
inline std::optional<Convention> parse_convention(std::string_view text) {
  if (text == "normal") return Convention::Normal;
  if (text == "misere" || text == "mis\xc3\xa8re") return Convention::Misere;
  return std::nullopt;
}

}  // namespace goishi
