#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string_view>

namespace gjp {

/// Three-valued truth: 0 (false), 1/2 (unknown), 1 (true).
///
/// The underlying encoding is the value doubled so that the lattice order is
/// the integer order and negation is `2 - x`.
enum class Ternary : std::uint8_t { False = 0, Unknown = 1, True = 2 };

constexpr Ternary operator!(Ternary value) {
  return static_cast<Ternary>(2 - static_cast<std::uint8_t>(value));
}

constexpr Ternary ternary_and(Ternary lhs, Ternary rhs) { return std::min(lhs, rhs); }
constexpr Ternary ternary_or(Ternary lhs, Ternary rhs) { return std::max(lhs, rhs); }

constexpr Ternary from_bool(bool value) { return value ? Ternary::True : Ternary::False; }

constexpr std::string_view to_string(Ternary value) {
  switch (value) {
    case Ternary::False:
      return "0";
    case Ternary::Unknown:
      return "1/2";
    case Ternary::True:
      return "1";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, Ternary value) { return os << to_string(value); }

}  // namespace gjp
