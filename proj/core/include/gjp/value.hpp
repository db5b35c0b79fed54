#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace gjp {

struct VarId {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(VarId, VarId) = default;
};

/// Index into the signature's agent list. Every agent is also a variable.
struct AgentId {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(AgentId, AgentId) = default;
};

struct SymbolId {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(SymbolId, SymbolId) = default;
};

enum class ValueKind : std::uint8_t { Integer, Boolean, Symbol };

/// A typed constant. Symbols are interned in the owning Signature.
class Value {
 public:
  constexpr Value() = default;

  static constexpr Value integer(std::int64_t v) { return Value(ValueKind::Integer, v); }
  static constexpr Value boolean(bool v) { return Value(ValueKind::Boolean, v ? 1 : 0); }
  static constexpr Value symbol(SymbolId id) { return Value(ValueKind::Symbol, id.index); }

  constexpr ValueKind kind() const { return kind_; }
  constexpr std::int64_t as_integer() const { return raw_; }
  constexpr bool as_boolean() const { return raw_ != 0; }
  constexpr SymbolId as_symbol() const { return SymbolId{static_cast<std::uint32_t>(raw_)}; }
  constexpr std::int64_t raw() const { return raw_; }

  friend constexpr bool operator==(const Value&, const Value&) = default;

 private:
  constexpr Value(ValueKind kind, std::int64_t raw) : raw_(raw), kind_(kind) {}

  std::int64_t raw_ = 0;
  ValueKind kind_ = ValueKind::Integer;
};

inline std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace gjp

template <>
struct std::hash<gjp::Value> {
  std::size_t operator()(const gjp::Value& v) const noexcept {
    return gjp::hash_combine(std::hash<std::int64_t>{}(v.raw()), static_cast<std::size_t>(v.kind()));
  }
};
