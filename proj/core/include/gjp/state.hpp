#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gjp/signature.hpp"
#include "gjp/value.hpp"

namespace gjp {

/// Partial assignment of variables to values. An unassigned slot is the
/// "unseen" marker; a global state assigns every variable.
class State {
 public:
  State() = default;
  explicit State(std::size_t variable_count) : slots_(variable_count) {}

  std::size_t width() const { return slots_.size(); }

  bool has(VarId var) const { return var.index < slots_.size() && slots_[var.index].has_value(); }
  const std::optional<Value>& get(VarId var) const { return slots_.at(var.index); }
  void set(VarId var, Value value) { slots_.at(var.index) = value; }
  void erase(VarId var) { slots_.at(var.index).reset(); }

  std::size_t assigned_count() const;
  bool is_total() const;

  /// True iff every assignment of this state also appears in `other`.
  bool subset_of(const State& other) const;

  /// Keeps only the assignments present in both states with equal values.
  State intersect(const State& other) const;
  /// Union of two states that agree on their common variables.
  State unite(const State& other) const;
  /// This state with every assignment of `overlay` written over it.
  State overridden_by(const State& overlay) const;

  std::size_t hash() const;

  friend bool operator==(const State&, const State&) = default;

 private:
  std::vector<std::optional<Value>> slots_;
};

/// Ordered, non-empty list of states indexed 0..n.
class StateSequence {
 public:
  explicit StateSequence(std::vector<State> states);
  explicit StateSequence(State initial);

  std::size_t size() const { return states_.size(); }
  std::size_t last_index() const { return states_.size() - 1; }
  const State& operator[](std::size_t t) const { return states_[t]; }
  const State& at(std::size_t t) const;
  const State& back() const { return states_.back(); }
  const std::vector<State>& states() const { return states_; }

  auto begin() const { return states_.begin(); }
  auto end() const { return states_.end(); }

  /// Prefix [s_0, ..., s_t]. Throws std::out_of_range when t > n.
  StateSequence slice(std::size_t t) const;
  StateSequence extended(State next) const;

  std::size_t hash() const;

  friend bool operator==(const StateSequence&, const StateSequence&) = default;

 private:
  std::vector<State> states_;
};

std::string format_state(const Signature& signature, const State& state);
std::string format_sequence(const Signature& signature, const StateSequence& seq);

}  // namespace gjp

template <>
struct std::hash<gjp::State> {
  std::size_t operator()(const gjp::State& s) const noexcept { return s.hash(); }
};

template <>
struct std::hash<gjp::StateSequence> {
  std::size_t operator()(const gjp::StateSequence& s) const noexcept { return s.hash(); }
};
