#include "gjp/state.hpp"

#include <stdexcept>

#include "gjp/error.hpp"

namespace gjp {

std::size_t State::assigned_count() const {
  std::size_t n = 0;
  for (const auto& slot : slots_) {
    n += slot.has_value() ? 1 : 0;
  }
  return n;
}

bool State::is_total() const { return assigned_count() == slots_.size(); }

bool State::subset_of(const State& other) const {
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (!slots_[i]) {
      continue;
    }
    if (i >= other.slots_.size() || other.slots_[i] != slots_[i]) {
      return false;
    }
  }
  return true;
}

State State::intersect(const State& other) const {
  State out(slots_.size());
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i] && i < other.slots_.size() && other.slots_[i] == slots_[i]) {
      out.slots_[i] = slots_[i];
    }
  }
  return out;
}

State State::unite(const State& other) const {
  State out = *this;
  for (std::size_t i = 0; i < other.slots_.size() && i < out.slots_.size(); ++i) {
    if (!other.slots_[i]) {
      continue;
    }
    if (out.slots_[i] && out.slots_[i] != other.slots_[i]) {
      throw ValidationError("cannot unite states that disagree on a variable");
    }
    out.slots_[i] = other.slots_[i];
  }
  return out;
}

State State::overridden_by(const State& overlay) const {
  State out = *this;
  for (std::size_t i = 0; i < overlay.slots_.size() && i < out.slots_.size(); ++i) {
    if (overlay.slots_[i]) {
      out.slots_[i] = overlay.slots_[i];
    }
  }
  return out;
}

std::size_t State::hash() const {
  std::size_t seed = slots_.size();
  for (const auto& slot : slots_) {
    seed = hash_combine(seed, slot ? std::hash<Value>{}(*slot) : 0x51ed27u);
  }
  return seed;
}

StateSequence::StateSequence(std::vector<State> states) : states_(std::move(states)) {
  if (states_.empty()) {
    throw ValidationError("state sequence must not be empty");
  }
}

StateSequence::StateSequence(State initial) { states_.push_back(std::move(initial)); }

const State& StateSequence::at(std::size_t t) const {
  if (t >= states_.size()) {
    throw std::out_of_range("timestamp " + std::to_string(t) + " outside sequence of length " +
                            std::to_string(states_.size()));
  }
  return states_[t];
}

StateSequence StateSequence::slice(std::size_t t) const {
  if (t >= states_.size()) {
    throw std::out_of_range("slice end " + std::to_string(t) + " outside sequence of length " +
                            std::to_string(states_.size()));
  }
  return StateSequence(std::vector<State>(states_.begin(), states_.begin() + static_cast<std::ptrdiff_t>(t) + 1));
}

StateSequence StateSequence::extended(State next) const {
  auto states = states_;
  states.push_back(std::move(next));
  return StateSequence(std::move(states));
}

std::size_t StateSequence::hash() const {
  std::size_t seed = states_.size();
  for (const auto& s : states_) {
    seed = hash_combine(seed, s.hash());
  }
  return seed;
}

std::string format_state(const Signature& signature, const State& state) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t i = 0; i < state.width(); ++i) {
    const VarId var{i};
    if (!state.has(var)) {
      continue;
    }
    if (!first) {
      out += ", ";
    }
    first = false;
    out += signature.variable_name(var);
    out += '=';
    out += signature.format(*state.get(var));
  }
  out += '}';
  return out;
}

std::string format_sequence(const Signature& signature, const StateSequence& seq) {
  std::string out = "[";
  for (std::size_t t = 0; t < seq.size(); ++t) {
    if (t != 0) {
      out += ", ";
    }
    out += format_state(signature, seq[t]);
  }
  out += ']';
  return out;
}

}  // namespace gjp
