#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gjp/value.hpp"

namespace gjp {

/// Finite, enumerated value domain of one variable. Integer ranges are
/// enumerated too; every domain is non-empty.
class ValueDomain {
 public:
  ValueDomain(ValueKind kind, std::vector<Value> values);

  static ValueDomain integer_range(std::int64_t lo, std::int64_t hi);
  static ValueDomain integers(std::vector<std::int64_t> values);
  static ValueDomain booleans();

  ValueKind kind() const { return kind_; }
  const std::vector<Value>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool contains(const Value& v) const;

 private:
  ValueKind kind_;
  std::vector<Value> values_;
};

/// Agents, variables and their domains. Agents are variables too, so an
/// agent's identifier may appear in states and atoms.
class Signature {
 public:
  struct Variable {
    std::string name;
    ValueDomain domain;
  };

  VarId add_variable(std::string name, ValueDomain domain);
  AgentId add_agent(std::string name, ValueDomain domain);

  SymbolId intern(std::string_view symbol);
  std::optional<SymbolId> find_symbol(std::string_view symbol) const;
  std::string_view symbol_name(SymbolId id) const { return symbols_.at(id.index); }

  std::size_t variable_count() const { return variables_.size(); }
  std::size_t agent_count() const { return agents_.size(); }

  const Variable& variable(VarId id) const { return variables_.at(id.index); }
  const std::string& variable_name(VarId id) const { return variables_.at(id.index).name; }
  const ValueDomain& domain(VarId id) const { return variables_.at(id.index).domain; }

  VarId agent_variable(AgentId agent) const { return agents_.at(agent.index); }
  const std::string& agent_name(AgentId agent) const { return variable_name(agent_variable(agent)); }
  std::vector<AgentId> agents() const;
  std::vector<VarId> variables() const;

  std::optional<VarId> find_variable(std::string_view name) const;
  std::optional<AgentId> find_agent(std::string_view name) const;
  std::optional<AgentId> agent_of(VarId var) const;

  VarId variable_or_throw(std::string_view name) const;
  AgentId agent_or_throw(std::string_view name) const;

  /// Interprets `token` as a constant of `var`'s type; nullopt if it is not one.
  std::optional<Value> parse_value(VarId var, std::string_view token) const;
  std::string format(const Value& value) const;

 private:
  std::vector<Variable> variables_;
  std::vector<VarId> agents_;
  std::unordered_map<std::string, VarId> by_name_;
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymbolId> symbol_ids_;
};

/// Non-empty, sorted, duplicate-free set of agents.
class Group {
 public:
  Group() = default;
  Group(std::initializer_list<AgentId> members);
  explicit Group(std::vector<AgentId> members);

  const std::vector<AgentId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(AgentId agent) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const Group&, const Group&) = default;

 private:
  std::vector<AgentId> members_;
};

}  // namespace gjp
