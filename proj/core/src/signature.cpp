#include "gjp/signature.hpp"

#include <algorithm>
#include <charconv>

#include "gjp/error.hpp"

namespace gjp {

ValueDomain::ValueDomain(ValueKind kind, std::vector<Value> values) : kind_(kind), values_(std::move(values)) {
  if (values_.empty()) {
    throw ValidationError("value domain must not be empty");
  }
  for (const auto& v : values_) {
    if (v.kind() != kind_) {
      throw ValidationError("value domain mixes value kinds");
    }
  }
}

ValueDomain ValueDomain::integer_range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) {
    throw ValidationError("empty integer range " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  std::vector<Value> values;
  values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (auto v = lo; v <= hi; ++v) {
    values.push_back(Value::integer(v));
  }
  return ValueDomain(ValueKind::Integer, std::move(values));
}

ValueDomain ValueDomain::integers(std::vector<std::int64_t> raw) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Value> values;
  for (auto v : raw) {
    values.push_back(Value::integer(v));
  }
  return ValueDomain(ValueKind::Integer, std::move(values));
}

ValueDomain ValueDomain::booleans() {
  return ValueDomain(ValueKind::Boolean, {Value::boolean(false), Value::boolean(true)});
}

bool ValueDomain::contains(const Value& v) const {
  return std::find(values_.begin(), values_.end(), v) != values_.end();
}

VarId Signature::add_variable(std::string name, ValueDomain domain) {
  if (by_name_.count(name) != 0) {
    throw ValidationError("duplicate variable '" + name + "'");
  }
  const VarId id{static_cast<std::uint32_t>(variables_.size())};
  by_name_.emplace(name, id);
  variables_.push_back(Variable{std::move(name), std::move(domain)});
  return id;
}

AgentId Signature::add_agent(std::string name, ValueDomain domain) {
  const VarId var = add_variable(std::move(name), std::move(domain));
  agents_.push_back(var);
  return AgentId{static_cast<std::uint32_t>(agents_.size() - 1)};
}

SymbolId Signature::intern(std::string_view symbol) {
  if (auto it = symbol_ids_.find(std::string(symbol)); it != symbol_ids_.end()) {
    return it->second;
  }
  const SymbolId id{static_cast<std::uint32_t>(symbols_.size())};
  symbols_.emplace_back(symbol);
  symbol_ids_.emplace(std::string(symbol), id);
  return id;
}

std::optional<SymbolId> Signature::find_symbol(std::string_view symbol) const {
  if (auto it = symbol_ids_.find(std::string(symbol)); it != symbol_ids_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::vector<AgentId> Signature::agents() const {
  std::vector<AgentId> out;
  for (std::uint32_t i = 0; i < agents_.size(); ++i) {
    out.push_back(AgentId{i});
  }
  return out;
}

std::vector<VarId> Signature::variables() const {
  std::vector<VarId> out;
  for (std::uint32_t i = 0; i < variables_.size(); ++i) {
    out.push_back(VarId{i});
  }
  return out;
}

std::optional<VarId> Signature::find_variable(std::string_view name) const {
  if (auto it = by_name_.find(std::string(name)); it != by_name_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::optional<AgentId> Signature::find_agent(std::string_view name) const {
  const auto var = find_variable(name);
  return var ? agent_of(*var) : std::nullopt;
}

std::optional<AgentId> Signature::agent_of(VarId var) const {
  for (std::uint32_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i] == var) {
      return AgentId{i};
    }
  }
  return std::nullopt;
}

VarId Signature::variable_or_throw(std::string_view name) const {
  if (auto var = find_variable(name)) {
    return *var;
  }
  throw ValidationError("unknown variable '" + std::string(name) + "'");
}

AgentId Signature::agent_or_throw(std::string_view name) const {
  if (auto agent = find_agent(name)) {
    return *agent;
  }
  throw ValidationError("unknown agent '" + std::string(name) + "'");
}

std::optional<Value> Signature::parse_value(VarId var, std::string_view token) const {
  const auto& dom = domain(var);
  switch (dom.kind()) {
    case ValueKind::Integer: {
      std::int64_t v = 0;
      const auto* end = token.data() + token.size();
      auto [ptr, ec] = std::from_chars(token.data(), end, v);
      if (ec != std::errc{} || ptr != end) {
        return std::nullopt;
      }
      return Value::integer(v);
    }
    case ValueKind::Boolean:
      if (token == "true" || token == "t") {
        return Value::boolean(true);
      }
      if (token == "false" || token == "f") {
        return Value::boolean(false);
      }
      return std::nullopt;
    case ValueKind::Symbol: {
      const auto id = find_symbol(token);
      if (!id || !dom.contains(Value::symbol(*id))) {
        return std::nullopt;
      }
      return Value::symbol(*id);
    }
  }
  return std::nullopt;
}

std::string Signature::format(const Value& value) const {
  switch (value.kind()) {
    case ValueKind::Integer:
      return std::to_string(value.as_integer());
    case ValueKind::Boolean:
      return value.as_boolean() ? "true" : "false";
    case ValueKind::Symbol:
      return std::string(symbol_name(value.as_symbol()));
  }
  return "?";
}

Group::Group(std::initializer_list<AgentId> members) : Group(std::vector<AgentId>(members)) {}

Group::Group(std::vector<AgentId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Group::contains(AgentId agent) const {
  return std::binary_search(members_.begin(), members_.end(), agent);
}

}  // namespace gjp
