#include "gjp/formula.hpp"

#include <type_traits>

#include "gjp/error.hpp"
#include "overloaded.hpp"

namespace gjp {

namespace {

using detail::Overloaded;

bool comparable(const ValueDomain& lhs, ValueKind rhs, Relation rel) {
  if (lhs.kind() != rhs) {
    return false;
  }
  return !is_ordering(rel) || lhs.kind() == ValueKind::Integer;
}

void check_agent(const Signature& sig, AgentId agent) {
  if (agent.index >= sig.agent_count()) {
    throw ValidationError("unknown agent index " + std::to_string(agent.index));
  }
}

void check_var(const Signature& sig, VarId var) {
  if (var.index >= sig.variable_count()) {
    throw ValidationError("unknown variable index " + std::to_string(var.index));
  }
}

void check_group(const Signature& sig, const Group& group) {
  if (group.empty()) {
    throw ValidationError("empty agent group");
  }
  for (auto agent : group) {
    check_agent(sig, agent);
  }
}

bool contains_belief(const Formula& f) {
  return std::visit(Overloaded{
                        [](const Formula::Atom&) { return false; },
                        [](const Formula::SeesVar&) { return false; },
                        [](const Formula::GroupSeesVar&) { return false; },
                        [](const Formula::Not& n) { return contains_belief(n.operand); },
                        [](const Formula::And& a) { return contains_belief(a.lhs) || contains_belief(a.rhs); },
                        [](const Formula::Modal& m) {
                          return m.modality == Modality::Believes || contains_belief(m.operand);
                        },
                        [](const Formula::GroupModal& m) {
                          return m.modality == Modality::Believes || contains_belief(m.operand);
                        },
                    },
                    static_cast<const FormulaNode::variant&>(f.node()));
}

void check(const Signature& sig, const Formula& f) {
  std::visit(Overloaded{
                 [&](const Formula::Atom& a) {
                   check_var(sig, a.lhs);
                   const auto& dom = sig.domain(a.lhs);
                   if (const auto* v = std::get_if<Value>(&a.rhs)) {
                     if (!comparable(dom, v->kind(), a.relation)) {
                       throw ValidationError("ill-typed atom on '" + sig.variable_name(a.lhs) + "'");
                     }
                     if (v->kind() == ValueKind::Symbol && !dom.contains(*v)) {
                       throw ValidationError("constant outside the domain of '" + sig.variable_name(a.lhs) + "'");
                     }
                   } else {
                     const auto rhs = std::get<VarId>(a.rhs);
                     check_var(sig, rhs);
                     if (!comparable(dom, sig.domain(rhs).kind(), a.relation)) {
                       throw ValidationError("ill-typed atom comparing '" + sig.variable_name(a.lhs) +
                                             "' and '" + sig.variable_name(rhs) + "'");
                     }
                   }
                 },
                 [&](const Formula::Not& n) { check(sig, n.operand); },
                 [&](const Formula::And& a) {
                   check(sig, a.lhs);
                   check(sig, a.rhs);
                 },
                 [&](const Formula::SeesVar& s) {
                   check_agent(sig, s.agent);
                   check_var(sig, s.var);
                 },
                 [&](const Formula::GroupSeesVar& s) {
                   check_group(sig, s.group);
                   check_var(sig, s.var);
                 },
                 [&](const Formula::Modal& m) {
                   check_agent(sig, m.agent);
                   if (m.modality != Modality::Believes && contains_belief(m.operand)) {
                     throw ValidationError("belief operator beneath a seeing or knowledge operator");
                   }
                   check(sig, m.operand);
                 },
                 [&](const Formula::GroupModal& m) {
                   check_group(sig, m.group);
                   if (m.modality != Modality::Believes && contains_belief(m.operand)) {
                     throw ValidationError("belief operator beneath a seeing or knowledge operator");
                   }
                   check(sig, m.operand);
                 },
             },
             static_cast<const FormulaNode::variant&>(f.node()));
}

bool holds(Relation rel, const Value& lhs, const Value& rhs) {
  const auto l = lhs.raw();
  const auto r = rhs.raw();
  switch (rel) {
    case Relation::Eq:
      return lhs == rhs;
    case Relation::Ne:
      return !(lhs == rhs);
    case Relation::Lt:
      return l < r;
    case Relation::Le:
      return l <= r;
    case Relation::Gt:
      return l > r;
    case Relation::Ge:
      return l >= r;
  }
  return false;
}

}  // namespace

Relation complement(Relation rel) {
  switch (rel) {
    case Relation::Eq:
      return Relation::Ne;
    case Relation::Ne:
      return Relation::Eq;
    case Relation::Lt:
      return Relation::Ge;
    case Relation::Le:
      return Relation::Gt;
    case Relation::Gt:
      return Relation::Le;
    case Relation::Ge:
      return Relation::Lt;
  }
  return rel;
}

std::string_view relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::Eq:
      return "=";
    case Relation::Ne:
      return "!=";
    case Relation::Lt:
      return "<";
    case Relation::Le:
      return "<=";
    case Relation::Gt:
      return ">";
    case Relation::Ge:
      return ">=";
  }
  return "?";
}

bool is_ordering(Relation rel) { return rel != Relation::Eq && rel != Relation::Ne; }

Formula Formula::atom(Relation rel, VarId lhs, Value rhs) {
  return Formula(std::make_shared<const FormulaNode>(Atom{rel, lhs, rhs}));
}

Formula Formula::atom(Relation rel, VarId lhs, VarId rhs) {
  return Formula(std::make_shared<const FormulaNode>(Atom{rel, lhs, rhs}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const FormulaNode>(Not{std::move(operand)}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const FormulaNode>(And{std::move(lhs), std::move(rhs)}));
}

Formula Formula::sees(AgentId agent, VarId var) {
  return Formula(std::make_shared<const FormulaNode>(SeesVar{agent, var}));
}

Formula Formula::modal(Modality modality, AgentId agent, Formula operand) {
  return Formula(std::make_shared<const FormulaNode>(Modal{modality, agent, std::move(operand)}));
}

Formula Formula::group_sees(GroupMode mode, Group group, VarId var) {
  return Formula(std::make_shared<const FormulaNode>(GroupSeesVar{mode, std::move(group), var}));
}

Formula Formula::group_modal(Modality modality, GroupMode mode, Group group, Formula operand) {
  return Formula(
      std::make_shared<const FormulaNode>(GroupModal{modality, mode, std::move(group), std::move(operand)}));
}

bool operator==(const Formula& lhs, const Formula& rhs) {
  if (lhs.node_ == rhs.node_) {
    return true;
  }
  return static_cast<const FormulaNode::variant&>(*lhs.node_) ==
         static_cast<const FormulaNode::variant&>(*rhs.node_);
}

void validate(const Signature& signature, const Formula& formula) { check(signature, formula); }

Ternary interpret_atom(const State& state, const Formula::Atom& atom) {
  const auto& lhs = state.get(atom.lhs);
  if (!lhs) {
    return Ternary::Unknown;
  }
  if (const auto* constant = std::get_if<Value>(&atom.rhs)) {
    return from_bool(holds(atom.relation, *lhs, *constant));
  }
  const auto& rhs = state.get(std::get<VarId>(atom.rhs));
  if (!rhs) {
    return Ternary::Unknown;
  }
  return from_bool(holds(atom.relation, *lhs, *rhs));
}

std::size_t formula_size(const Formula& formula) {
  return std::visit(Overloaded{
                        [](const Formula::Atom&) -> std::size_t { return 1; },
                        [](const Formula::SeesVar&) -> std::size_t { return 1; },
                        [](const Formula::GroupSeesVar&) -> std::size_t { return 1; },
                        [](const Formula::Not& n) { return 1 + formula_size(n.operand); },
                        [](const Formula::And& a) { return 1 + formula_size(a.lhs) + formula_size(a.rhs); },
                        [](const Formula::Modal& m) { return 1 + formula_size(m.operand); },
                        [](const Formula::GroupModal& m) { return 1 + formula_size(m.operand); },
                    },
                    static_cast<const FormulaNode::variant&>(formula.node()));
}

}  // namespace gjp
