#pragma once

#include <memory>
#include <string_view>
#include <variant>

#include "gjp/signature.hpp"
#include "gjp/state.hpp"
#include "gjp/ternary.hpp"
#include "gjp/value.hpp"

namespace gjp {

enum class Relation { Eq, Ne, Lt, Le, Gt, Ge };

/// Relation that holds exactly when `rel` fails on the same operands.
Relation complement(Relation rel);
std::string_view relation_symbol(Relation rel);
bool is_ordering(Relation rel);

enum class Modality { Sees, Knows, Believes };

/// Uniform (E), distributed (D) and common (C) group modalities.
enum class GroupMode { Uniform, Distributed, Common };

struct FormulaNode;

/// Immutable, shareable formula of the epistemic language.
class Formula {
 public:
  struct Atom;
  struct Not;
  struct And;
  struct SeesVar;
  struct Modal;
  struct GroupSeesVar;
  struct GroupModal;

  static Formula atom(Relation rel, VarId lhs, Value rhs);
  static Formula atom(Relation rel, VarId lhs, VarId rhs);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula sees(AgentId agent, VarId var);
  static Formula modal(Modality modality, AgentId agent, Formula operand);
  static Formula group_sees(GroupMode mode, Group group, VarId var);
  static Formula group_modal(Modality modality, GroupMode mode, Group group, Formula operand);

  const FormulaNode& node() const { return *node_; }

  friend bool operator==(const Formula& lhs, const Formula& rhs);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const FormulaNode> node_;
};

/// Right operand of an atom: a constant or another variable.
using Term = std::variant<Value, VarId>;

struct Formula::Atom {
  Relation relation;
  VarId lhs;
  Term rhs;
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Formula::Not {
  Formula operand;
  friend bool operator==(const Not&, const Not&) = default;
};

struct Formula::And {
  Formula lhs;
  Formula rhs;
  friend bool operator==(const And&, const And&) = default;
};

struct Formula::SeesVar {
  AgentId agent;
  VarId var;
  friend bool operator==(const SeesVar&, const SeesVar&) = default;
};

struct Formula::Modal {
  Modality modality;
  AgentId agent;
  Formula operand;
  friend bool operator==(const Modal&, const Modal&) = default;
};

struct Formula::GroupSeesVar {
  GroupMode mode;
  Group group;
  VarId var;
  friend bool operator==(const GroupSeesVar&, const GroupSeesVar&) = default;
};

struct Formula::GroupModal {
  Modality modality;
  GroupMode mode;
  Group group;
  Formula operand;
  friend bool operator==(const GroupModal&, const GroupModal&) = default;
};

struct FormulaNode
    : std::variant<Formula::Atom, Formula::Not, Formula::And, Formula::SeesVar, Formula::Modal,
                   Formula::GroupSeesVar, Formula::GroupModal> {
  using variant::variant;
};

/// Checks references, operand types and the rule that no belief operator
/// occurs beneath a seeing or knowledge operator. Throws ValidationError.
void validate(const Signature& signature, const Formula& formula);

/// Atom semantics on a single state: unknown when an operand is unassigned.
Ternary interpret_atom(const State& state, const Formula::Atom& atom);

/// Number of nodes; handy for generators and size guards.
std::size_t formula_size(const Formula& formula);

}  // namespace gjp
