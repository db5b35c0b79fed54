#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gjp/domains.hpp"
#include "gjp/formula.hpp"
#include "gjp/observation.hpp"
#include "gjp/parser.hpp"
#include "gjp/perspectives.hpp"
#include "gjp/planner.hpp"
#include "gjp/state.hpp"

namespace gjp::test {

std::string data_path(const std::string& relative);

/// Visibility table: for each (agent, variable) the agent always, never, or
/// conditionally sees it. A condition names an earlier guard variable that the
/// agent must itself see, holding a given value. Ordering the guards makes
/// every table satisfy the three observation axioms.
class TableModel final : public ObservationModel {
 public:
  enum class Mode { Always, Never, Guarded };
  struct Rule {
    Mode mode = Mode::Always;
    VarId guard{};
    Value value{};
  };

  TableModel(std::size_t agents, std::size_t variables);

  void set(AgentId agent, VarId var, Rule rule) { rules_[agent.index][var.index] = rule; }
  const Rule& rule(AgentId agent, VarId var) const { return rules_[agent.index][var.index]; }

  std::string_view name() const override { return "table"; }
  bool sees(AgentId agent, const State& state, VarId var) const override;

 private:
  std::vector<std::vector<Rule>> rules_;
};

/// A random signature, visibility table and helpers for generating inputs.
struct RandomWorld {
  std::shared_ptr<Signature> signature;
  std::unique_ptr<TableModel> model;
  std::vector<VarId> plain;  // non-agent variables
  Group everyone;

  State random_state(std::mt19937_64& rng) const;
  StateSequence random_sequence(std::mt19937_64& rng, std::size_t length) const;
  /// With `contingent`, the atom is true for some value of its variable and
  /// false for another (no tautologies or contradictions).
  Formula random_atom(std::mt19937_64& rng, bool contingent = false) const;
  /// Random well-formed formula over every operator; belief operators are
  /// only placed where the grammar allows them.
  Formula random_formula(std::mt19937_64& rng, int depth, bool allow_belief = true) const;
  Group random_group(std::mt19937_64& rng) const;
  /// An atom, or one seeing/knowledge/belief layer (individual or group) over
  /// a contingent atom or a variable, possibly negated.
  Formula random_literal(std::mt19937_64& rng) const;
};

struct WorldShape {
  std::size_t agents = 2;
  std::size_t min_plain = 1;
  std::size_t max_plain = 2;
  std::size_t max_domain = 3;
  /// Agent variables take a single value, keeping completion spaces small.
  bool single_valued_agents = false;
};

RandomWorld random_world(std::mt19937_64& rng, const WorldShape& shape);

/// Literal reading of the justified perspective definition, kept separate
/// from the library: explicit timestamp sets and prefix copies.
StateSequence reference_justified(const ObservationModel& model, AgentId agent, const StateSequence& seq);

/// The shipped Number domain, its model and the Plan 1 trace.
struct NumberWorld {
  PlanningDomain domain;
  std::unique_ptr<ObservationModel> model;
  AgentId a{};
  AgentId b{};
  VarId n{};
  Group group;

  const Signature& sig() const { return *domain.signature; }
  StateSequence plan1() const;
  State initial(std::int64_t value = 2) const;
  Formula formula(const std::string& text) const { return parse_formula(sig(), text); }
};

NumberWorld number_world();

struct LoadedDomain {
  PlanningDomain domain;
  std::unique_ptr<ObservationModel> model;
};

LoadedDomain load_domain(const std::string& relative_path);

/// Projection of every state of `seq` onto `var`, "τ" where unassigned.
std::vector<std::string> project(const Signature& sig, const StateSequence& seq, VarId var);

}  // namespace gjp::test
