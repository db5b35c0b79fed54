#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gjp/formula.hpp"
#include "gjp/observation.hpp"
#include "gjp/semantics.hpp"
#include "gjp/signature.hpp"
#include "gjp/state.hpp"

namespace gjp {

struct Effect {
  enum class Kind { Assign, Copy, Increment };

  static Effect assign(VarId target, Value value) { return {Kind::Assign, target, value, {}, 0}; }
  static Effect copy(VarId target, VarId source) { return {Kind::Copy, target, {}, source, 0}; }
  static Effect increment(VarId target, std::int64_t delta) {
    return {Kind::Increment, target, {}, {}, delta};
  }

  Kind kind;
  VarId target;
  Value value;
  VarId source;
  std::int64_t delta;
};

struct Action {
  std::string name;
  std::optional<Formula> precondition;
  std::vector<Effect> effects;
};

struct PlanningDomain {
  std::string name;
  std::shared_ptr<const Signature> signature;
  std::string observation;
  ModelParams model_params;
  std::vector<Action> actions;

  const Action* find_action(std::string_view action_name) const;
};

/// A formula pinned to a required ternary value.
struct Goal {
  Formula formula;
  Ternary target = Ternary::True;
};

struct Problem {
  std::string name;
  std::string domain_name;
  State initial;
  std::vector<Goal> goals;
  std::optional<std::size_t> max_depth;
  std::optional<std::size_t> node_limit;
};

struct SearchNode {
  StateSequence sequence;
  std::vector<std::size_t> plan;  // action indices, one per transition
};

struct SearchStats {
  std::size_t expanded = 0;
  std::size_t generated = 0;
  EvalStats eval;
  std::chrono::nanoseconds total_time{0};
};

enum class SearchStatus { Solved, Unsolvable, LimitReached };

struct PlanResult {
  SearchStatus status = SearchStatus::Unsolvable;
  std::vector<std::string> plan;
  SearchStats stats;
  /// Sequence of global states visited by the plan (initial state included).
  std::optional<StateSequence> trace;
};

struct SearchOptions {
  std::size_t max_depth = 12;
  /// Stop with LimitReached once this many nodes were generated; 0 = unbounded.
  std::size_t node_limit = 0;
};

/// Successor state of `state` under `action`'s effects, or nullopt when an
/// effect leaves its variable's domain.
std::optional<State> apply_effects(const Signature& signature, const Action& action, const State& state);

/// Extends `node` by `action` if its precondition evaluates strictly to true.
std::optional<SearchNode> apply(Evaluator& evaluator, const Signature& signature, const Action& action,
                                std::size_t action_index, const SearchNode& node);

bool goals_hold(Evaluator& evaluator, const std::vector<Goal>& goals, const StateSequence& seq);

/// Breadth-first search over full state sequences with duplicate removal.
/// The goal test happens when a node is generated, so the initial node
/// satisfying the goals yields an empty plan with zero expansions.
PlanResult brfs(const PlanningDomain& domain, const Problem& problem, const ObservationModel& model,
                const SearchOptions& options);

/// Replays named actions from the problem's initial state. Throws
/// ValidationError on an unknown or inapplicable action.
StateSequence replay(const PlanningDomain& domain, const State& initial, const ObservationModel& model,
                     const std::vector<std::string>& actions);

}  // namespace gjp
