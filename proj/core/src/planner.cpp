#include "gjp/planner.hpp"

#include <deque>
#include <unordered_set>

#include "gjp/error.hpp"

namespace gjp {

const Action* PlanningDomain::find_action(std::string_view action_name) const {
  for (const auto& action : actions) {
    if (action.name == action_name) {
      return &action;
    }
  }
  return nullptr;
}

std::optional<State> apply_effects(const Signature& signature, const Action& action, const State& state) {
  State next = state;
  // Effects read the pre-state, so simultaneous swaps behave as expected.
  for (const auto& effect : action.effects) {
    std::optional<Value> value;
    switch (effect.kind) {
      case Effect::Kind::Assign:
        value = effect.value;
        break;
      case Effect::Kind::Copy:
        value = state.get(effect.source);
        break;
      case Effect::Kind::Increment: {
        const auto& current = state.get(effect.target);
        if (current && current->kind() == ValueKind::Integer) {
          value = Value::integer(current->as_integer() + effect.delta);
        }
        break;
      }
    }
    if (!value || !signature.domain(effect.target).contains(*value)) {
      return std::nullopt;
    }
    next.set(effect.target, *value);
  }
  return next;
}

std::optional<SearchNode> apply(Evaluator& evaluator, const Signature& signature, const Action& action,
                                std::size_t action_index, const SearchNode& node) {
  if (action.precondition && evaluator.eval(node.sequence, *action.precondition) != Ternary::True) {
    return std::nullopt;
  }
  auto next = apply_effects(signature, action, node.sequence.back());
  if (!next) {
    return std::nullopt;
  }
  SearchNode child{node.sequence.extended(std::move(*next)), node.plan};
  child.plan.push_back(action_index);
  return child;
}

bool goals_hold(Evaluator& evaluator, const std::vector<Goal>& goals, const StateSequence& seq) {
  for (const auto& goal : goals) {
    if (evaluator.eval(seq, goal.formula) != goal.target) {
      return false;
    }
  }
  return true;
}

namespace {

PlanResult finish(PlanResult result, const PlanningDomain& domain, const SearchNode& node) {
  result.status = SearchStatus::Solved;
  for (auto index : node.plan) {
    result.plan.push_back(domain.actions[index].name);
  }
  result.trace = node.sequence;
  return result;
}

}  // namespace

PlanResult brfs(const PlanningDomain& domain, const Problem& problem, const ObservationModel& model,
                const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Signature& signature = *domain.signature;
  if (!problem.initial.is_total() || problem.initial.width() != signature.variable_count()) {
    throw ValidationError("initial state must assign every variable");
  }
  Evaluator evaluator(signature, model);
  PlanResult result;
  auto stamp = [&](PlanResult r) {
    r.stats.eval = evaluator.stats();
    r.stats.total_time =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return r;
  };

  SearchNode root{StateSequence(problem.initial), {}};
  ++result.stats.generated;
  if (goals_hold(evaluator, problem.goals, root.sequence)) {
    return stamp(finish(std::move(result), domain, root));
  }

  std::deque<SearchNode> frontier;
  std::unordered_set<StateSequence> seen;
  seen.insert(root.sequence);
  frontier.push_back(std::move(root));

  while (!frontier.empty()) {
    SearchNode node = std::move(frontier.front());
    frontier.pop_front();
    if (node.plan.size() >= options.max_depth) {
      continue;
    }
    ++result.stats.expanded;
    for (std::size_t i = 0; i < domain.actions.size(); ++i) {
      auto child = apply(evaluator, signature, domain.actions[i], i, node);
      if (!child || !seen.insert(child->sequence).second) {
        continue;
      }
      ++result.stats.generated;
      if (goals_hold(evaluator, problem.goals, child->sequence)) {
        return stamp(finish(std::move(result), domain, *child));
      }
      if (options.node_limit != 0 && result.stats.generated >= options.node_limit) {
        result.status = SearchStatus::LimitReached;
        return stamp(std::move(result));
      }
      frontier.push_back(std::move(*child));
    }
  }
  result.status = SearchStatus::Unsolvable;
  return stamp(std::move(result));
}

StateSequence replay(const PlanningDomain& domain, const State& initial, const ObservationModel& model,
                     const std::vector<std::string>& actions) {
  const Signature& signature = *domain.signature;
  Evaluator evaluator(signature, model);
  SearchNode node{StateSequence(initial), {}};
  for (const auto& name : actions) {
    const Action* action = domain.find_action(name);
    if (action == nullptr) {
      throw ValidationError("unknown action '" + name + "'");
    }
    auto next = apply(evaluator, signature, *action, static_cast<std::size_t>(action - domain.actions.data()), node);
    if (!next) {
      throw ValidationError("action '" + name + "' is not applicable after " +
                            std::to_string(node.plan.size()) + " steps");
    }
    node = std::move(*next);
  }
  return node.sequence;
}

}  // namespace gjp
