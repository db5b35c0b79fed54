#include "gjp/semantics.hpp"

#include <algorithm>
#include <functional>

#include "gjp/error.hpp"
#include "overloaded.hpp"

namespace gjp {

using detail::Overloaded;

namespace {

const FormulaNode::variant& as_variant(const Formula& f) { return f.node(); }

StateSequence map_states(const StateSequence& seq, const std::function<State(const State&)>& fn) {
  std::vector<State> out;
  out.reserve(seq.size());
  for (const auto& s : seq) {
    out.push_back(fn(s));
  }
  return StateSequence(std::move(out));
}

}  // namespace

void EvalStats::record_common(std::size_t iterations) {
  ++common_evaluations;
  common_iterations_total += iterations;
  common_max = std::max(common_max, iterations);
}

void EvalStats::merge(const EvalStats& other) {
  external_calls += other.external_calls;
  common_evaluations += other.common_evaluations;
  common_iterations_total += other.common_iterations_total;
  common_max = std::max(common_max, other.common_max);
  eval_time += other.eval_time;
}

Evaluator::Evaluator(const Signature& signature, const ObservationModel& model)
    : signature_(&signature), perspectives_(model) {}

Ternary Evaluator::eval(const StateSequence& seq, const Formula& formula) {
  const auto start = std::chrono::steady_clock::now();
  perspectives_.clear_cache();
  const Ternary result = eval_node(seq, formula);
  perspectives_.clear_cache();
  ++stats_.external_calls;
  stats_.eval_time += std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

bool Evaluator::agent_present(AgentId agent, const State& state) const {
  return state.has(signature_->agent_variable(agent));
}

Ternary Evaluator::eval_node(const StateSequence& seq, const Formula& formula) {
  return std::visit(
      Overloaded{
          [&](const Formula::Atom& a) { return interpret_atom(seq.back(), a); },
          [&](const Formula::Not& n) { return !eval_node(seq, n.operand); },
          [&](const Formula::And& a) {
            const Ternary lhs = eval_node(seq, a.lhs);
            if (lhs == Ternary::False) {
              return lhs;
            }
            return ternary_and(lhs, eval_node(seq, a.rhs));
          },
          [&](const Formula::SeesVar& s) { return sees_var(s.agent, seq, s.var); },
          [&](const Formula::GroupSeesVar& s) { return group_sees_var(s.mode, s.group, seq, s.var); },
          [&](const Formula::Modal& m) {
            switch (m.modality) {
              case Modality::Sees:
                return sees_formula(m.agent, seq, m.operand);
              case Modality::Knows:
                return ternary_and(eval_node(seq, m.operand), sees_formula(m.agent, seq, m.operand));
              case Modality::Believes: {
                const StateSequence view = perspectives_.justified(m.agent, seq);
                return eval_node(view, m.operand);
              }
            }
            throw Error("unknown modality");
          },
          [&](const Formula::GroupModal& m) {
            if (m.group.empty()) {
              throw ValidationError("empty agent group");
            }
            switch (m.modality) {
              case Modality::Sees:
                return group_sees_formula(m.mode, m.group, seq, m.operand);
              case Modality::Knows:
                return ternary_and(eval_node(seq, m.operand), group_sees_formula(m.mode, m.group, seq, m.operand));
              case Modality::Believes:
                return group_believes(m.mode, m.group, seq, m.operand);
            }
            throw Error("unknown modality");
          },
      },
      as_variant(formula));
}

Ternary Evaluator::sees_var(AgentId agent, const StateSequence& seq, VarId var) const {
  const State& last = seq.back();
  if (!agent_present(agent, last) || !last.has(var)) {
    return Ternary::Unknown;
  }
  return from_bool(perspectives_.model().sees(agent, last, var));
}

Ternary Evaluator::sees_formula(AgentId agent, const StateSequence& seq, const Formula& operand) {
  if (!agent_present(agent, seq.back()) || eval_node(seq, operand) == Ternary::Unknown) {
    return Ternary::Unknown;
  }
  const auto observed = observe_sequence(perspectives_.model(), agent, seq);
  return eval_node(observed, operand) == Ternary::Unknown ? Ternary::False : Ternary::True;
}

Ternary Evaluator::group_sees_var(GroupMode mode, const Group& group, const StateSequence& seq, VarId var) const {
  if (group.empty()) {
    throw ValidationError("empty agent group");
  }
  const State& last = seq.back();
  const auto& model = perspectives_.model();
  switch (mode) {
    case GroupMode::Uniform: {
      Ternary result = Ternary::True;
      for (auto agent : group) {
        result = ternary_and(result, sees_var(agent, seq, var));
      }
      return result;
    }
    case GroupMode::Distributed: {
      const bool none_present =
          std::none_of(group.begin(), group.end(), [&](AgentId a) { return agent_present(a, last); });
      if (!last.has(var) || none_present) {
        return Ternary::Unknown;
      }
      return from_bool(model.observe_union(group, last).has(var));
    }
    case GroupMode::Common: {
      const bool any_absent =
          std::any_of(group.begin(), group.end(), [&](AgentId a) { return !agent_present(a, last); });
      if (!last.has(var) || any_absent) {
        return Ternary::Unknown;
      }
      return from_bool(common_observation(model, group, last).state.has(var));
    }
  }
  throw Error("unknown group mode");
}

Ternary Evaluator::group_sees_formula(GroupMode mode, const Group& group, const StateSequence& seq,
                                      const Formula& operand) {
  const State& last = seq.back();
  const auto& model = perspectives_.model();
  switch (mode) {
    case GroupMode::Uniform: {
      Ternary result = Ternary::True;
      for (auto agent : group) {
        result = ternary_and(result, sees_formula(agent, seq, operand));
      }
      return result;
    }
    case GroupMode::Distributed: {
      const bool none_present =
          std::none_of(group.begin(), group.end(), [&](AgentId a) { return agent_present(a, last); });
      if (none_present || eval_node(seq, operand) == Ternary::Unknown) {
        return Ternary::Unknown;
      }
      const auto merged = map_states(seq, [&](const State& s) { return model.observe_union(group, s); });
      return eval_node(merged, operand) == Ternary::Unknown ? Ternary::False : Ternary::True;
    }
    case GroupMode::Common: {
      const bool any_absent =
          std::any_of(group.begin(), group.end(), [&](AgentId a) { return !agent_present(a, last); });
      if (any_absent || eval_node(seq, operand) == Ternary::Unknown) {
        return Ternary::Unknown;
      }
      const auto common =
          map_states(seq, [&](const State& s) { return common_observation(model, group, s).state; });
      return eval_node(common, operand) == Ternary::Unknown ? Ternary::False : Ternary::True;
    }
  }
  throw Error("unknown group mode");
}

Ternary Evaluator::group_believes(GroupMode mode, const Group& group, const StateSequence& seq,
                                  const Formula& operand) {
  switch (mode) {
    case GroupMode::Uniform: {
      Ternary result = Ternary::True;
      for (const auto& w : perspectives_.uniform(group, seq)) {
        result = ternary_and(result, eval_node(w, operand));
      }
      return result;
    }
    case GroupMode::Distributed:
      return eval_node(perspectives_.distributed(group, seq), operand);
    case GroupMode::Common: {
      PerspectiveSet seed;
      seed.insert(seq);
      const auto common = perspectives_.common(group, seed);
      stats_.record_common(common.stats.iterations);
      Ternary result = Ternary::True;
      for (const auto& w : common.perspectives) {
        result = ternary_and(result, eval_node(w, operand));
      }
      return result;
    }
  }
  throw Error("unknown group mode");
}

Ternary evaluate(const Signature& signature, const ObservationModel& model, const StateSequence& seq,
                 const Formula& formula) {
  Evaluator evaluator(signature, model);
  return evaluator.eval(seq, formula);
}

}  // namespace gjp
