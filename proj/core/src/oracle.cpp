#include "gjp/oracle.hpp"

#include <algorithm>

#include "gjp/error.hpp"
#include "gjp/perspectives.hpp"
#include "overloaded.hpp"

namespace gjp {

using detail::Overloaded;

namespace {

StateSequence override_with(const StateSequence& global, const StateSequence& partial) {
  std::vector<State> out;
  out.reserve(global.size());
  for (std::size_t t = 0; t < global.size(); ++t) {
    out.push_back(global[t].overridden_by(partial[t]));
  }
  return StateSequence(std::move(out));
}

template <class Fn>
StateSequence map_states(const StateSequence& seq, Fn&& fn) {
  std::vector<State> out;
  out.reserve(seq.size());
  for (const auto& s : seq) {
    out.push_back(fn(s));
  }
  return StateSequence(std::move(out));
}

}  // namespace

CompletionSpace::CompletionSpace(const Signature& signature, std::size_t length, std::size_t ceiling)
    : signature_(&signature), length_(length), size_(1) {
  if (length == 0) {
    throw ValidationError("completion length must be positive");
  }
  for (std::size_t t = 0; t < length; ++t) {
    for (auto var : signature.variables()) {
      const std::size_t d = signature.domain(var).size();
      if (size_ > ceiling / d) {
        throw InstanceTooLarge("completion space exceeds ceiling of " + std::to_string(ceiling));
      }
      size_ *= d;
    }
  }
}

bool CompletionSpace::for_each(const std::function<bool(const StateSequence&)>& visit) const {
  const auto vars = signature_->variables();
  const std::size_t digits = vars.size() * length_;
  std::vector<std::size_t> odometer(digits, 0);
  for (;;) {
    std::vector<State> states(length_, State(vars.size()));
    for (std::size_t t = 0; t < length_; ++t) {
      for (std::size_t k = 0; k < vars.size(); ++k) {
        states[t].set(vars[k], signature_->domain(vars[k]).values()[odometer[t * vars.size() + k]]);
      }
    }
    if (!visit(StateSequence(std::move(states)))) {
      return false;
    }
    std::size_t pos = 0;
    while (pos < digits) {
      const auto& var = vars[pos % vars.size()];
      if (++odometer[pos] < signature_->domain(var).size()) {
        break;
      }
      odometer[pos] = 0;
      ++pos;
    }
    if (pos == digits) {
      return true;
    }
  }
}

CompleteSemantics::CompleteSemantics(const Signature& signature, const ObservationModel& model, std::size_t ceiling)
    : signature_(&signature), model_(&model), ceiling_(ceiling) {}

bool CompleteSemantics::all_completions(const StateSequence& partial, const Formula& formula) const {
  CompletionSpace space(*signature_, partial.size(), ceiling_);
  return space.for_each([&](const StateSequence& g) { return holds(override_with(g, partial), formula); });
}

bool CompleteSemantics::decided(const StateSequence& partial, const Formula& formula) const {
  return all_completions(partial, formula) || all_completions(partial, Formula::negation(formula));
}

bool CompleteSemantics::holds(const StateSequence& seq, const Formula& formula) const {
  const State& last = seq.back();
  const auto& model = *model_;
  return std::visit(
      Overloaded{
          [&](const Formula::Atom& a) { return interpret_atom(last, a) == Ternary::True; },
          [&](const Formula::Not& n) { return !holds(seq, n.operand); },
          [&](const Formula::And& a) { return holds(seq, a.lhs) && holds(seq, a.rhs); },
          [&](const Formula::SeesVar& s) { return model.observe(s.agent, last).has(s.var); },
          [&](const Formula::GroupSeesVar& s) {
            switch (s.mode) {
              case GroupMode::Uniform:
                return std::all_of(s.group.begin(), s.group.end(),
                                   [&](AgentId a) { return model.observe(a, last).has(s.var); });
              case GroupMode::Distributed:
                return model.observe_union(s.group, last).has(s.var);
              case GroupMode::Common:
                return common_observation(model, s.group, last).state.has(s.var);
            }
            return false;
          },
          [&](const Formula::Modal& m) {
            switch (m.modality) {
              case Modality::Sees:
                return decided(observe_sequence(model, m.agent, seq), m.operand);
              case Modality::Knows:
                return holds(seq, m.operand) && decided(observe_sequence(model, m.agent, seq), m.operand);
              case Modality::Believes:
                return all_completions(justified_perspective(model, m.agent, seq), m.operand);
            }
            return false;
          },
          [&](const Formula::GroupModal& m) {
            auto group_sees = [&]() {
              switch (m.mode) {
                case GroupMode::Uniform:
                  return std::all_of(m.group.begin(), m.group.end(), [&](AgentId a) {
                    return decided(observe_sequence(model, a, seq), m.operand);
                  });
                case GroupMode::Distributed:
                  return decided(map_states(seq, [&](const State& s) { return model.observe_union(m.group, s); }),
                                 m.operand);
                case GroupMode::Common:
                  return decided(
                      map_states(seq, [&](const State& s) { return common_observation(model, m.group, s).state; }),
                      m.operand);
              }
              return false;
            };
            switch (m.modality) {
              case Modality::Sees:
                return group_sees();
              case Modality::Knows:
                return holds(seq, m.operand) && group_sees();
              case Modality::Believes:
                break;
            }
            switch (m.mode) {
              case GroupMode::Uniform: {
                const auto views = uniform_perspectives(model, m.group, seq);
                return std::all_of(views.begin(), views.end(),
                                   [&](const StateSequence& w) { return all_completions(w, m.operand); });
              }
              case GroupMode::Distributed:
                return all_completions(distributed_perspective(model, m.group, seq), m.operand);
              case GroupMode::Common: {
                PerspectiveSet seed;
                seed.insert(seq);
                const auto views = common_perspectives(model, m.group, seed).perspectives;
                return std::all_of(views.begin(), views.end(),
                                   [&](const StateSequence& w) { return all_completions(w, m.operand); });
              }
            }
            return false;
          },
      },
      static_cast<const FormulaNode::variant&>(formula.node()));
}

bool complete_eval(const Signature& signature, const ObservationModel& model, const StateSequence& seq,
                   const Formula& formula, std::size_t ceiling) {
  return CompleteSemantics(signature, model, ceiling).holds(seq, formula);
}

}  // namespace gjp
