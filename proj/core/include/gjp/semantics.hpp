#pragma once

#include <chrono>
#include <cstddef>

#include "gjp/formula.hpp"
#include "gjp/observation.hpp"
#include "gjp/perspectives.hpp"
#include "gjp/state.hpp"
#include "gjp/ternary.hpp"

namespace gjp {

struct EvalStats {
  std::size_t external_calls = 0;
  std::size_t common_evaluations = 0;
  std::size_t common_iterations_total = 0;
  std::size_t common_max = 0;
  std::chrono::nanoseconds eval_time{0};

  double common_avg() const {
    return common_evaluations == 0
               ? 0.0
               : static_cast<double>(common_iterations_total) / static_cast<double>(common_evaluations);
  }
  double avg_call_ms() const {
    return external_calls == 0 ? 0.0
                               : std::chrono::duration<double, std::milli>(eval_time).count() /
                                     static_cast<double>(external_calls);
  }

  void record_common(std::size_t iterations);
  void merge(const EvalStats& other);
};

/// Ternary evaluator T[seq, phi] over one observation model.
///
/// Each top-level `eval` counts as one external call and gets a fresh
/// justified-perspective memo table. Not thread-safe: give every worker its
/// own evaluator and merge the stats.
class Evaluator {
 public:
  Evaluator(const Signature& signature, const ObservationModel& model);

  Ternary eval(const StateSequence& seq, const Formula& formula);

  const EvalStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }

  Perspectives& perspectives() { return perspectives_; }

 private:
  Ternary eval_node(const StateSequence& seq, const Formula& formula);
  Ternary sees_var(AgentId agent, const StateSequence& seq, VarId var) const;
  Ternary sees_formula(AgentId agent, const StateSequence& seq, const Formula& operand);
  Ternary group_sees_var(GroupMode mode, const Group& group, const StateSequence& seq, VarId var) const;
  Ternary group_sees_formula(GroupMode mode, const Group& group, const StateSequence& seq,
                             const Formula& operand);
  Ternary group_believes(GroupMode mode, const Group& group, const StateSequence& seq,
                         const Formula& operand);

  bool agent_present(AgentId agent, const State& state) const;

  const Signature* signature_;
  Perspectives perspectives_;
  EvalStats stats_;
};

/// One-shot evaluation without stats bookkeeping.
Ternary evaluate(const Signature& signature, const ObservationModel& model, const StateSequence& seq,
                 const Formula& formula);

}  // namespace gjp
