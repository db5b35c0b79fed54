#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gjp/observation.hpp"
#include "gjp/state.hpp"

namespace gjp {

/// Value of `var` as seen from timestamp `ts` in `seq`: the value at `ts`,
/// else the latest earlier value, else the earliest later value. `ts` may be
/// -1 (before the sequence), in which case only the forward search applies.
std::optional<Value> retrieve(const StateSequence& seq, std::ptrdiff_t ts, VarId var);

/// Duplicate-free set of equal-length state sequences, kept in insertion order.
class PerspectiveSet {
 public:
  bool insert(StateSequence seq);
  bool contains(const StateSequence& seq) const { return index_.count(seq) != 0; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  const std::vector<StateSequence>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool subset_of(const PerspectiveSet& other) const;
  friend bool operator==(const PerspectiveSet& lhs, const PerspectiveSet& rhs);

 private:
  std::vector<StateSequence> members_;
  std::unordered_set<StateSequence> index_;
};

struct FixedPointStats {
  /// Rounds of uniform-perspective expansion up to and including the round
  /// whose output equals its input.
  std::size_t iterations = 0;
  std::size_t final_size = 0;
};

struct CommonPerspectives {
  PerspectiveSet perspectives;
  FixedPointStats stats;
};

struct CommonObservation {
  State state;
  /// Intersection rounds that removed at least one assignment.
  std::size_t iterations = 0;
};

/// Perspective functions of one observation model, with a memo table for
/// individual justified perspectives. Not thread-safe; use one per thread.
class Perspectives {
 public:
  explicit Perspectives(const ObservationModel& model) : model_(&model) {}

  const ObservationModel& model() const { return *model_; }

  /// f_i: the sequence of local states agent `agent` justifiably believes.
  const StateSequence& justified(AgentId agent, const StateSequence& seq);
  /// ef_G: union of the members' justified perspectives.
  PerspectiveSet uniform(const Group& group, const StateSequence& seq);
  /// df_G: justified perspective built on the union of the members' observations.
  StateSequence distributed(const Group& group, const StateSequence& seq) const;
  /// cf_G: least fixed point of repeated uniform expansion starting from `seed`.
  CommonPerspectives common(const Group& group, const PerspectiveSet& seed);

  void clear_cache() { cache_.clear(); }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  struct Key {
    AgentId agent;
    StateSequence seq;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const;
  };

  const ObservationModel* model_;
  std::unordered_map<Key, StateSequence, KeyHash> cache_;
};

StateSequence justified_perspective(const ObservationModel& model, AgentId agent,
                                    const StateSequence& seq);
PerspectiveSet uniform_perspectives(const ObservationModel& model, const Group& group,
                                    const StateSequence& seq);
StateSequence distributed_perspective(const ObservationModel& model, const Group& group,
                                      const StateSequence& seq);
CommonPerspectives common_perspectives(const ObservationModel& model, const Group& group,
                                       const PerspectiveSet& seed);

/// cO(G, s): repeatedly intersect the members' observations until stable.
CommonObservation common_observation(const ObservationModel& model, const Group& group,
                                     const State& state);

/// Element-wise observation sequence [O_i(s_0), ..., O_i(s_n)].
StateSequence observe_sequence(const ObservationModel& model, AgentId agent,
                               const StateSequence& seq);

/// Upper bound 2^(|V| * n) on fixed-point rounds, saturating at SIZE_MAX.
std::size_t common_iteration_bound(std::size_t variable_count, std::size_t length);

}  // namespace gjp
