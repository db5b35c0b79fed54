#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gjp/signature.hpp"
#include "gjp/state.hpp"

namespace gjp {

/// Per-agent observation function O_i over (possibly partial) states.
///
/// Implementations provide `sees`, the visibility test of a variable in a
/// state. It may hold even when the variable itself is unassigned: an agent
/// peeking into an empty box is still looking at the box. Justified
/// perspectives use this to time-stamp observations inside nested
/// perspectives. `observe` keeps exactly the assigned variables that are
/// seen.
///
/// Models must be deterministic and side-effect free, and `observe` must be
/// contained in its input, idempotent and monotone (see check_axioms).
class ObservationModel {
 public:
  virtual ~ObservationModel() = default;

  virtual std::string_view name() const = 0;
  virtual bool sees(AgentId agent, const State& state, VarId var) const = 0;
  virtual State observe(AgentId agent, const State& state) const;

  /// Distributed observation: union of the members' observations.
  State observe_union(const Group& group, const State& state) const;
  bool any_sees(const Group& group, const State& state, VarId var) const;
};

/// Key/argument lines attached to an observation model in a domain file.
struct ModelParam {
  std::string key;
  std::vector<std::string> args;
};
using ModelParams = std::vector<ModelParam>;

using ModelFactory =
    std::function<std::unique_ptr<ObservationModel>(const Signature&, const ModelParams&)>;

/// Name -> factory table referenced by domain files.
class ModelRegistry {
 public:
  void add(std::string name, ModelFactory factory);
  bool contains(std::string_view name) const;
  std::unique_ptr<ObservationModel> create(std::string_view name, const Signature& signature,
                                           const ModelParams& params) const;
  std::vector<std::string> names() const;

  /// Registry preloaded with the built-in benchmark models.
  static const ModelRegistry& builtin();

 private:
  std::vector<std::pair<std::string, ModelFactory>> entries_;
};

/// Outcome of sampling the three observation axioms on a model.
struct AxiomReport {
  std::size_t samples = 0;
  std::size_t containment_failures = 0;
  std::size_t idempotence_failures = 0;
  std::size_t monotonicity_failures = 0;
  std::size_t determinism_failures = 0;

  bool ok() const {
    return containment_failures == 0 && idempotence_failures == 0 && monotonicity_failures == 0 &&
           determinism_failures == 0;
  }
};

/// Samples random partial states (and random supersets of them) from the
/// signature's domains and checks O_i(s) subset of s, O_i(O_i(s)) = O_i(s)
/// and s subset of s' => O_i(s) subset of O_i(s') for every agent.
AxiomReport check_axioms(const ObservationModel& model, const Signature& signature,
                         std::size_t samples, std::uint64_t seed);

}  // namespace gjp
