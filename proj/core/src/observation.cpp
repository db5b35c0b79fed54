#include "gjp/observation.hpp"

#include <algorithm>
#include <random>

#include "gjp/error.hpp"

namespace gjp {

State ObservationModel::observe(AgentId agent, const State& state) const {
  State out(state.width());
  for (std::uint32_t i = 0; i < state.width(); ++i) {
    const VarId var{i};
    if (state.has(var) && sees(agent, state, var)) {
      out.set(var, *state.get(var));
    }
  }
  return out;
}

State ObservationModel::observe_union(const Group& group, const State& state) const {
  State out(state.width());
  for (auto agent : group) {
    out = out.overridden_by(observe(agent, state));
  }
  return out;
}

bool ObservationModel::any_sees(const Group& group, const State& state, VarId var) const {
  return std::any_of(group.begin(), group.end(), [&](AgentId agent) { return sees(agent, state, var); });
}

void ModelRegistry::add(std::string name, ModelFactory factory) {
  for (auto& entry : entries_) {
    if (entry.first == name) {
      entry.second = std::move(factory);
      return;
    }
  }
  entries_.emplace_back(std::move(name), std::move(factory));
}

bool ModelRegistry::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == name; });
}

std::unique_ptr<ObservationModel> ModelRegistry::create(std::string_view name, const Signature& signature,
                                                        const ModelParams& params) const {
  for (const auto& entry : entries_) {
    if (entry.first == name) {
      return entry.second(signature, params);
    }
  }
  throw ValidationError("unknown observation model '" + std::string(name) + "'");
}

std::vector<std::string> ModelRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& entry : entries_) {
    out.push_back(entry.first);
  }
  return out;
}

namespace {

State random_partial(const Signature& sig, std::mt19937_64& rng) {
  State s(sig.variable_count());
  std::bernoulli_distribution keep(0.6);
  for (auto var : sig.variables()) {
    if (!keep(rng)) {
      continue;
    }
    const auto& values = sig.domain(var).values();
    std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
    s.set(var, values[pick(rng)]);
  }
  return s;
}

State random_superset(const Signature& sig, const State& base, std::mt19937_64& rng) {
  State s = base;
  std::bernoulli_distribution fill(0.5);
  for (auto var : sig.variables()) {
    if (s.has(var) || !fill(rng)) {
      continue;
    }
    const auto& values = sig.domain(var).values();
    std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
    s.set(var, values[pick(rng)]);
  }
  return s;
}

}  // namespace

AxiomReport check_axioms(const ObservationModel& model, const Signature& signature, std::size_t samples,
                         std::uint64_t seed) {
  AxiomReport report;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const State s = random_partial(signature, rng);
    const State bigger = random_superset(signature, s, rng);
    for (auto agent : signature.agents()) {
      const State o = model.observe(agent, s);
      ++report.samples;
      if (!o.subset_of(s)) {
        ++report.containment_failures;
      }
      if (!(model.observe(agent, o) == o)) {
        ++report.idempotence_failures;
      }
      if (!o.subset_of(model.observe(agent, bigger))) {
        ++report.monotonicity_failures;
      }
      if (!(model.observe(agent, s) == o)) {
        ++report.determinism_failures;
      }
    }
  }
  return report;
}

}  // namespace gjp
