#include "gjp/perspectives.hpp"

#include <limits>
#include <stdexcept>

#include "gjp/error.hpp"

namespace gjp {

namespace {

// Retrieval restricted to the prefix [s_0, ..., s_end].
std::optional<Value> retrieve_prefix(const StateSequence& seq, std::size_t end, std::ptrdiff_t ts, VarId var) {
  if (ts >= 0 && seq[static_cast<std::size_t>(ts)].has(var)) {
    return seq[static_cast<std::size_t>(ts)].get(var);
  }
  for (std::ptrdiff_t j = ts - 1; j >= 0; --j) {
    if (seq[static_cast<std::size_t>(j)].has(var)) {
      return seq[static_cast<std::size_t>(j)].get(var);
    }
  }
  for (auto j = static_cast<std::size_t>(ts + 1); j <= end; ++j) {
    if (seq[j].has(var)) {
      return seq[j].get(var);
    }
  }
  return std::nullopt;
}

template <class Sees>
StateSequence justify(const StateSequence& seq, Sees&& sees) {
  const std::size_t width = seq[0].width();
  std::vector<std::ptrdiff_t> last_seen(width, -1);
  std::vector<State> out;
  out.reserve(seq.size());
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const State& st = seq[t];
    for (std::uint32_t i = 0; i < width; ++i) {
      if (sees(st, VarId{i})) {
        last_seen[i] = static_cast<std::ptrdiff_t>(t);
      }
    }
    State local(width);
    for (std::uint32_t i = 0; i < width; ++i) {
      const VarId var{i};
      if (!st.has(var) || last_seen[i] < 0) {
        continue;
      }
      if (auto e = retrieve_prefix(seq, t, last_seen[i], var)) {
        local.set(var, *e);
      }
    }
    out.push_back(std::move(local));
  }
  return StateSequence(std::move(out));
}

void require_group(const Group& group) {
  if (group.empty()) {
    throw ValidationError("empty agent group");
  }
}

}  // namespace

std::optional<Value> retrieve(const StateSequence& seq, std::ptrdiff_t ts, VarId var) {
  if (ts < -1 || ts > static_cast<std::ptrdiff_t>(seq.last_index())) {
    throw std::out_of_range("retrieval timestamp " + std::to_string(ts) + " outside the sequence");
  }
  return retrieve_prefix(seq, seq.last_index(), ts, var);
}

bool PerspectiveSet::insert(StateSequence seq) {
  if (!index_.insert(seq).second) {
    return false;
  }
  members_.push_back(std::move(seq));
  return true;
}

bool PerspectiveSet::subset_of(const PerspectiveSet& other) const {
  for (const auto& m : members_) {
    if (!other.contains(m)) {
      return false;
    }
  }
  return true;
}

bool operator==(const PerspectiveSet& lhs, const PerspectiveSet& rhs) {
  return lhs.size() == rhs.size() && lhs.subset_of(rhs);
}

std::size_t Perspectives::KeyHash::operator()(const Key& key) const {
  return hash_combine(key.seq.hash(), key.agent.index);
}

const StateSequence& Perspectives::justified(AgentId agent, const StateSequence& seq) {
  Key key{agent, seq};
  if (auto it = cache_.find(key); it != cache_.end()) {
    return it->second;
  }
  auto result = justified_perspective(*model_, agent, seq);
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

PerspectiveSet Perspectives::uniform(const Group& group, const StateSequence& seq) {
  require_group(group);
  PerspectiveSet out;
  for (auto agent : group) {
    out.insert(justified(agent, seq));
  }
  return out;
}

StateSequence Perspectives::distributed(const Group& group, const StateSequence& seq) const {
  return distributed_perspective(*model_, group, seq);
}

CommonPerspectives Perspectives::common(const Group& group, const PerspectiveSet& seed) {
  require_group(group);
  CommonPerspectives result;
  PerspectiveSet current = seed;
  // Finite spaces guarantee termination only for monotone expansion; the cap
  // turns a non-converging model into an error instead of a hang.
  constexpr std::size_t kRoundCap = 100000;
  for (;;) {
    ++result.stats.iterations;
    PerspectiveSet next;
    for (const auto& w : current) {
      for (auto agent : group) {
        next.insert(justified(agent, w));
      }
    }
    if (next == current) {
      break;
    }
    if (result.stats.iterations >= kRoundCap) {
      throw Error("common perspective expansion did not converge");
    }
    current = std::move(next);
  }
  result.stats.final_size = current.size();
  result.perspectives = std::move(current);
  return result;
}

StateSequence justified_perspective(const ObservationModel& model, AgentId agent, const StateSequence& seq) {
  return justify(seq, [&](const State& s, VarId v) { return model.sees(agent, s, v); });
}

PerspectiveSet uniform_perspectives(const ObservationModel& model, const Group& group, const StateSequence& seq) {
  Perspectives p(model);
  return p.uniform(group, seq);
}

StateSequence distributed_perspective(const ObservationModel& model, const Group& group, const StateSequence& seq) {
  require_group(group);
  return justify(seq, [&](const State& s, VarId v) { return model.any_sees(group, s, v); });
}

CommonPerspectives common_perspectives(const ObservationModel& model, const Group& group,
                                       const PerspectiveSet& seed) {
  Perspectives p(model);
  return p.common(group, seed);
}

CommonObservation common_observation(const ObservationModel& model, const Group& group, const State& state) {
  require_group(group);
  CommonObservation result{state, 0};
  for (;;) {
    State next = result.state;
    for (auto agent : group) {
      next = next.intersect(model.observe(agent, result.state));
    }
    if (next == result.state) {
      return result;
    }
    result.state = std::move(next);
    ++result.iterations;
  }
}

StateSequence observe_sequence(const ObservationModel& model, AgentId agent, const StateSequence& seq) {
  std::vector<State> out;
  out.reserve(seq.size());
  for (const auto& s : seq) {
    out.push_back(model.observe(agent, s));
  }
  return StateSequence(std::move(out));
}

std::size_t common_iteration_bound(std::size_t variable_count, std::size_t length) {
  constexpr auto kBits = std::numeric_limits<std::size_t>::digits;
  if (variable_count != 0 && length > static_cast<std::size_t>(kBits) / variable_count) {
    return std::numeric_limits<std::size_t>::max();
  }
  const std::size_t exponent = variable_count * length;
  if (exponent >= static_cast<std::size_t>(kBits)) {
    return std::numeric_limits<std::size_t>::max();
  }
  return std::size_t{1} << exponent;
}

}  // namespace gjp
