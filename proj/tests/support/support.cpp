#include "support.hpp"

#include <set>

#include "gjp/error.hpp"

#ifndef GJP_DATA_DIR
#error "GJP_DATA_DIR must point at the shipped data directory"
#endif

namespace gjp::test {

std::string data_path(const std::string& relative) { return std::string(GJP_DATA_DIR) + "/" + relative; }

TableModel::TableModel(std::size_t agents, std::size_t variables)
    : rules_(agents, std::vector<Rule>(variables)) {}

bool TableModel::sees(AgentId agent, const State& state, VarId var) const {
  const Rule& r = rules_[agent.index][var.index];
  switch (r.mode) {
    case Mode::Always:
      return true;
    case Mode::Never:
      return false;
    case Mode::Guarded: {
      const auto& g = state.get(r.guard);
      return g && *g == r.value && sees(agent, state, r.guard);
    }
  }
  return false;
}

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

RandomWorld random_world(std::mt19937_64& rng, const WorldShape& shape) {
  RandomWorld w;
  w.signature = std::make_shared<Signature>();
  auto& sig = *w.signature;
  std::vector<AgentId> agents;
  for (std::size_t i = 0; i < shape.agents; ++i) {
    const std::string name(1, static_cast<char>('a' + i));
    const auto hi = shape.single_valued_agents ? 0 : static_cast<std::int64_t>(uniform(rng, 0, 1));
    agents.push_back(sig.add_agent(name, ValueDomain::integer_range(0, hi)));
  }
  const std::size_t plain = uniform(rng, shape.min_plain, shape.max_plain);
  for (std::size_t i = 0; i < plain; ++i) {
    const auto hi = static_cast<std::int64_t>(uniform(rng, 1, shape.max_domain - 1));
    w.plain.push_back(sig.add_variable("v" + std::to_string(i), ValueDomain::integer_range(0, hi)));
  }
  w.everyone = Group(agents);
  w.model = std::make_unique<TableModel>(sig.agent_count(), sig.variable_count());
  for (auto agent : agents) {
    for (auto var : sig.variables()) {
      TableModel::Rule rule;
      const auto roll = uniform(rng, 0, 9);
      if (roll < 4 || var.index == 0) {
        rule.mode = TableModel::Mode::Always;
      } else if (roll < 6) {
        rule.mode = TableModel::Mode::Never;
      } else {
        rule.mode = TableModel::Mode::Guarded;
        rule.guard = VarId{static_cast<std::uint32_t>(uniform(rng, 0, var.index - 1))};
        const auto& values = sig.domain(rule.guard).values();
        rule.value = values[uniform(rng, 0, values.size() - 1)];
      }
      w.model->set(agent, var, rule);
    }
  }
  return w;
}

State RandomWorld::random_state(std::mt19937_64& rng) const {
  State s(signature->variable_count());
  for (auto var : signature->variables()) {
    const auto& values = signature->domain(var).values();
    s.set(var, values[uniform(rng, 0, values.size() - 1)]);
  }
  return s;
}

StateSequence RandomWorld::random_sequence(std::mt19937_64& rng, std::size_t length) const {
  std::vector<State> states;
  for (std::size_t t = 0; t < length; ++t) {
    states.push_back(random_state(rng));
  }
  return StateSequence(std::move(states));
}

Formula RandomWorld::random_atom(std::mt19937_64& rng, bool contingent) const {
  static constexpr Relation kRelations[] = {Relation::Eq, Relation::Ne, Relation::Lt,
                                            Relation::Le, Relation::Gt, Relation::Ge};
  for (;;) {
    const VarId var = plain[uniform(rng, 0, plain.size() - 1)];
    const auto& values = signature->domain(var).values();
    const Value c = values[uniform(rng, 0, values.size() - 1)];
    const Formula::Atom atom{kRelations[uniform(rng, 0, 5)], var, c};
    if (contingent) {
      bool some_true = false;
      bool some_false = false;
      State s(signature->variable_count());
      for (const auto& v : values) {
        s.set(var, v);
        (interpret_atom(s, atom) == Ternary::True ? some_true : some_false) = true;
      }
      if (!some_true || !some_false) {
        continue;
      }
    }
    return Formula::atom(atom.relation, var, c);
  }
}

Group RandomWorld::random_group(std::mt19937_64& rng) const {
  std::vector<AgentId> members;
  for (auto agent : everyone) {
    if (uniform(rng, 0, 1) == 1) {
      members.push_back(agent);
    }
  }
  if (members.empty()) {
    members.push_back(everyone.members()[uniform(rng, 0, everyone.size() - 1)]);
  }
  return Group(std::move(members));
}

Formula RandomWorld::random_formula(std::mt19937_64& rng, int depth, bool allow_belief) const {
  const auto agent = [&] { return everyone.members()[uniform(rng, 0, everyone.size() - 1)]; };
  const auto any_var = [&] { return VarId{static_cast<std::uint32_t>(uniform(rng, 0, signature->variable_count() - 1))}; };
  const auto mode = [&] { return static_cast<GroupMode>(uniform(rng, 0, 2)); };
  if (depth <= 0) {
    switch (uniform(rng, 0, 3)) {
      case 0:
        return Formula::sees(agent(), any_var());
      case 1:
        return Formula::group_sees(mode(), random_group(rng), any_var());
      default:
        return random_atom(rng);
    }
  }
  const std::size_t top = allow_belief ? 7 : 5;
  switch (uniform(rng, 0, top)) {
    case 0:
      return random_atom(rng);
    case 1:
      return Formula::negation(random_formula(rng, depth - 1, allow_belief));
    case 2:
      return Formula::conjunction(random_formula(rng, depth - 1, allow_belief),
                                  random_formula(rng, depth - 1, allow_belief));
    case 3:
      return Formula::modal(uniform(rng, 0, 1) ? Modality::Sees : Modality::Knows, agent(),
                            random_formula(rng, depth - 1, false));
    case 4:
      return Formula::group_modal(uniform(rng, 0, 1) ? Modality::Sees : Modality::Knows, mode(), random_group(rng),
                                  random_formula(rng, depth - 1, false));
    case 5:
      return random_formula(rng, 0, allow_belief);
    case 6:
      return Formula::modal(Modality::Believes, agent(), random_formula(rng, depth - 1, true));
    default:
      return Formula::group_modal(Modality::Believes, mode(), random_group(rng),
                                  random_formula(rng, depth - 1, true));
  }
}

Formula RandomWorld::random_literal(std::mt19937_64& rng) const {
  const auto atom = random_atom(rng, true);
  const auto agent = everyone.members()[uniform(rng, 0, everyone.size() - 1)];
  const auto var = plain[uniform(rng, 0, plain.size() - 1)];
  Formula f = atom;
  switch (uniform(rng, 0, 6)) {
    case 0:
      break;
    case 1:
      f = Formula::sees(agent, var);
      break;
    case 2:
      f = Formula::modal(static_cast<Modality>(uniform(rng, 0, 2)), agent, atom);
      break;
    case 3:
      f = Formula::group_sees(static_cast<GroupMode>(uniform(rng, 0, 2)), random_group(rng), var);
      break;
    default:
      f = Formula::group_modal(static_cast<Modality>(uniform(rng, 0, 2)), static_cast<GroupMode>(uniform(rng, 0, 2)),
                               random_group(rng), atom);
      break;
  }
  return uniform(rng, 0, 1) == 0 ? f : Formula::negation(f);
}

StateSequence reference_justified(const ObservationModel& model, AgentId agent, const StateSequence& seq) {
  const std::size_t width = seq[0].width();
  std::vector<State> out;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    State st(width);
    const StateSequence prefix = seq.slice(t);
    for (std::uint32_t i = 0; i < width; ++i) {
      const VarId v{i};
      if (!seq[t].has(v)) {
        continue;
      }
      std::set<long> ats{-1};
      for (std::size_t j = 0; j <= t; ++j) {
        if (model.sees(agent, seq[j], v)) {
          ats.insert(static_cast<long>(j));
        }
      }
      const long lt = *ats.rbegin();
      if (lt < 0) {
        continue;
      }
      std::optional<Value> e;
      if (prefix[static_cast<std::size_t>(lt)].has(v)) {
        e = prefix[static_cast<std::size_t>(lt)].get(v);
      } else {
        std::set<long> lts;
        std::set<long> rts;
        for (std::size_t j = 0; j < prefix.size(); ++j) {
          if (!prefix[j].has(v)) {
            continue;
          }
          if (static_cast<long>(j) < lt) {
            lts.insert(static_cast<long>(j));
          } else if (static_cast<long>(j) > lt) {
            rts.insert(static_cast<long>(j));
          }
        }
        if (!lts.empty()) {
          e = prefix[static_cast<std::size_t>(*lts.rbegin())].get(v);
        } else if (!rts.empty()) {
          e = prefix[static_cast<std::size_t>(*rts.begin())].get(v);
        }
      }
      if (e) {
        st.set(v, *e);
      }
    }
    out.push_back(std::move(st));
  }
  return StateSequence(std::move(out));
}

LoadedDomain load_domain(const std::string& relative_path) {
  LoadedDomain l{parse_domain(read_file(data_path(relative_path))), nullptr};
  l.model = ModelRegistry::builtin().create(l.domain.observation, *l.domain.signature, l.domain.model_params);
  return l;
}

NumberWorld number_world() {
  auto loaded = load_domain("number/domain.gjp");
  NumberWorld w{std::move(loaded.domain), std::move(loaded.model), {}, {}, {}, {}};
  w.a = w.sig().agent_or_throw("a");
  w.b = w.sig().agent_or_throw("b");
  w.n = w.sig().variable_or_throw("n");
  w.group = Group{w.a, w.b};
  return w;
}

State NumberWorld::initial(std::int64_t value) const {
  State s(sig().variable_count());
  s.set(sig().agent_variable(a), Value::boolean(false));
  s.set(sig().agent_variable(b), Value::boolean(false));
  s.set(n, Value::integer(value));
  return s;
}

StateSequence NumberWorld::plan1() const {
  return replay(domain, initial(), *model, {"peek_a", "return_a", "subtract", "peek_b"});
}

std::vector<std::string> project(const Signature& sig, const StateSequence& seq, VarId var) {
  std::vector<std::string> out;
  for (const auto& s : seq) {
    out.push_back(s.has(var) ? sig.format(*s.get(var)) : "τ");
  }
  return out;
}

}  // namespace gjp::test
