// Acceptance checks for criteria 1-9. Prints one PASS/FAIL line per criterion
// and exits non-zero if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "gjp/oracle.hpp"
#include "gjp/semantics.hpp"
#include "support.hpp"

using namespace gjp;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kIdempotenceInstances = 1000;
constexpr double kIdempotenceSeconds = 5.0;
constexpr std::size_t kBridgeInstances = 500;
constexpr std::size_t kBridgeCeiling = 100'000;
constexpr std::size_t kAxiomSamples = 1000;
constexpr double kNumberSeconds = 60.0;
constexpr std::size_t kCommonMaxCeiling = 5;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Reporter {
  int failures = 0;
  void report(int id, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
    if (!ok) {
      ++failures;
    }
  }
};

// Instances shared by criteria 1, 2 and 8: |V| <= 4, |D| <= 3, n <= 6.
struct RandomInstance {
  test::RandomWorld world;
  StateSequence seq;
};

std::vector<RandomInstance> random_instances(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RandomInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto world = test::random_world(rng, {2, 1, 2, 3, false});
    auto seq = world.random_sequence(rng, 1 + i % 7);
    out.push_back({std::move(world), std::move(seq)});
  }
  return out;
}

struct BenchRun {
  std::string set;
  std::string id;
  PlanResult result;
  const Problem* problem = nullptr;
};

struct Suite {
  test::LoadedDomain loaded;
  std::vector<std::pair<std::string, Problem>> problems;
};

Suite load_suite(const std::string& set) {
  Suite suite{test::load_domain(set + "/domain.gjp"), {}};
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(test::data_path(set))) {
    if (entry.path().extension() == ".gjp" && entry.path().filename() != "domain.gjp") {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end(), [](const auto& x, const auto& y) {
    const auto sx = x.stem().string();
    const auto sy = y.stem().string();
    return sx.size() != sy.size() ? sx.size() < sy.size() : sx < sy;
  });
  for (const auto& path : paths) {
    suite.problems.emplace_back(path.stem().string(), parse_problem(suite.loaded.domain, read_file(path.string())));
  }
  return suite;
}

SearchOptions options_for(const Problem& problem) {
  return {problem.max_depth.value_or(12), problem.node_limit.value_or(0)};
}

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Solved:
      return "solved";
    case SearchStatus::Unsolvable:
      return "unsolvable";
    case SearchStatus::LimitReached:
      return "limit";
  }
  return "?";
}

// Sees `watched` only while `guard` is unassigned; violates monotonicity.
class ContrarianModel final : public ObservationModel {
 public:
  ContrarianModel(VarId guard, VarId watched) : guard_(guard), watched_(watched) {}
  std::string_view name() const override { return "contrarian"; }
  bool sees(AgentId, const State& state, VarId var) const override {
    return var != watched_ || !state.has(guard_);
  }

 private:
  VarId guard_;
  VarId watched_;
};

}  // namespace

int main() {
  Reporter rep;
  const auto instances = random_instances(kIdempotenceInstances, 2024);

  {  // 1: idempotence of justified perspectives.
    const auto start = Clock::now();
    std::size_t failures = 0;
    std::size_t nested_checked = 0;
    for (const auto& inst : instances) {
      for (auto agent : inst.world.everyone) {
        const auto fi = justified_perspective(*inst.world.model, agent, inst.seq);
        if (justified_perspective(*inst.world.model, agent, fi) != fi) {
          ++failures;
        }
      }
    }
    const double elapsed = seconds_since(start);
    for (const auto& inst : instances) {
      for (auto outer : inst.world.everyone) {
        for (auto inner : inst.world.everyone) {
          const auto nested =
              justified_perspective(*inst.world.model, outer,
                                    justified_perspective(*inst.world.model, inner, inst.seq));
          ++nested_checked;
          if (justified_perspective(*inst.world.model, outer, nested) != nested) {
            ++failures;
          }
        }
      }
    }
    std::ostringstream os;
    os << instances.size() << " instances, " << nested_checked << " nested inputs, " << failures
       << " failures, " << elapsed << " s (limit " << kIdempotenceSeconds << " s)";
    rep.report(1, failures == 0 && instances.size() >= 1000 && elapsed < kIdempotenceSeconds, os.str());
  }

  auto number = test::number_world();
  const auto plan1 = number.plan1();

  {  // 2: common perspectives converge within the bound; Plan 1 fixed point.
    std::size_t over_bound = 0;
    std::size_t worst = 0;
    for (const auto& inst : instances) {
      PerspectiveSet seed;
      seed.insert(inst.seq);
      const auto cf = common_perspectives(*inst.world.model, inst.world.everyone, seed);
      worst = std::max(worst, cf.stats.iterations);
      if (cf.stats.iterations > common_iteration_bound(inst.world.signature->variable_count(), inst.seq.size())) {
        ++over_bound;
      }
    }
    PerspectiveSet seed;
    seed.insert(plan1);
    const auto cf = common_perspectives(*number.model, number.group, seed);
    std::set<std::vector<std::string>> projections;
    for (const auto& p : cf.perspectives) {
      projections.insert(test::project(number.sig(), p, number.n));
    }
    const std::set<std::vector<std::string>> expected{
        {"τ", "2", "2", "2", "2"}, {"τ", "τ", "τ", "τ", "1"}, {"τ", "τ", "τ", "τ", "2"}};
    const bool ok = over_bound == 0 && projections == expected && cf.stats.iterations == 3;
    std::ostringstream os;
    os << instances.size() << " random instances within bound (max " << worst << " iterations); Plan 1 set "
       << (projections == expected ? "matches" : "differs") << ", converged at iteration " << cf.stats.iterations;
    rep.report(2, ok, os.str());
  }

  {  // 3: Plan 1 ternary values.
    auto eval = [&](const char* text) { return evaluate(number.sig(), *number.model, plan1, number.formula(text)); };
    const auto eb = eval("(EB (a b) (< n 3))");
    const auto cb = eval("(CB (a b) (< n 3))");
    const auto eb1 = eval("(EB (a b) (= n 1))");
    std::ostringstream os;
    os << "EB(n<3)=" << eb << " CB(n<3)=" << cb << " EB(n=1)=" << eb1;
    rep.report(3, eb == Ternary::True && cb == Ternary::True && eb1 == Ternary::False, os.str());
  }

  std::vector<BenchRun> runs;
  std::map<std::string, Suite> suites;
  for (const char* set : {"number", "grapevine", "bbl"}) {
    suites.emplace(set, load_suite(set));
  }

  {  // 4: Number plan lengths and optimality witnesses.
    const std::size_t expected[] = {4, 2, 4, 6, 8, 4, 4};
    auto& suite = suites.at("number");
    bool ok = suite.problems.size() == 7;
    std::ostringstream os;
    double slowest = 0.0;
    for (std::size_t i = 0; i < suite.problems.size() && i < 7; ++i) {
      const auto& [id, problem] = suite.problems[i];
      const auto start = Clock::now();
      auto result = brfs(suite.loaded.domain, problem, *suite.loaded.model, options_for(problem));
      const double elapsed = seconds_since(start);
      slowest = std::max(slowest, elapsed);
      const auto witness = brfs(suite.loaded.domain, problem, *suite.loaded.model, {expected[i] - 1, 0});
      const bool row_ok = result.status == SearchStatus::Solved && result.plan.size() == expected[i] &&
                          witness.status == SearchStatus::Unsolvable && elapsed < kNumberSeconds;
      ok = ok && row_ok;
      os << id << "=" << (result.status == SearchStatus::Solved ? std::to_string(result.plan.size()) : "none")
         << (witness.status == SearchStatus::Unsolvable ? "" : "(not minimal)") << " ";
      runs.push_back({"number", id, std::move(result), &problem});
    }
    os << "slowest " << slowest << " s";
    rep.report(4, ok, os.str());
  }

  {  // 5: Grapevine G0 and BBL0 exact; the rest reported.
    std::ostringstream os;
    bool ok = true;
    for (const char* set : {"grapevine", "bbl"}) {
      auto& suite = suites.at(set);
      for (const auto& [id, problem] : suite.problems) {
        auto result = brfs(suite.loaded.domain, problem, *suite.loaded.model, options_for(problem));
        os << id << "=" << (result.status == SearchStatus::Solved ? std::to_string(result.plan.size())
                                                                  : status_name(result.status))
           << " ";
        if (id == "G0" || id == "BBL0") {
          ok = ok && result.status == SearchStatus::Solved && result.plan.size() == 1;
        }
        runs.push_back({set, id, std::move(result), &problem});
      }
    }
    rep.report(5, ok, os.str() + "(G0 and BBL0 must be 1)");
  }

  {  // 6: ternary values are sound with respect to complete semantics.
    std::mt19937_64 rng(606);
    std::size_t violations = 0;
    std::size_t decided = 0;
    for (std::size_t i = 0; i < kBridgeInstances; ++i) {
      const auto w = test::random_world(rng, {2, 1, 2, 3, true});
      const auto seq = w.random_sequence(rng, 1 + i % 3);
      Formula phi = w.random_literal(rng);
      if (i % 3 == 0) {
        phi = Formula::conjunction(phi, w.random_literal(rng));
      }
      const CompleteSemantics oracle(*w.signature, *w.model, kBridgeCeiling);
      const auto value = evaluate(*w.signature, *w.model, seq, phi);
      if (value == Ternary::True) {
        ++decided;
        violations += oracle.holds(seq, phi) ? 0 : 1;
      } else if (value == Ternary::False) {
        ++decided;
        violations += oracle.holds(seq, Formula::negation(phi)) ? 0 : 1;
      }
    }
    std::ostringstream os;
    os << kBridgeInstances << " instances, " << decided << " decided, " << violations << " violations";
    rep.report(6, violations == 0, os.str());
  }

  {  // 7: observation axioms and the mutation check.
    std::ostringstream os;
    bool ok = true;
    for (const char* set : {"number", "grapevine", "bbl"}) {
      const auto& loaded = suites.at(set).loaded;
      const auto report = check_axioms(*loaded.model, *loaded.domain.signature, kAxiomSamples, 77);
      ok = ok && report.ok() && report.samples >= kAxiomSamples;
      os << set << (report.ok() ? " ok" : " broken") << " (" << report.samples << " samples), ";
    }
    Signature sig;
    sig.add_agent("a", ValueDomain::booleans());
    const auto g = sig.add_variable("g", ValueDomain::booleans());
    const auto w = sig.add_variable("w", ValueDomain::booleans());
    const auto mutant = check_axioms(ContrarianModel(g, w), sig, kAxiomSamples, 77);
    ok = ok && !mutant.ok();
    os << "mutant " << (mutant.ok() ? "accepted" : "rejected");
    rep.report(7, ok, os.str());
  }

  {  // 8: CB <= EB over every suite.
    std::size_t checked = 0;
    std::size_t violations = 0;
    auto check = [&](Evaluator& ev, const StateSequence& seq, const Group& group, const Formula& phi) {
      ++checked;
      const auto cb = ev.eval(seq, Formula::group_modal(Modality::Believes, GroupMode::Common, group, phi));
      const auto eb = ev.eval(seq, Formula::group_modal(Modality::Believes, GroupMode::Uniform, group, phi));
      violations += cb <= eb ? 0 : 1;
    };
    std::mt19937_64 rng(808);
    for (const auto& inst : instances) {
      Evaluator ev(*inst.world.signature, *inst.world.model);
      check(ev, inst.seq, inst.world.everyone, inst.world.random_formula(rng, 2));
      check(ev, inst.seq, inst.world.random_group(rng), inst.world.random_atom(rng));
    }
    Evaluator number_ev(number.sig(), *number.model);
    for (const char* text : {"(< n 3)", "(= n 1)", "(= n 2)", "(B a (= n 2))", "(S b n)"}) {
      for (std::size_t t = 0; t < plan1.size(); ++t) {
        check(number_ev, plan1.slice(t), number.group, number.formula(text));
      }
    }
    for (const auto& run : runs) {
      if (!run.result.trace) {
        continue;
      }
      const auto& loaded = suites.at(run.set).loaded;
      const auto& sig = *loaded.domain.signature;
      Evaluator ev(sig, *loaded.model);
      const Group everyone(sig.agents());
      for (std::size_t t = 0; t < run.result.trace->size(); ++t) {
        const auto prefix = run.result.trace->slice(t);
        for (const auto& goal : run.problem->goals) {
          check(ev, prefix, everyone, goal.formula);
        }
      }
    }
    std::ostringstream os;
    os << checked << " comparisons, " << violations << " violations";
    rep.report(8, violations == 0, os.str());
  }

  {  // 9: common-belief iteration statistic across all benchmark runs.
    std::size_t worst = 0;
    std::ostringstream per_set;
    std::map<std::string, std::size_t> by_set;
    for (const auto& run : runs) {
      worst = std::max(worst, run.result.stats.eval.common_max);
      by_set[run.set] = std::max(by_set[run.set], run.result.stats.eval.common_max);
    }
    for (const auto& [set, value] : by_set) {
      per_set << (per_set.tellp() > 0 ? " " : "") << set << "=" << value;
    }
    std::ostringstream os;
    os << runs.size() << " runs, common max " << worst << " (" << per_set.str() << "), ceiling "
       << kCommonMaxCeiling;
    rep.report(9, worst <= kCommonMaxCeiling && !runs.empty(), os.str());
  }

  return rep.failures == 0 ? 0 : 1;
}
