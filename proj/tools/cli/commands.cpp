#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "gjp/domains.hpp"
#include "gjp/error.hpp"
#include "gjp/parser.hpp"
#include "gjp/perspectives.hpp"
#include "gjp/semantics.hpp"

#ifndef GJP_DATA_DIR
#define GJP_DATA_DIR "data"
#endif

namespace gjp::cli {

namespace fs = std::filesystem;

namespace {

std::string status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::Solved:
      return "solved";
    case SearchStatus::Unsolvable:
      return "unsolvable";
    case SearchStatus::LimitReached:
      return "limit";
  }
  return "error";
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) {
      out += sep;
    }
    out += items[i];
  }
  return out;
}

struct Loaded {
  PlanningDomain domain;
  std::unique_ptr<ObservationModel> model;
};

Loaded load_domain(const std::string& path) {
  Loaded l{parse_domain(read_file(path)), nullptr};
  l.model = ModelRegistry::builtin().create(l.domain.observation, *l.domain.signature, l.domain.model_params);
  return l;
}

// Runs `fn`, mapping library exceptions onto exit codes.
template <class Fn>
int guarded(std::ostream& err, const std::string& context, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << context << ":" << e.line() << ":" << e.column() << ": parse error: " << e.reason() << "\n";
    return kParseError;
  } catch (const ValidationError& e) {
    err << context << ": invalid input: " << e.what() << "\n";
    return kParseError;
  } catch (const FileError& e) {
    err << context << ": " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << context << ": internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

SearchOptions options_for(const Problem& problem, std::optional<std::size_t> max_depth,
                          std::optional<std::size_t> node_limit) {
  SearchOptions options;
  options.max_depth = max_depth.value_or(problem.max_depth.value_or(options.max_depth));
  options.node_limit = node_limit.value_or(problem.node_limit.value_or(0));
  return options;
}

ReportRow solve_one(const std::string& id, const Loaded& loaded, const Problem& problem,
                    std::optional<std::size_t> max_depth, std::optional<std::size_t> node_limit) {
  const auto result = brfs(loaded.domain, problem, *loaded.model, options_for(problem, max_depth, node_limit));
  return make_row(id, result, describe_goals(*loaded.domain.signature, problem.goals));
}

std::string natural_key(const std::string& name) {
  // Pads the trailing number so N10 sorts after N9.
  std::size_t digits = name.size();
  while (digits > 0 && std::isdigit(static_cast<unsigned char>(name[digits - 1])) != 0) {
    --digits;
  }
  return name.substr(0, digits) + std::string(8 - std::min<std::size_t>(8, name.size() - digits), '0') +
         name.substr(digits);
}

std::vector<fs::path> instances(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".gjp" && entry.path().filename() != "domain.gjp") {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end(), [](const fs::path& a, const fs::path& b) {
    return natural_key(a.stem().string()) < natural_key(b.stem().string());
  });
  return out;
}

int cmd_solve(const std::string& domain_path, const std::string& problem_path, const std::string& format,
              std::optional<std::size_t> max_depth, std::optional<std::size_t> node_limit, std::ostream& out,
              std::ostream& err) {
  Loaded loaded;
  Problem problem;
  if (int rc = guarded(err, domain_path, [&] {
        loaded = load_domain(domain_path);
        return kOk;
      });
      rc != kOk) {
    return rc;
  }
  if (int rc = guarded(err, problem_path, [&] {
        problem = parse_problem(loaded.domain, read_file(problem_path));
        return kOk;
      });
      rc != kOk) {
    return rc;
  }
  return guarded(err, problem_path, [&] {
    const ReportRow row = solve_one(problem.name, loaded, problem, max_depth, node_limit);
    if (format == "json") {
      out << json_row(row, 2) << "\n";
    } else {
      out << "status\t" << row.status << "\n";
      out << "plan\t" << (row.status == "solved" ? join(row.plan, ",") : "UNSOLVABLE") << "\n";
      out << tsv_header() << "\n" << tsv_row(row) << "\n";
    }
    return row.status == "solved" ? kOk : kUnsolvable;
  });
}

int cmd_eval(const std::string& domain_path, const std::string& trace_path, const std::string& formula_text,
             bool explain, std::ostream& out, std::ostream& err) {
  Loaded loaded;
  Trace trace;
  if (int rc = guarded(err, domain_path, [&] {
        loaded = load_domain(domain_path);
        return kOk;
      });
      rc != kOk) {
    return rc;
  }
  if (int rc = guarded(err, trace_path, [&] {
        trace = parse_trace(loaded.domain, read_file(trace_path));
        return kOk;
      });
      rc != kOk) {
    return rc;
  }
  Formula formula = Formula::atom(Relation::Eq, VarId{}, Value{});
  if (int rc = guarded(err, "formula", [&] {
        formula = parse_formula(*loaded.domain.signature, formula_text);
        return kOk;
      });
      rc != kOk) {
    return rc;
  }
  return guarded(err, trace_path, [&] {
    const Signature& sig = *loaded.domain.signature;
    const StateSequence seq = trace.states.empty()
                                  ? replay(loaded.domain, *trace.initial, *loaded.model, trace.actions)
                                  : StateSequence(trace.states);
    Evaluator evaluator(sig, *loaded.model);
    out << to_string(evaluator.eval(seq, formula)) << "\n";
    if (explain) {
      out << "sequence\t" << format_sequence(sig, seq) << "\n";
      for (auto agent : sig.agents()) {
        out << "f_" << sig.agent_name(agent) << "\t"
            << format_sequence(sig, justified_perspective(*loaded.model, agent, seq)) << "\n";
      }
      PerspectiveSet seed;
      seed.insert(seq);
      const auto common = common_perspectives(*loaded.model, Group(sig.agents()), seed);
      out << "cf\titerations=" << common.stats.iterations << " size=" << common.stats.final_size << "\n";
      for (const auto& w : common.perspectives) {
        out << "cf\t" << format_sequence(sig, w) << "\n";
      }
    }
    return kOk;
  });
}

int cmd_bench(const std::vector<std::string>& sets, const std::string& format, const std::string& data_dir,
              std::optional<std::size_t> max_depth, std::optional<std::size_t> node_limit, std::ostream& out,
              std::ostream& err) {
  std::vector<ReportRow> rows;
  for (const auto& set : sets) {
    const fs::path dir = fs::path(data_dir) / set;
    const std::string domain_path = (dir / "domain.gjp").string();
    Loaded loaded;
    if (guarded(err, domain_path, [&] {
          loaded = load_domain(domain_path);
          return kOk;
        }) != kOk) {
      rows.push_back(ReportRow{set, "error", 0, 0, 0, 0, 0, 0, 0, {}, "", "domain failed to load"});
      continue;
    }
    for (const auto& path : instances(dir)) {
      const std::string id = path.stem().string();
      ReportRow row{id, "error", 0, 0, 0, 0, 0, 0, 0, {}, "", ""};
      std::ostringstream problems;
      guarded(problems, path.string(), [&] {
        const Problem problem = parse_problem(loaded.domain, read_file(path.string()));
        row = solve_one(id, loaded, problem, max_depth, node_limit);
        return kOk;
      });
      if (!problems.str().empty()) {
        row.error = problems.str();
        err << problems.str();
      }
      rows.push_back(std::move(row));
      if (format != "json") {
        out << (rows.size() == 1 ? tsv_header() + "\n" : "") << tsv_row(rows.back()) << "\n" << std::flush;
      }
    }
  }
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& row : rows) {
      doc.push_back(nlohmann::json::parse(json_row(row)));
    }
    out << doc.dump(2) << "\n";
  }
  return kOk;
}

}  // namespace

std::string describe_goals(const Signature& signature, const std::vector<Goal>& goals) {
  std::vector<std::string> parts;
  for (const auto& goal : goals) {
    std::string text = print_formula(signature, goal.formula);
    if (goal.target != Ternary::True) {
      text += " -> ";
      text += to_string(goal.target);
    }
    parts.push_back(std::move(text));
  }
  return join(parts, " ; ");
}

ReportRow make_row(const std::string& id, const PlanResult& result, const std::string& goals) {
  ReportRow row;
  row.id = id;
  row.status = status_name(result.status);
  row.expanded = result.stats.expanded;
  row.generated = result.stats.generated;
  row.common_max = result.stats.eval.common_max;
  row.common_avg = result.stats.eval.common_avg();
  row.calls = result.stats.eval.external_calls;
  row.avg_call_ms = result.stats.eval.avg_call_ms();
  row.total_s = std::chrono::duration<double>(result.stats.total_time).count();
  row.plan = result.plan;
  row.goals = goals;
  return row;
}

std::string tsv_header() {
  return "id\texpanded\tgenerated\tcommon_max\tcommon_avg\tcalls\tavg_call_ms\ttotal_s\tplan_length\tgoals";
}

std::string tsv_row(const ReportRow& row) {
  const std::string length = row.status == "solved" ? std::to_string(row.plan.size()) : row.status;
  return row.id + "\t" + std::to_string(row.expanded) + "\t" + std::to_string(row.generated) + "\t" +
         std::to_string(row.common_max) + "\t" + fixed(row.common_avg, 3) + "\t" + std::to_string(row.calls) +
         "\t" + fixed(row.avg_call_ms, 3) + "\t" + fixed(row.total_s, 3) + "\t" + length + "\t" + row.goals;
}

std::string json_row(const ReportRow& row, int indent) {
  nlohmann::json j{
      {"id", row.id},
      {"status", row.status},
      {"expanded", row.expanded},
      {"generated", row.generated},
      {"common_max", row.common_max},
      {"common_avg", row.common_avg},
      {"calls", row.calls},
      {"avg_call_ms", row.avg_call_ms},
      {"total_s", row.total_s},
      {"plan_length", row.status == "solved" ? nlohmann::json(row.plan.size()) : nlohmann::json(nullptr)},
      {"plan", row.plan},
      {"goals", row.goals},
  };
  if (!row.error.empty()) {
    j["error"] = row.error;
  }
  return j.dump(indent);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group justified perspective planner and evaluator", "gjp"};
  app.require_subcommand(1);

  std::string format = "tsv";
  std::string domain_path;
  std::string second_path;
  std::string formula_text;
  std::optional<std::size_t> max_depth;
  std::optional<std::size_t> node_limit;
  std::uint64_t seed = 0;
  bool explain = false;
  std::vector<std::string> sets;
  std::string data_dir = GJP_DATA_DIR;

  auto* solve = app.add_subcommand("solve", "Find a shortest plan for a problem");
  solve->add_option("domain", domain_path, "Domain file")->required();
  solve->add_option("problem", second_path, "Problem file")->required();
  solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  solve->add_option("--max-depth", max_depth, "Depth bound (default 12 or the problem's max-depth)");
  solve->add_option("--node-limit", node_limit, "Stop after generating this many nodes");
  solve->add_option("--seed", seed, "Accepted for harness uniformity; search is deterministic");

  auto* eval = app.add_subcommand("eval", "Evaluate a formula on a trace");
  eval->add_option("domain", domain_path, "Domain file")->required();
  eval->add_option("trace", second_path, "Trace file")->required();
  eval->add_option("formula", formula_text, "Formula, e.g. \"(CB (a b) (< n 3))\"")->required();
  eval->add_flag("--explain", explain, "Print the perspectives behind the value");

  auto* bench = app.add_subcommand("bench", "Run shipped benchmark instances");
  bench->add_option("set", sets, "number, grapevine, bbl or all")
      ->required()
      ->check(CLI::IsMember({"number", "grapevine", "bbl", "all"}));
  bench->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  bench->add_option("--data-dir", data_dir, "Directory holding the instance sets");
  bench->add_option("--max-depth", max_depth, "Override every instance's depth bound");
  bench->add_option("--node-limit", node_limit, "Override every instance's node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kParseError;
  }

  if (*solve) {
    return cmd_solve(domain_path, second_path, format, max_depth, node_limit, out, err);
  }
  if (*eval) {
    return cmd_eval(domain_path, second_path, formula_text, explain, out, err);
  }
  if (std::find(sets.begin(), sets.end(), "all") != sets.end()) {
    sets = {"number", "grapevine", "bbl"};
  }
  return cmd_bench(sets, format, data_dir, max_depth, node_limit, out, err);
}

}  // namespace gjp::cli
