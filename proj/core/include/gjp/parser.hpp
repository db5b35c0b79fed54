#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gjp/formula.hpp"
#include "gjp/planner.hpp"
#include "gjp/signature.hpp"
#include "gjp/state.hpp"

namespace gjp {

/// Parses a prefix s-expression formula, e.g. "(CB (a b) (< n 3))".
/// Errors carry 1-based line/column relative to `text` (offset by `line`).
Formula parse_formula(const Signature& signature, std::string_view text, std::size_t line = 1,
                      std::size_t column = 1);

/// Canonical s-expression rendering; parse_formula(print_formula(f)) == f.
std::string print_formula(const Signature& signature, const Formula& formula);

PlanningDomain parse_domain(std::string_view text);
Problem parse_problem(const PlanningDomain& domain, std::string_view text);

/// Either an action sequence to replay from an initial state, or explicit states.
struct Trace {
  std::optional<State> initial;
  std::vector<std::string> actions;
  std::vector<State> states;
};

Trace parse_trace(const PlanningDomain& domain, std::string_view text);

std::string read_file(const std::string& path);

}  // namespace gjp
