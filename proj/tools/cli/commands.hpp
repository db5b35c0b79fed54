#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gjp/planner.hpp"

namespace gjp::cli {

enum ExitCode : int { kOk = 0, kParseError = 2, kUnsolvable = 3, kInternalError = 4 };

/// One row of a run report; columns follow the benchmark table layout.
struct ReportRow {
  std::string id;
  std::string status;  // solved | unsolvable | limit | error
  std::size_t expanded = 0;
  std::size_t generated = 0;
  std::size_t common_max = 0;
  double common_avg = 0.0;
  std::size_t calls = 0;
  double avg_call_ms = 0.0;
  double total_s = 0.0;
  std::vector<std::string> plan;
  std::string goals;
  std::string error;
};

ReportRow make_row(const std::string& id, const PlanResult& result, const std::string& goals);
std::string describe_goals(const Signature& signature, const std::vector<Goal>& goals);

std::string tsv_header();
std::string tsv_row(const ReportRow& row);
std::string json_row(const ReportRow& row, int indent = -1);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gjp::cli
