#pragma once

#include <string>
#include <vector>

#include "pgpart/io.hpp"

namespace pgpart {

/// One reproducible step: the CLI command that replays it, its parameters,
/// and the JSON it produced. Wall time is kept out of `output` so replays
/// compare byte for byte.
struct RunRecord {
  std::string command;
  Json parameters = Json::object();
  std::vector<int> modulus;
  Json output;
  double wall_seconds = 0.0;
};

Json run_record_to_json(const RunRecord& r);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::vector<RunRecord> records;
};

int acceptance_criterion_count();

/// Runs criterion `id` (1-based). Exceptions inside a check turn into a
/// failed result carrying the message.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_acceptance();

/// "PASS  3  <title> (0.01 s / limit 60 s): <detail>"
std::string format_result(const CriterionResult& r);

}  // namespace pgpart
