#pragma once

#include <optional>
#include <string>

#include "pgpart/io.hpp"

namespace pgpart {

// Shared by the command-line front end and the acceptance runner, so a
// recorded command line replays to the same JSON.

struct ConstructRequest {
  std::string kind;  // baer | combinatorial | alg1mod4 | alg3mod4 | oval | even
  int q = 0;
  bool erase_units = false;   // alg1mod4, alg3mod4
  bool drop_point = false;    // combinatorial
  bool drop_line = false;     // combinatorial
  std::string variant = "interior";  // oval: interior | exterior
  std::optional<int> line;    // even: secant line index
};

struct ConstructOutcome {
  Partition partition;
  MarginReport report;
  Json document;  // partition plus "report"
};

/// Throws ConstructionError when q violates the construction's precondition
/// and std::invalid_argument for an unknown kind or variant.
ConstructOutcome run_construct(const ConstructRequest& req);
std::string command_line(const ConstructRequest& req);

struct SearchRequest {
  std::string method;  // exhaustive | anneal
  int q = 0;
  int t = 0;
  SearchBudget budget;
  AnnealParams anneal;
};

struct SearchOutcome {
  SearchResult result;
  Json document;
};

SearchOutcome run_search(const SearchRequest& req);
std::string command_line(const SearchRequest& req);

}  // namespace pgpart
