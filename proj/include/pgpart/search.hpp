#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgpart/graph.hpp"
#include "pgpart/partition.hpp"

namespace pgpart {

enum class SearchStatus { found, exhausted_none, timeout };

std::string to_string(SearchStatus s);

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0: unlimited
  double max_seconds = 0.0;     // 0: unlimited
  /// Worker threads for the top-level fan-out. With one worker the witness
  /// is deterministic; with several only the status is.
  int workers = 1;
};

struct SearchResult {
  SearchStatus status = SearchStatus::timeout;
  int t = 0;
  std::optional<Partition> witness;
  std::uint64_t nodes_explored = 0;
  double wall_seconds = 0.0;
  /// FNV-1a digest of the annealer's accepted flips; 0 for exhaustive search.
  std::uint64_t trace_hash = 0;
  /// Restart that produced the witness (annealer only).
  int restart = -1;
};

/// Decides whether a t-internal partition exists by branch and bound.
/// Vertex v in class X may have at most floor((d(v) - 2t)/2) neighbours
/// outside X; a branch is cut as soon as an assigned vertex exceeds that or
/// an unassigned vertex can no longer join either class. Vertex 0 of the
/// branching order is fixed to class A.
SearchResult exhaustive_exists(const Graph& g, int t, const SearchBudget& budget = {});

struct MaxIntimacyResult {
  /// Largest t with a witness; empty when the scan hit its budget first.
  std::optional<int> intimacy;
  SearchResult result;
  std::vector<SearchResult> scan;
};

/// Scans t downward from `upper` (default floor(min degree / 2)) to
/// -ceil(max degree / 2) and stops at the first t with a witness.
MaxIntimacyResult exhaustive_max_intimacy(const Graph& g, const SearchBudget& budget = {},
                                          std::optional<int> upper = std::nullopt);

/// Plain enumeration of all 2^(n-1) assignments with vertex 0 in A.
/// Reference oracle for small graphs (n <= 24).
SearchResult brute_force_exists(const Graph& g, int t);

struct AnnealParams {
  std::uint64_t seed = 1;
  int restarts = 10;
  std::uint64_t steps_per_restart = 200000;
  double initial_temperature = 2.0;
  double final_temperature = 0.05;
  double max_seconds = 0.0;  // 0: unlimited
  /// Starting partition for every restart instead of a random one.
  std::optional<Partition> initial;
};

/// Simulated annealing on sum_v max(0, d(v) + 2t - 2 d_own(v)) with single
/// vertex flips. Never reports exhausted_none.
SearchResult anneal_search(const Graph& g, int t, const AnnealParams& params = {});

}  // namespace pgpart
