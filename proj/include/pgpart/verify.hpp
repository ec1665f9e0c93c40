#pragma once

#include <optional>
#include <vector>

#include "pgpart/graph.hpp"
#include "pgpart/partition.hpp"

namespace pgpart {

/// Floor division rounding toward negative infinity.
constexpr int floor_div(int a, int b) {
  const int q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

/// Per-vertex margins 2 d_own(v) - d(v) of a partition. A partition is
/// t-internal exactly when every margin is at least 2t, so the best t it
/// attains is floor(min margin / 2).
struct MarginReport {
  std::vector<int> margin;
  std::vector<int> own_degree;
  int size_a = 0;
  int size_b = 0;
  int min_margin_a = 0;
  int min_margin_b = 0;
  int partition_intimacy = 0;

  bool is_t_internal(int t) const { return partition_intimacy >= t; }
  /// First vertex whose margin falls below 2t, if any.
  std::optional<int> first_violation(int t) const;
};

MarginReport margins(const Graph& g, const Partition& part);
bool is_internal(const Graph& g, const Partition& part);
/// Every vertex has strictly more neighbours in its own class than outside.
bool is_strict(const Graph& g, const Partition& part);

/// Number of edges with one end in each class.
std::size_t cut_edges(const Graph& g, const Partition& part);

}  // namespace pgpart
