#include "pgpart/verify.hpp"

#include <algorithm>
#include <limits>

namespace pgpart {

std::optional<int> MarginReport::first_violation(int t) const {
  for (int v = 0; v < static_cast<int>(margin.size()); ++v)
    if (margin[v] < 2 * t) return v;
  return std::nullopt;
}

MarginReport margins(const Graph& g, const Partition& part) {
  if (part.size() != g.size()) throw PartitionError("partition size does not match graph");
  MarginReport r;
  const int n = g.size();
  r.margin.resize(n);
  r.own_degree.resize(n);
  r.min_margin_a = std::numeric_limits<int>::max();
  r.min_margin_b = std::numeric_limits<int>::max();
  for (int v = 0; v < n; ++v) {
    const Side s = part.side(v);
    int own = 0;
    for (int w : g.neighbors(v)) own += part.side(w) == s;
    r.own_degree[v] = own;
    r.margin[v] = 2 * own - g.degree(v);
    if (s == Side::A) {
      ++r.size_a;
      r.min_margin_a = std::min(r.min_margin_a, r.margin[v]);
    } else {
      ++r.size_b;
      r.min_margin_b = std::min(r.min_margin_b, r.margin[v]);
    }
  }
  r.partition_intimacy = floor_div(std::min(r.min_margin_a, r.min_margin_b), 2);
  return r;
}

bool is_internal(const Graph& g, const Partition& part) { return margins(g, part).partition_intimacy >= 0; }

bool is_strict(const Graph& g, const Partition& part) {
  const auto r = margins(g, part);
  return std::min(r.min_margin_a, r.min_margin_b) >= 1;
}

std::size_t cut_edges(const Graph& g, const Partition& part) {
  std::size_t cut = 0;
  for (int v = 0; v < g.size(); ++v)
    for (int w : g.neighbors(v))
      if (v < w && part.side(v) != part.side(w)) ++cut;
  return cut;
}

}  // namespace pgpart
