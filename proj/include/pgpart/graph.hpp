#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pgpart {

/// Simple undirected graph: sorted adjacency lists plus bitset rows for O(1)
/// adjacency queries. Immutable once built through GraphBuilder.
class Graph {
 public:
  Graph() = default;

  int size() const { return static_cast<int>(adj_.size()); }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  std::size_t edge_count() const { return edges_; }
  bool adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  int min_degree() const;
  int max_degree() const;
  bool is_regular() const { return size() == 0 || min_degree() == max_degree(); }

 private:
  friend class GraphBuilder;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> rows_;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  /// Adds the edge uv; loops and repeated edges are rejected.
  GraphBuilder& add_edge(int u, int v);
  Graph build() &&;

 private:
  Graph g_;
};

/// Length of a shortest cycle, or 0 for a forest.
int girth(const Graph& g);
bool is_bipartite(const Graph& g);

Graph complete_graph(int n);

}  // namespace pgpart
