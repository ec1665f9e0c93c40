#include "pgpart/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace pgpart {

int Graph::min_degree() const {
  int d = std::numeric_limits<int>::max();
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return adj_.empty() ? 0 : d;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  g_.adj_.resize(n);
  g_.words_ = (static_cast<std::size_t>(n) + 63) / 64;
  g_.rows_.assign(g_.words_ * n, 0);
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  const int n = g_.size();
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (g_.adjacent(u, v)) throw std::invalid_argument("repeated edge");
  g_.adj_[u].push_back(v);
  g_.adj_[v].push_back(u);
  g_.rows_[static_cast<std::size_t>(u) * g_.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  g_.rows_[static_cast<std::size_t>(v) * g_.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++g_.edges_;
  return *this;
}

Graph GraphBuilder::build() && {
  for (auto& a : g_.adj_) std::sort(a.begin(), a.end());
  return std::move(g_);
}

int girth(const Graph& g) {
  const int n = g.size();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

bool is_bipartite(const Graph& g) {
  const int n = g.size();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace pgpart
