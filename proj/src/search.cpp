#include "pgpart/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "pgpart/verify.hpp"

namespace pgpart {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted_none: return "exhausted_none";
    case SearchStatus::timeout: return "timeout";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int allowed_outside(const Graph& g, int v, int t) { return floor_div(g.degree(v) - 2 * t, 2); }

// Greedy order: next vertex is the one with most already-ordered neighbours,
// ties broken by degree then index, so constraints close as early as possible.
std::vector<int> branching_order(const Graph& g) {
  const int n = g.size();
  std::vector<int> order, placed_nbrs(n, 0);
  std::vector<char> placed(n, 0);
  order.reserve(n);
  for (int k = 0; k < n; ++k) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
          (placed_nbrs[v] == placed_nbrs[best] && g.degree(v) > g.degree(best)))
        best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (int w : g.neighbors(best)) ++placed_nbrs[w];
  }
  return order;
}

struct SharedControl {
  Clock::time_point deadline;
  bool has_deadline = false;
  std::atomic<bool> stop{false};
};

enum class TaskOutcome { found, exhausted, budget };

// One worker's private search state.
class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, int t, const std::vector<int>& order, std::uint64_t node_cap,
                 SharedControl& control)
      : g_(g), order_(order), node_cap_(node_cap), control_(control) {
    const int n = g.size();
    cap_.resize(n);
    for (int v = 0; v < n; ++v) cap_[v] = allowed_outside(g, v, t);
    side_.assign(n, -1);
    cnt_.assign(2 * static_cast<std::size_t>(n), 0);
  }

  /// Runs the subtree below a fixed assignment of the first prefix.size() vertices.
  TaskOutcome run(const std::vector<int>& prefix) {
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      if (!assign(order_[k], prefix[k])) return TaskOutcome::exhausted;
    }
    return dfs(prefix.size());
  }

  std::uint64_t nodes() const { return nodes_; }
  std::vector<Side> witness() const {
    std::vector<Side> s(side_.size());
    for (std::size_t v = 0; v < s.size(); ++v) s[v] = side_[v] == 0 ? Side::A : Side::B;
    return s;
  }

 private:
  int& cnt(int v, int s) { return cnt_[2 * static_cast<std::size_t>(v) + s]; }

  // Places v in class s and reports whether the constraints still hold.
  bool assign(int v, int s) {
    ++nodes_;
    side_[v] = s;
    if (s == 1) ++b_count_;
    for (int w : g_.neighbors(v)) ++cnt(w, s);
    bool ok = cnt(v, 1 - s) <= cap_[v];
    for (int w : g_.neighbors(v)) {
      if (!ok) break;
      if (side_[w] < 0) {
        ok = cnt(w, 1) <= cap_[w] || cnt(w, 0) <= cap_[w];
      } else if (side_[w] != s) {
        ok = cnt(w, s) <= cap_[w];
      }
    }
    return ok;
  }

  void unassign(int v) {
    const int s = side_[v];
    for (int w : g_.neighbors(v)) --cnt(w, s);
    if (s == 1) --b_count_;
    side_[v] = -1;
  }

  TaskOutcome dfs(std::size_t depth) {
    if (depth == order_.size()) return b_count_ > 0 ? TaskOutcome::found : TaskOutcome::exhausted;
    if ((nodes_ & 1023) == 0) {
      if (control_.stop.load(std::memory_order_relaxed)) return TaskOutcome::budget;
      if (control_.has_deadline && Clock::now() > control_.deadline) return TaskOutcome::budget;
    }
    if (node_cap_ != 0 && nodes_ >= node_cap_) return TaskOutcome::budget;
    const int v = order_[depth];
    // When no vertex is in B yet, only B remains possible for the last vertex.
    for (int s = 0; s < 2; ++s) {
      if (depth + 1 == order_.size() && s == 0 && b_count_ == 0) continue;
      const bool ok = assign(v, s);
      if (ok) {
        const auto r = dfs(depth + 1);
        if (r != TaskOutcome::exhausted) {
          if (r == TaskOutcome::budget) unassign(v);
          return r;
        }
      }
      unassign(v);
    }
    return TaskOutcome::exhausted;
  }

  const Graph& g_;
  const std::vector<int>& order_;
  std::uint64_t node_cap_;
  SharedControl& control_;
  std::vector<int> cap_;
  std::vector<int> side_;
  std::vector<int> cnt_;
  int b_count_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult exhaustive_exists(const Graph& g, int t, const SearchBudget& budget) {
  const auto start = Clock::now();
  SearchResult result;
  result.t = t;
  const int n = g.size();
  if (n < 2) {
    result.status = SearchStatus::exhausted_none;
    return result;
  }
  for (int v = 0; v < n; ++v) {
    if (allowed_outside(g, v, t) < 0) {
      result.status = SearchStatus::exhausted_none;
      result.wall_seconds = seconds_since(start);
      return result;
    }
  }

  const auto order = branching_order(g);
  // Vertex order[0] is fixed to A; the next two levels fan out into tasks.
  const int fan = std::min(2, n - 1);
  std::vector<std::vector<int>> tasks;
  for (int mask = 0; mask < (1 << fan); ++mask) {
    std::vector<int> prefix{0};
    for (int k = 0; k < fan; ++k) prefix.push_back((mask >> k) & 1);
    tasks.push_back(std::move(prefix));
  }
  const std::uint64_t per_task = budget.max_nodes == 0 ? 0 : std::max<std::uint64_t>(1, budget.max_nodes / tasks.size());

  SharedControl control;
  if (budget.max_seconds > 0) {
    control.has_deadline = true;
    control.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.max_seconds));
  }

  struct TaskResult {
    TaskOutcome outcome = TaskOutcome::exhausted;
    std::uint64_t nodes = 0;
    std::vector<Side> witness;
    bool ran = false;
  };
  std::vector<TaskResult> results(tasks.size());

  const auto run_task = [&](std::size_t k) {
    BranchAndBound bb(g, t, order, per_task, control);
    auto& r = results[k];
    r.outcome = bb.run(tasks[k]);
    r.nodes = bb.nodes();
    r.ran = true;
    if (r.outcome == TaskOutcome::found) {
      r.witness = bb.witness();
      control.stop.store(true);
    }
  };

  const int workers = std::max(1, std::min<int>(budget.workers, static_cast<int>(tasks.size())));
  if (workers == 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) {
      run_task(k);
      if (results[k].outcome == TaskOutcome::found) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
          if (control.stop.load()) break;
          run_task(k);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Merge: any witness wins; otherwise every task must have been exhausted.
  bool all_exhausted = true;
  for (const auto& r : results) {
    result.nodes_explored += r.nodes;
    if (r.outcome == TaskOutcome::found && !result.witness) result.witness = Partition(r.witness);
    if (!r.ran || r.outcome != TaskOutcome::exhausted) all_exhausted = false;
  }
  if (result.witness) {
    if (!margins(g, *result.witness).is_t_internal(t))
      throw std::logic_error("branch and bound produced an invalid witness");
    result.status = SearchStatus::found;
  } else {
    result.status = all_exhausted ? SearchStatus::exhausted_none : SearchStatus::timeout;
  }
  result.wall_seconds = seconds_since(start);
  return result;
}

MaxIntimacyResult exhaustive_max_intimacy(const Graph& g, const SearchBudget& budget, std::optional<int> upper) {
  if (g.size() < 2) throw std::invalid_argument("intimacy needs at least two vertices");
  MaxIntimacyResult out;
  const int hi = upper.value_or(floor_div(g.min_degree(), 2));
  const int lo = -((g.max_degree() + 1) / 2);
  for (int t = hi; t >= lo; --t) {
    auto r = exhaustive_exists(g, t, budget);
    out.scan.push_back(r);
    if (r.status == SearchStatus::found) {
      out.intimacy = t;
      out.result = std::move(r);
      return out;
    }
    if (r.status == SearchStatus::timeout) {
      out.result = std::move(r);
      return out;
    }
  }
  // Any partition into nonempty classes is (-ceil(d/2))-internal, so this is unreachable.
  throw std::logic_error("intimacy scan found no partition at its lower end");
}

SearchResult brute_force_exists(const Graph& g, int t) {
  const auto start = Clock::now();
  const int n = g.size();
  if (n > 24) throw std::invalid_argument("brute force limited to 24 vertices");
  SearchResult result;
  result.t = t;
  result.status = SearchStatus::exhausted_none;
  if (n < 2) return result;
  std::vector<Side> sides(n);
  for (std::uint32_t mask = 1; mask < (1U << (n - 1)); ++mask) {
    ++result.nodes_explored;
    sides[0] = Side::A;
    for (int v = 1; v < n; ++v) sides[v] = ((mask >> (v - 1)) & 1) ? Side::B : Side::A;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      int own = 0;
      for (int w = 0; w < n; ++w)
        if (g.adjacent(v, w) && sides[w] == sides[v]) ++own;
      ok = 2 * own >= g.degree(v) + 2 * t;
    }
    if (ok) {
      result.status = SearchStatus::found;
      result.witness = Partition(sides);
      break;
    }
  }
  result.wall_seconds = seconds_since(start);
  return result;
}

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t x) {
  for (int b = 0; b < 8; ++b) {
    h ^= (x >> (8 * b)) & 0xFF;
    h *= kFnvPrime;
  }
  return h;
}

// Portable draws from the raw engine output.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
int index_draw(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

}  // namespace

SearchResult anneal_search(const Graph& g, int t, const AnnealParams& params) {
  const auto start = Clock::now();
  const int n = g.size();
  SearchResult result;
  result.t = t;
  result.status = SearchStatus::timeout;
  result.trace_hash = kFnvOffset;
  if (n < 2) return result;
  if (params.initial && params.initial->size() != n) throw std::invalid_argument("initial partition size mismatch");

  std::mt19937_64 rng(params.seed);
  std::vector<int> side(n), own(n);
  const auto penalty = [&](int v, int own_v) { return std::max(0, g.degree(v) + 2 * t - 2 * own_v); };

  for (int restart = 0; restart < params.restarts; ++restart) {
    int count[2] = {0, 0};
    if (params.initial) {
      for (int v = 0; v < n; ++v) side[v] = params.initial->side(v) == Side::A ? 0 : 1;
    } else {
      for (int v = 0; v < n; ++v) side[v] = static_cast<int>(rng() & 1);
    }
    for (int v = 0; v < n; ++v) ++count[side[v]];
    if (count[0] == 0 || count[1] == 0) {
      const int v = index_draw(rng, n);
      --count[side[v]];
      side[v] = 1 - side[v];
      ++count[side[v]];
    }
    long long objective = 0;
    for (int v = 0; v < n; ++v) {
      own[v] = 0;
      for (int w : g.neighbors(v)) own[v] += side[w] == side[v];
      objective += penalty(v, own[v]);
    }

    const double ratio = params.final_temperature / params.initial_temperature;
    const std::uint64_t steps = params.steps_per_restart;
    for (std::uint64_t step = 0; step < steps && objective > 0; ++step) {
      ++result.nodes_explored;
      if (params.max_seconds > 0 && (step & 4095) == 0 && seconds_since(start) > params.max_seconds) {
        restart = params.restarts;
        break;
      }
      const int v = index_draw(rng, n);
      if (count[side[v]] == 1) continue;
      const int d = g.degree(v);
      long long delta = penalty(v, d - own[v]) - penalty(v, own[v]);
      for (int w : g.neighbors(v)) {
        const int nw = side[w] == side[v] ? own[w] - 1 : own[w] + 1;
        delta += penalty(w, nw) - penalty(w, own[w]);
      }
      const double temp = params.initial_temperature * std::pow(ratio, static_cast<double>(step) / static_cast<double>(steps));
      if (delta > 0 && unit_draw(rng) >= std::exp(-static_cast<double>(delta) / temp)) continue;

      for (int w : g.neighbors(v)) own[w] += side[w] == side[v] ? -1 : 1;
      own[v] = d - own[v];
      --count[side[v]];
      side[v] = 1 - side[v];
      ++count[side[v]];
      objective += delta;
      result.trace_hash = fnv_mix(result.trace_hash, (static_cast<std::uint64_t>(restart) << 32) | static_cast<std::uint32_t>(v));
    }

    if (objective == 0) {
      std::vector<Side> s(n);
      for (int v = 0; v < n; ++v) s[v] = side[v] == 0 ? Side::A : Side::B;
      Partition witness(std::move(s));
      if (!margins(g, witness).is_t_internal(t)) throw std::logic_error("annealer objective disagrees with margins");
      result.witness = std::move(witness);
      result.status = SearchStatus::found;
      result.restart = restart;
      break;
    }
  }
  result.wall_seconds = seconds_since(start);
  return result;
}

}  // namespace pgpart
