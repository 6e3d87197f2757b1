#include "ocvx/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace ocvx {
namespace {

using Clock = std::chrono::steady_clock;

struct SearchSpace {
  const IntervalOperator* op = nullptr;
  Parameter parameter = Parameter::Hull;
  VertexSet base;
  std::vector<Vertex> pool;
  const ForcedConstraints* constraints = nullptr;
  bool incremental = false;      // reuse prefix hull/interval along the DFS
  bool prune_absorbed = false;   // hull only
  std::optional<Clock::time_point> deadline;
};

bool satisfied(const SearchSpace& space, const VertexSet& s) {
  return space.parameter == Parameter::Hull ? space.op->is_hull_set(s)
                                            : space.op->is_interval_set(s);
}

// Depth-first enumeration of k-subsets of the pool in lexicographic order of
// pool positions. One instance per worker; the worker owns the first-level
// positions congruent to `offset` modulo `stride`.
class Enumerator {
 public:
  Enumerator(const SearchSpace& space, std::size_t k, std::size_t offset,
             std::size_t stride, std::atomic<std::size_t>& best_first)
      : space_(space), k_(k), offset_(offset), stride_(stride), best_first_(best_first) {
    const std::size_t n = space.op->n();
    chosen_.assign(k + 1, VertexSet(n));
    picks_.assign(k, 0);
    state_.assign(k + 1, VertexSet(n));
    chosen_[0] = space.base;
    if (space.incremental) {
      state_[0] = space.parameter == Parameter::Hull ? space.op->hull(space.base)
                                                     : space.op->interval(space.base);
    }
    if (space.constraints != nullptr) {
      const auto& families = space.constraints->hit_families;
      std::vector<std::size_t> position(n, 0);
      for (std::size_t p = 0; p < space.pool.size(); ++p) position[space.pool[p]] = p;
      for (const auto& family : families) {
        if (family.intersects(space.base)) continue;
        std::size_t last = 0;
        family.for_each([&](Vertex v) { last = std::max(last, position[v]); });
        open_families_.push_back({&family, last});
      }
    }
  }

  /// First success with first-level position owned by this worker.
  std::optional<std::pair<std::size_t, VertexSet>> run() {
    if (k_ == 0) {
      if (leaf(0)) return std::pair{std::size_t{0}, chosen_[0]};
      return std::nullopt;
    }
    const std::size_t limit = space_.pool.size() - k_;
    for (std::size_t p = offset_; p <= limit; p += stride_) {
      if (p > best_first_.load(std::memory_order_relaxed)) break;
      if (descend(0, p) && dfs(1, p + 1)) {
        std::size_t cur = best_first_.load();
        while (p < cur && !best_first_.compare_exchange_weak(cur, p)) {
        }
        return std::pair{p, chosen_[k_]};
      }
    }
    return std::nullopt;
  }

  SolveStats stats;

 private:
  struct OpenFamily {
    const VertexSet* members;
    std::size_t last_position;
  };

  // Places pool[p] at `depth`; false if the branch is pruned.
  bool descend(std::size_t depth, std::size_t p) {
    const Vertex c = space_.pool[p];
    if (space_.prune_absorbed && state_[depth].contains(c)) return false;
    chosen_[depth + 1] = chosen_[depth];
    chosen_[depth + 1].insert(c);
    picks_[depth] = c;
    if (!families_reachable(chosen_[depth + 1], p + 1, k_ - depth - 1)) return false;
    if (space_.incremental && depth + 1 < k_) {
      advance_state(depth, c);
    }
    return true;
  }

  void advance_state(std::size_t depth, Vertex c) {
    state_[depth + 1] = state_[depth];
    VertexSet single(space_.op->n());
    single.insert(c);
    if (space_.parameter == Parameter::Hull) {
      space_.op->extend_hull(state_[depth + 1], single);
    } else {
      space_.op->extend_interval(state_[depth + 1], chosen_[depth], single);
    }
  }

  bool families_reachable(const VertexSet& chosen, std::size_t next_position,
                          std::size_t slots) const {
    std::size_t unhit = 0;
    for (const auto& f : open_families_) {
      if (f.members->intersects(chosen)) continue;
      if (f.last_position < next_position) return false;
      if (++unhit > slots) return false;  // families are disjoint
    }
    return true;
  }

  bool dfs(std::size_t depth, std::size_t start) {
    if (depth == k_) return leaf(depth);
    const std::size_t remaining = k_ - depth;
    for (std::size_t p = start; p + remaining <= space_.pool.size(); ++p) {
      if (descend(depth, p) && dfs(depth + 1, p + 1)) return true;
    }
    return false;
  }

  bool leaf(std::size_t depth) {
    ++stats.subsets_examined;
    if ((stats.subsets_examined & 1023) == 0 && space_.deadline &&
        Clock::now() > *space_.deadline) {
      throw TimeoutError(0);
    }
    const VertexSet& s = chosen_[depth];
    if (space_.constraints != nullptr && !space_.constraints->admits(s)) return false;
    ++stats.hull_evaluations;
    if (space_.incremental && depth > 0) {
      // Finish the last step from the stored prefix state.
      advance_state(depth - 1, picks_[depth - 1]);
      return state_[depth].is_full();
    }
    if (space_.incremental) return state_[0].is_full();
    return satisfied(space_, s);
  }

  const SearchSpace& space_;
  std::size_t k_;
  std::size_t offset_;
  std::size_t stride_;
  std::atomic<std::size_t>& best_first_;
  std::vector<VertexSet> chosen_;
  std::vector<VertexSet> state_;
  std::vector<Vertex> picks_;
  std::vector<OpenFamily> open_families_;
};

std::optional<VertexSet> search_cardinality(const SearchSpace& space, std::size_t k,
                                            unsigned jobs, SolveStats& stats) {
  if (k > space.pool.size()) return std::nullopt;
  std::atomic<std::size_t> best_first{std::numeric_limits<std::size_t>::max()};
  const std::size_t workers =
      k == 0 ? 1 : std::clamp<std::size_t>(jobs, 1, space.pool.size() - k + 1);

  if (workers == 1) {
    Enumerator e(space, k, 0, 1, best_first);
    auto found = e.run();
    stats.subsets_examined += e.stats.subsets_examined;
    stats.hull_evaluations += e.stats.hull_evaluations;
    if (found) return std::move(found->second);
    return std::nullopt;
  }

  std::vector<std::optional<std::pair<std::size_t, VertexSet>>> results(workers);
  std::vector<SolveStats> worker_stats(workers);
  std::atomic<bool> timed_out{false};
  {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        Enumerator e(space, k, w, workers, best_first);
        try {
          results[w] = e.run();
        } catch (const TimeoutError&) {
          timed_out = true;
        }
        worker_stats[w] = e.stats;
      });
    }
  }
  for (const auto& ws : worker_stats) {
    stats.subsets_examined += ws.subsets_examined;
    stats.hull_evaluations += ws.hull_evaluations;
  }
  if (timed_out) throw TimeoutError(0);
  std::optional<std::pair<std::size_t, VertexSet>> best;
  for (auto& r : results) {
    if (r && (!best || r->first < best->first)) best = std::move(r);
  }
  if (best) return std::move(best->second);
  return std::nullopt;
}

SolveResult finish(VertexSet witness, ConvexityKind kind, Parameter parameter,
                   SolveStats stats, Clock::time_point start) {
  stats.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  SolveResult r;
  r.value = witness.size();
  r.witness = std::move(witness);
  r.kind = kind;
  r.parameter = parameter;
  r.stats = stats;
  return r;
}

// Runs cardinalities from..to, translating worker timeouts into a lower bound.
std::optional<VertexSet> search_range(const SearchSpace& space, std::size_t from,
                                      std::size_t to, unsigned jobs,
                                      SolveStats& stats) {
  for (std::size_t k = from; k <= to; ++k) {
    try {
      if (auto found = search_cardinality(space, k, jobs, stats)) return found;
    } catch (const TimeoutError&) {
      throw TimeoutError(space.base.size() + k);
    }
  }
  return std::nullopt;
}

SearchSpace brute_space(const IntervalOperator& op, Parameter parameter,
                        const SolveOptions& options) {
  SearchSpace space;
  space.op = &op;
  space.parameter = parameter;
  space.base = VertexSet(op.n());
  for (Vertex v = 0; v < op.n(); ++v) space.pool.push_back(v);
  space.deadline = options.deadline;
  return space;
}

std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (r > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(r + 0.5L);
}

}  // namespace

std::string_view to_string(Parameter parameter) {
  return parameter == Parameter::Hull ? "hull" : "interval";
}

std::optional<Parameter> parse_parameter(std::string_view name) {
  if (name == "hull") return Parameter::Hull;
  if (name == "interval") return Parameter::Interval;
  return std::nullopt;
}

SolveResult brute_min(const OrientedGraph& graph, ConvexityKind kind,
                      Parameter parameter, const SolveOptions& options) {
  if (graph.n() > options.oracle_cap) {
    throw Error(ErrorCode::OracleCapExceeded,
                std::to_string(graph.n()) + " vertices exceed the oracle cap of " +
                    std::to_string(options.oracle_cap));
  }
  const auto start = Clock::now();
  const IntervalOperator op(graph, kind);
  const SearchSpace space = brute_space(op, parameter, options);
  SolveStats stats;
  auto found = search_range(space, 0, graph.n(), options.jobs, stats);
  // V itself always qualifies, so the search cannot come back empty.
  return finish(std::move(*found), kind, parameter, stats, start);
}

std::optional<VertexSet> brute_find(const OrientedGraph& graph, ConvexityKind kind,
                                    Parameter parameter, std::size_t max_size,
                                    const SolveOptions& options) {
  const IntervalOperator op(graph, kind);
  const SearchSpace space = brute_space(op, parameter, options);
  SolveStats stats;
  return search_range(space, 0, std::min(max_size, graph.n()), options.jobs, stats);
}

SolveResult solve_min(const OrientedGraph& graph, ConvexityKind kind,
                      Parameter parameter, const SolveOptions& options) {
  const auto start = Clock::now();
  const IntervalOperator op(graph, kind);
  const ForcedConstraints constraints = forced_constraints(graph, kind);

  SearchSpace space;
  space.op = &op;
  space.parameter = parameter;
  space.base = constraints.forced;
  space.constraints = &constraints;
  space.incremental = true;
  space.prune_absorbed = parameter == Parameter::Hull;
  space.deadline = options.deadline;
  for (Vertex v = 0; v < graph.n(); ++v) {
    if (!constraints.forced.contains(v)) space.pool.push_back(v);
  }
  std::stable_sort(space.pool.begin(), space.pool.end(), [&](Vertex a, Vertex b) {
    return graph.degree(a) > graph.degree(b);
  });

  SolveStats stats;
  auto found = search_range(space, 0, space.pool.size(), options.jobs, stats);
  return finish(std::move(*found), kind, parameter, stats, start);
}

bool verify_minimum(const OrientedGraph& graph, ConvexityKind kind,
                    Parameter parameter, const SolveResult& claimed,
                    const SolveOptions& options) {
  if (claimed.kind != kind || claimed.parameter != parameter) return false;
  if (claimed.witness.domain() != graph.n()) return false;
  if (claimed.witness.size() != claimed.value || claimed.value == 0) return false;

  const IntervalOperator op(graph, kind);
  const bool valid = parameter == Parameter::Hull
                         ? op.is_hull_set(claimed.witness)
                         : op.is_interval_set(claimed.witness);
  if (!valid) return false;

  // Both predicates are upward closed and so is the admissible space, so
  // refuting cardinality value - 1 refutes everything smaller.
  const ForcedConstraints constraints = forced_constraints(graph, kind);
  const std::size_t target = claimed.value - 1;
  const std::size_t forced = constraints.forced.size();
  if (target < forced) return true;

  SearchSpace space;
  space.op = &op;
  space.parameter = parameter;
  space.base = constraints.forced;
  space.constraints = &constraints;
  space.deadline = options.deadline;
  for (Vertex v = 0; v < graph.n(); ++v) {
    if (!constraints.forced.contains(v)) space.pool.push_back(v);
  }
  const std::size_t k = target - forced;
  if (binomial_capped(space.pool.size(), k, options.verify_budget) >
      options.verify_budget) {
    throw Error(ErrorCode::OracleCapExceeded,
                "refuting cardinality " + std::to_string(target) +
                    " exceeds the verification budget");
  }
  SolveStats stats;
  return !search_cardinality(space, k, options.jobs, stats).has_value();
}

VertexSet greedy_upper_bound(const OrientedGraph& graph, ConvexityKind kind,
                             Parameter parameter) {
  const IntervalOperator op(graph, kind);
  VertexSet s = VertexSet::full(graph.n());
  for (Vertex v = 0; v < graph.n(); ++v) {
    s.erase(v);
    const bool ok = parameter == Parameter::Hull ? op.is_hull_set(s)
                                                 : op.is_interval_set(s);
    if (!ok) s.insert(v);
  }
  return s;
}

}  // namespace ocvx
