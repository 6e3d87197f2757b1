#include "ocvx/polycases.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace ocvx {
namespace {

using Clock = std::chrono::steady_clock;

SolveResult make_result(VertexSet witness, ConvexityKind kind, Parameter parameter,
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

bool on_directed_triangle(const OrientedGraph& g, const VertexSet& within, Vertex u,
                          Vertex v) {
  if (!g.adjacent(u, v)) return false;
  const auto [a, b] = g.has_arc(u, v) ? std::pair{u, v} : std::pair{v, u};
  // a -> b -> w -> a
  return !(g.out_set(b) & g.in_set(a) & within).empty();
}

bool pairwise_adjacent(const OrientedGraph& g, const VertexSet& s) {
  const auto vs = s.members();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool pairwise_independent(const OrientedGraph& g, const VertexSet& s) {
  const auto vs = s.members();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool is_partition(const OrientedGraph& g, const VertexSet& a, const VertexSet& b) {
  return a.domain() == g.n() && b.domain() == g.n() && !a.intersects(b) &&
         (a | b).is_full();
}

void require_tournament(const OrientedGraph& graph) {
  if (!is_tournament(graph)) {
    throw Error(ErrorCode::NotATournament, "underlying graph is not complete");
  }
}

}  // namespace

TournamentProfile tournament_profile(const OrientedGraph& graph) {
  require_tournament(graph);
  TournamentProfile p;
  p.scc = strong_components(graph);
  for (const auto& c : p.scc.components) {
    (c.trivial ? p.trivial_count : p.nontrivial_count) += 1;
  }
  return p;
}

SolveResult tournament_hull_number(const OrientedGraph& graph, ConvexityKind kind) {
  const auto start = Clock::now();
  const TournamentProfile profile = tournament_profile(graph);
  const std::size_t n = graph.n();
  SolveStats stats;

  if (kind == ConvexityKind::TwoPath) {
    const IntervalOperator op(graph, kind);
    if (n == 1) return make_result(VertexSet::full(1), kind, Parameter::Hull, stats, start);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        ++stats.hull_evaluations;
        VertexSet pair = VertexSet::of(n, {u, v});
        if (op.is_hull_set(pair)) {
          return make_result(std::move(pair), kind, Parameter::Hull, stats, start);
        }
      }
    }
    throw std::logic_error("tournament without a two-vertex P3 hull set");
  }

  VertexSet witness(n);
  for (const auto& c : profile.scc.components) {
    if (c.trivial) {
      witness.insert(c.vertices.front());
      continue;
    }
    const auto [sub, old_of] = induced_subgraph(graph, c.members);
    const IntervalOperator op(sub, kind);
    const VertexSet all = VertexSet::full(sub.n());
    bool found = false;
    for (Vertex i = 0; i < sub.n() && !found; ++i) {
      for (Vertex j = i + 1; j < sub.n() && !found; ++j) {
        if (!on_directed_triangle(sub, all, i, j)) continue;
        ++stats.hull_evaluations;
        if (op.is_hull_set(VertexSet::of(sub.n(), {i, j}))) {
          witness.insert(old_of[i]);
          witness.insert(old_of[j]);
          found = true;
        }
      }
    }
    if (!found) throw std::logic_error("strong tournament without a hull pair");
  }

  ++stats.hull_evaluations;
  if (!IntervalOperator(graph, kind).is_hull_set(witness)) {
    throw std::logic_error("tournament hull witness failed verification");
  }
  return make_result(std::move(witness), kind, Parameter::Hull, stats, start);
}

SolveResult tournament_interval_number(const OrientedGraph& graph, ConvexityKind kind,
                                       const SolveOptions& options) {
  if (kind == ConvexityKind::TwoPath) {
    throw Error(ErrorCode::InvalidParams,
                "component additivity of the interval number needs geodetic or p3star");
  }
  const auto start = Clock::now();
  const TournamentProfile profile = tournament_profile(graph);
  SolveStats stats;
  VertexSet witness(graph.n());
  for (const auto& c : profile.scc.components) {
    if (c.trivial) {
      witness.insert(c.vertices.front());
      continue;
    }
    if (c.vertices.size() > options.oracle_cap) {
      throw Error(ErrorCode::OracleCapExceeded,
                  "strong component of size " + std::to_string(c.vertices.size()) +
                      " exceeds the solver cap of " + std::to_string(options.oracle_cap));
    }
    const auto [sub, old_of] = induced_subgraph(graph, c.members);
    const SolveResult part = solve_min(sub, kind, Parameter::Interval, options);
    stats.subsets_examined += part.stats.subsets_examined;
    stats.hull_evaluations += part.stats.hull_evaluations;
    part.witness.for_each([&, &old_of = old_of](Vertex v) { witness.insert(old_of[v]); });
  }
  if (!IntervalOperator(graph, kind).is_interval_set(witness)) {
    throw std::logic_error("tournament interval witness failed verification");
  }
  return make_result(std::move(witness), kind, Parameter::Interval, stats, start);
}

SplitPartition recognize_split(const OrientedGraph& graph) {
  const std::size_t n = graph.n();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return graph.degree(a) > graph.degree(b);
  });
  std::size_t clique_size = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (graph.degree(order[i - 1]) >= i - 1) clique_size = i;
  }
  std::size_t head = 0;
  std::size_t tail = 0;
  for (std::size_t i = 0; i < n; ++i) {
    (i < clique_size ? head : tail) += graph.degree(order[i]);
  }
  if (head != clique_size * (clique_size - 1) + tail) {
    throw Error(ErrorCode::NotSplit, "degree sequence fails the splittance test");
  }
  SplitPartition p{VertexSet(n), VertexSet(n)};
  for (std::size_t i = 0; i < n; ++i) {
    (i < clique_size ? p.clique : p.independent).insert(order[i]);
  }
  if (!pairwise_adjacent(graph, p.clique) || !pairwise_independent(graph, p.independent)) {
    throw Error(ErrorCode::NotSplit, "degree prefix is not a split partition");
  }
  return p;
}

CobipartiteParts recognize_cobipartite(const OrientedGraph& graph) {
  const std::size_t n = graph.n();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w = 0; w < n; ++w) {
        if (w == u || graph.adjacent(u, w)) continue;
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          throw Error(ErrorCode::NotCobipartite, "complement has an odd cycle");
        }
      }
    }
  }
  CobipartiteParts parts{VertexSet(n), VertexSet(n)};
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? parts.first : parts.second).insert(v);
  return parts;
}

SolveResult split_twopath_hull(const OrientedGraph& graph,
                               const SplitPartition& partition) {
  if (!is_partition(graph, partition.clique, partition.independent) ||
      !pairwise_adjacent(graph, partition.clique) ||
      !pairwise_independent(graph, partition.independent)) {
    throw Error(ErrorCode::NotSplit, "invalid split partition");
  }
  const auto start = Clock::now();
  const std::size_t n = graph.n();
  const IntervalOperator op(graph, ConvexityKind::TwoPath);
  SolveStats stats;

  VertexSet base(n);
  for (Vertex v = 0; v < n; ++v) {
    if (graph.in_degree(v) == 0 || graph.out_degree(v) == 0) base.insert(v);
  }
  auto attempt = [&](const VertexSet& s) {
    ++stats.subsets_examined;
    ++stats.hull_evaluations;
    return op.is_hull_set(s);
  };
  auto done = [&](VertexSet s) {
    return make_result(std::move(s), ConvexityKind::TwoPath, Parameter::Hull, stats,
                       start);
  };

  if (attempt(base)) return done(base);
  const auto rest = base.complement().members();
  for (const Vertex v : rest) {
    VertexSet s = base;
    s.insert(v);
    if (attempt(s)) return done(std::move(s));
  }
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      VertexSet s = base;
      s.insert(rest[i]);
      s.insert(rest[j]);
      if (attempt(s)) return done(std::move(s));
    }
  }
  throw std::logic_error("split digraph needs more than two vertices beyond sources and sinks");
}

SolveResult cobipartite_twopath_hull(const OrientedGraph& graph,
                                     const CobipartiteParts& parts,
                                     const SolveOptions& options) {
  if (!is_partition(graph, parts.first, parts.second) ||
      !pairwise_adjacent(graph, parts.first) || !pairwise_adjacent(graph, parts.second)) {
    throw Error(ErrorCode::NotCobipartite, "parts do not induce two tournaments");
  }
  const auto start = Clock::now();
  auto found = brute_find(graph, ConvexityKind::TwoPath, Parameter::Hull, 4, options);
  if (!found) throw std::logic_error("cobipartite digraph without a P3 hull set of size <= 4");
  return make_result(std::move(*found), ConvexityKind::TwoPath, Parameter::Hull, {},
                     start);
}

EarHullSet ear_hull_set(const OrientedGraph& graph) {
  EarHullSet result;
  result.ears = shortest_ear_decomposition(graph);
  result.bound = graph.m() - graph.n() + 2;
  result.witness = VertexSet(graph.n());

  std::vector<Vertex> cycle = result.ears.cycle;
  std::sort(cycle.begin(), cycle.end());
  result.witness.insert(cycle[0]);
  result.witness.insert(cycle[1]);
  for (const Ear& ear : result.ears.ears) {
    if (!ear.trivial) result.witness.insert(ear.path[1]);
  }

  if (result.witness.size() > result.bound ||
      !IntervalOperator(graph, ConvexityKind::Geodetic).is_hull_set(result.witness)) {
    throw std::logic_error("ear hull set failed verification");
  }
  return result;
}

}  // namespace ocvx
