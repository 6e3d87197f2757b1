#include "ocvx/convexity.hpp"

#include <cassert>

#include "ocvx/error.hpp"

namespace ocvx {
namespace {

void check_domain(const OrientedGraph& graph, const VertexSet& s,
                  const DistanceMatrix& dist) {
  if (s.domain() != graph.n()) {
    throw Error(ErrorCode::DomainMismatch,
                "vertex set over " + std::to_string(s.domain()) +
                    " vertices used with a graph on " + std::to_string(graph.n()));
  }
  if (dist.n() != graph.n()) {
    throw Error(ErrorCode::DomainMismatch, "distance matrix does not match graph");
  }
}

bool witnessed(const OrientedGraph& graph, ConvexityKind kind, const VertexSet& s,
               const std::vector<Vertex>& members, const DistanceMatrix& dist,
               Vertex w) {
  switch (kind) {
    case ConvexityKind::Geodetic:
      for (const Vertex u : members) {
        for (const Vertex v : members) {
          if (dist.on_geodesic(u, w, v)) return true;
        }
      }
      return false;
    case ConvexityKind::TwoPath:
      return graph.in_set(w).intersects(s) && graph.out_set(w).intersects(s);
    case ConvexityKind::DistTwo:
      for (const Vertex u : graph.in_neighbors(w)) {
        if (!s.contains(u)) continue;
        for (const Vertex v : graph.out_neighbors(w)) {
          if (s.contains(v) && !graph.has_arc(u, v)) return true;
        }
      }
      return false;
  }
  return false;
}

}  // namespace

std::string_view to_string(ConvexityKind kind) {
  switch (kind) {
    case ConvexityKind::Geodetic: return "geodetic";
    case ConvexityKind::TwoPath: return "p3";
    case ConvexityKind::DistTwo: return "p3star";
  }
  return "?";
}

std::optional<ConvexityKind> parse_kind(std::string_view name) {
  if (name == "geodetic" || name == "g") return ConvexityKind::Geodetic;
  if (name == "p3" || name == "twopath") return ConvexityKind::TwoPath;
  if (name == "p3star" || name == "p3*" || name == "disttwo") {
    return ConvexityKind::DistTwo;
  }
  return std::nullopt;
}

VertexSet interval(const OrientedGraph& graph, ConvexityKind kind,
                   const VertexSet& s, const DistanceMatrix& dist) {
  check_domain(graph, s, dist);
  const std::vector<Vertex> members = s.members();
  VertexSet out = s;
  for (Vertex w = 0; w < graph.n(); ++w) {
    if (!s.contains(w) && witnessed(graph, kind, s, members, dist, w)) out.insert(w);
  }
  return out;
}

HullTrace hull_trace(const OrientedGraph& graph, ConvexityKind kind,
                     const VertexSet& s, const DistanceMatrix& dist) {
  HullTrace trace;
  trace.iterates.push_back(s);
  for (;;) {
    VertexSet next = interval(graph, kind, trace.iterates.back(), dist);
    if (next == trace.iterates.back()) break;
    trace.iterates.push_back(std::move(next));
  }
  assert(trace.iterates.size() <= graph.n() + 1);
  return trace;
}

VertexSet hull(const OrientedGraph& graph, ConvexityKind kind, const VertexSet& s,
               const DistanceMatrix& dist) {
  return hull_trace(graph, kind, s, dist).closure();
}

bool is_convex(const OrientedGraph& graph, ConvexityKind kind, const VertexSet& s,
               const DistanceMatrix& dist) {
  return interval(graph, kind, s, dist) == s;
}

bool is_interval_set(const OrientedGraph& graph, ConvexityKind kind,
                     const VertexSet& s, const DistanceMatrix& dist) {
  return interval(graph, kind, s, dist).is_full();
}

bool is_hull_set(const OrientedGraph& graph, ConvexityKind kind, const VertexSet& s,
                 const DistanceMatrix& dist) {
  return hull(graph, kind, s, dist).is_full();
}

bool ForcedConstraints::admits(const VertexSet& s) const {
  if (!forced.is_subset_of(s)) return false;
  for (const auto& family : hit_families) {
    if (!family.intersects(s)) return false;
  }
  return true;
}

ForcedConstraints forced_constraints(const OrientedGraph& graph, ConvexityKind kind) {
  const bool with_transitive = kind != ConvexityKind::TwoPath;
  ForcedConstraints fc{VertexSet(graph.n()), {}};
  const auto flags = classify_extreme_vertices(graph);
  for (Vertex v = 0; v < graph.n(); ++v) {
    if (flags[v].source || flags[v].sink || (with_transitive && flags[v].transitive)) {
      fc.forced.insert(v);
    }
  }

  const DistanceMatrix dist = all_pairs_distances(graph);
  const SccDecomposition scc = strong_components(graph);
  for (const auto& c : scc.components) {
    bool coconvex = c.source || c.sink;
    if (!coconvex && with_transitive) {
      coconvex = is_convex(graph, kind, c.members.complement(), dist);
    }
    if (coconvex) fc.hit_families.push_back(c.members);
  }
  return fc;
}

// ---------------------------------------------------------------------------

IntervalOperator::IntervalOperator(const OrientedGraph& graph, ConvexityKind kind)
    : IntervalOperator(graph, kind, all_pairs_distances(graph)) {}

IntervalOperator::IntervalOperator(const OrientedGraph& graph, ConvexityKind kind,
                                   const DistanceMatrix& dist)
    : graph_(&graph), kind_(kind) {
  const std::size_t n = graph.n();
  if (dist.n() != n) {
    throw Error(ErrorCode::DomainMismatch, "distance matrix does not match graph");
  }
  if (kind == ConvexityKind::TwoPath) return;
  masks_.assign(n * n, VertexSet(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      VertexSet& mask = masks_[u * n + v];
      if (u == v) continue;
      if (kind == ConvexityKind::Geodetic) {
        if (!dist.reachable(u, v)) continue;
        for (Vertex w = 0; w < n; ++w) {
          if (w != u && w != v && dist.on_geodesic(u, w, v)) mask.insert(w);
        }
      } else if (!graph.has_arc(u, v)) {
        mask = graph.out_set(u) & graph.in_set(v);
      }
    }
  }
}

void IntervalOperator::add_pairs(const VertexSet& from, const VertexSet& with,
                                 VertexSet& out) const {
  from.for_each([&](Vertex u) {
    with.for_each([&](Vertex v) {
      out |= pair_mask(u, v);
      out |= pair_mask(v, u);
    });
  });
}

void IntervalOperator::apply(const VertexSet& s, VertexSet& out) const {
  assert(&s != &out);
  out = s;
  if (kind_ == ConvexityKind::TwoPath) {
    for (Vertex w = 0; w < n(); ++w) {
      if (!s.contains(w) && graph_->in_set(w).intersects(s) &&
          graph_->out_set(w).intersects(s)) {
        out.insert(w);
      }
    }
    return;
  }
  s.for_each([&](Vertex u) { s.for_each([&](Vertex v) { out |= pair_mask(u, v); }); });
}

VertexSet IntervalOperator::interval(const VertexSet& s) const {
  if (s.domain() != n()) {
    throw Error(ErrorCode::DomainMismatch, "vertex set does not match graph");
  }
  VertexSet out(n());
  apply(s, out);
  return out;
}

void IntervalOperator::extend_hull(VertexSet& closed, const VertexSet& added) const {
  VertexSet frontier = added - closed;
  closed |= frontier;
  if (kind_ == ConvexityKind::TwoPath) {
    bool grew = !frontier.empty();
    while (grew) {
      grew = false;
      for (Vertex w = 0; w < n(); ++w) {
        if (!closed.contains(w) && graph_->in_set(w).intersects(closed) &&
            graph_->out_set(w).intersects(closed)) {
          closed.insert(w);
          grew = true;
        }
      }
    }
    return;
  }
  VertexSet fresh(n());
  while (!frontier.empty()) {
    fresh.clear();
    add_pairs(frontier, closed, fresh);
    fresh -= closed;
    closed |= fresh;
    std::swap(frontier, fresh);
  }
}

void IntervalOperator::extend_interval(VertexSet& current, const VertexSet& base,
                                       const VertexSet& added) const {
  const VertexSet all = base | added;
  if (kind_ == ConvexityKind::TwoPath) {
    VertexSet out(n());
    apply(all, out);
    current = std::move(out);
    return;
  }
  current |= added;
  add_pairs(added, all, current);
}

VertexSet IntervalOperator::hull(const VertexSet& s) const {
  if (s.domain() != n()) {
    throw Error(ErrorCode::DomainMismatch, "vertex set does not match graph");
  }
  VertexSet closed(n());
  extend_hull(closed, s);
  return closed;
}

bool IntervalOperator::is_interval_set(const VertexSet& s) const {
  return interval(s).is_full();
}

bool IntervalOperator::is_hull_set(const VertexSet& s) const {
  return hull(s).is_full();
}

}  // namespace ocvx
