#include "ocvx/ear_decomposition.hpp"

#include <algorithm>
#include <set>

#include "ocvx/error.hpp"

namespace ocvx {
namespace {

constexpr Vertex kNone = static_cast<Vertex>(-1);

// Breadth-first search from `start` restricted to vertices outside `inside`,
// stopping at the first layer that touches `inside`. Returns the path from
// start to the lowest-index vertex of `inside` in that layer.
std::vector<Vertex> path_to_structure(const OrientedGraph& graph, Vertex start,
                                      const VertexSet& inside) {
  std::vector<Vertex> parent(graph.n(), kNone);
  std::vector<Vertex> layer{start};
  VertexSet seen(graph.n());
  seen.insert(start);
  while (!layer.empty()) {
    Vertex landing = kNone;
    Vertex landing_parent = kNone;
    std::vector<Vertex> next;
    for (const Vertex u : layer) {
      for (const Vertex w : graph.out_neighbors(u)) {
        if (inside.contains(w)) {
          if (landing == kNone || w < landing) {
            landing = w;
            landing_parent = u;
          }
        } else if (!seen.contains(w)) {
          seen.insert(w);
          parent[w] = u;
          next.push_back(w);
        }
      }
    }
    if (landing != kNone) {
      std::vector<Vertex> path{landing};
      for (Vertex v = landing_parent; v != kNone; v = parent[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      return path;
    }
    layer = std::move(next);
  }
  return {};
}

}  // namespace

std::size_t EarDecomposition::nontrivial_count() const {
  return static_cast<std::size_t>(
      std::count_if(ears.begin(), ears.end(), [](const Ear& e) { return !e.trivial; }));
}

std::size_t directed_girth(const OrientedGraph& graph, const DistanceMatrix& dist) {
  std::uint64_t best = 0;
  for (const auto& [x, y] : graph.arcs()) {
    if (!dist.reachable(y, x)) continue;
    const std::uint64_t len = 1 + std::uint64_t{dist(y, x)};
    if (best == 0 || len < best) best = len;
  }
  return static_cast<std::size_t>(best);
}

EarDecomposition shortest_ear_decomposition(const OrientedGraph& graph) {
  if (graph.n() < 2 || !is_strongly_connected(graph)) {
    throw Error(ErrorCode::NotStronglyConnected,
                "ear decomposition needs a strongly connected graph on >= 2 vertices");
  }
  const DistanceMatrix dist = all_pairs_distances(graph);

  // Shortest cycle through the first minimising arc.
  Arc closing{kNone, kNone};
  std::uint64_t best = 0;
  for (const Arc& a : graph.arcs()) {
    if (!dist.reachable(a.head, a.tail)) continue;
    const std::uint64_t len = 1 + std::uint64_t{dist(a.head, a.tail)};
    if (best == 0 || len < best) {
      best = len;
      closing = a;
    }
  }

  EarDecomposition result;
  // Walk a shortest path head ~> tail greedily along distances.
  {
    Vertex cur = closing.head;
    result.cycle.push_back(cur);
    while (cur != closing.tail) {
      for (const Vertex w : graph.out_neighbors(cur)) {
        if (dist.reachable(w, closing.tail) &&
            dist(w, closing.tail) + 1 == dist(cur, closing.tail)) {
          cur = w;
          break;
        }
      }
      result.cycle.push_back(cur);
    }
    // Rotate so the cycle reads tail -> head -> ... .
    std::rotate(result.cycle.begin(), result.cycle.end() - 1, result.cycle.end());
  }

  VertexSet inside = VertexSet::of(graph.n(), result.cycle);
  std::set<Arc> used;
  for (std::size_t i = 0; i < result.cycle.size(); ++i) {
    used.insert({result.cycle[i], result.cycle[(i + 1) % result.cycle.size()]});
  }

  while (!inside.is_full()) {
    // graph.arcs() is sorted, so the first match is the smallest frontier arc.
    const auto frontier = std::find_if(
        graph.arcs().begin(), graph.arcs().end(), [&](const Arc& a) {
          return inside.contains(a.tail) && !inside.contains(a.head);
        });
    Ear ear;
    ear.path.push_back(frontier->tail);
    for (const Vertex v : path_to_structure(graph, frontier->head, inside)) {
      ear.path.push_back(v);
    }
    for (std::size_t i = 0; i + 1 < ear.path.size(); ++i) {
      used.insert({ear.path[i], ear.path[i + 1]});
    }
    for (std::size_t i = 1; i + 1 < ear.path.size(); ++i) inside.insert(ear.path[i]);
    result.ears.push_back(std::move(ear));
  }

  for (const Arc& a : graph.arcs()) {
    if (!used.contains(a)) result.ears.push_back({{a.tail, a.head}, true});
  }
  return result;
}

}  // namespace ocvx
