#pragma once

#include <vector>

#include "ocvx/digraph.hpp"

namespace ocvx {

struct Ear {
  /// (u, w, ..., v): u and v already belong to the structure built so far,
  /// the interior is new. u == v for a closed ear.
  std::vector<Vertex> path;
  bool trivial = false;  // a single arc
};

/// Initial shortest cycle followed by ears. Non-trivial ears come first and
/// for each of them the subpath (w, ..., v) is a shortest directed path of
/// the whole graph. The arc sets of the cycle and the ears partition A(D).
struct EarDecomposition {
  std::vector<Vertex> cycle;  // closing arc cycle.back() -> cycle.front()
  std::vector<Ear> ears;

  std::size_t nontrivial_count() const;
};

/// Throws NotStronglyConnected when the graph is not strong or has a single
/// vertex.
///
/// Deterministic: the cycle minimises 1 + dist(y, x) over arcs (x, y), ties
/// broken by the smallest arc. Ears are grown from the smallest frontier arc
/// (u, w) with u inside and w outside, continuing along a breadth-first
/// shortest path from w to the lowest-index nearest vertex already built.
EarDecomposition shortest_ear_decomposition(const OrientedGraph& graph);

/// Length of a shortest directed cycle, or 0 for an acyclic graph.
std::size_t directed_girth(const OrientedGraph& graph, const DistanceMatrix& dist);

}  // namespace ocvx
