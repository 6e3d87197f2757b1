#pragma once

#include <utility>

#include "ocvx/ear_decomposition.hpp"
#include "ocvx/solvers.hpp"

namespace ocvx {

/// Strong-component profile of a tournament. In a tournament every strong
/// component is extreme, and a single-vertex component is an extreme vertex.
struct TournamentProfile {
  SccDecomposition scc;
  std::size_t trivial_count = 0;
  std::size_t nontrivial_count = 0;
};

/// Throws NotATournament.
TournamentProfile tournament_profile(const OrientedGraph& graph);

/// Hull number of a tournament in closed form.
///
/// Geodetic and DistTwo: one vertex per trivial strong component plus two
/// per non-trivial one; the pair is the lexicographically least pair on a
/// directed triangle whose hull spans the component. TwoPath: 2 unless the
/// tournament has a single vertex.
SolveResult tournament_hull_number(const OrientedGraph& graph, ConvexityKind kind);

/// Interval number of a tournament (Geodetic or DistTwo) as the sum of the
/// exact interval numbers of its strong components. There is no closed form
/// for a strong tournament, so each non-trivial component is solved exactly;
/// components larger than options.oracle_cap raise OracleCapExceeded.
SolveResult tournament_interval_number(const OrientedGraph& graph, ConvexityKind kind,
                                       const SolveOptions& options = {});

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

struct CobipartiteParts {
  VertexSet first;
  VertexSet second;
};

/// Splittance test on the degree sequence of the underlying graph; the
/// clique is the prefix of vertices sorted by descending degree (ties by
/// index). Throws NotSplit.
SplitPartition recognize_split(const OrientedGraph& graph);
/// Two-colouring of the complement of the underlying graph. Throws
/// NotCobipartite.
CobipartiteParts recognize_cobipartite(const OrientedGraph& graph);

/// Minimum TwoPath hull set of a digraph with split underlying graph: every
/// source and sink is forced and at most two more vertices are needed.
/// Throws NotSplit when `partition` is not a split partition of the graph.
SolveResult split_twopath_hull(const OrientedGraph& graph,
                               const SplitPartition& partition);

/// Minimum TwoPath hull set when both parts induce tournaments. At most two
/// vertices per part are needed, so all sets of size <= 4 are searched.
/// Throws NotCobipartite.
SolveResult cobipartite_twopath_hull(const OrientedGraph& graph,
                                     const CobipartiteParts& parts,
                                     const SolveOptions& options = {});

struct EarHullSet {
  VertexSet witness;
  std::size_t bound = 0;  // m - n + 2
  EarDecomposition ears;
};

/// Geodetic hull set of a strong digraph built from a shortest ear
/// decomposition: the two lowest-index vertices of the initial cycle and the
/// first interior vertex of every non-trivial ear. Throws
/// NotStronglyConnected.
EarHullSet ear_hull_set(const OrientedGraph& graph);

}  // namespace ocvx
