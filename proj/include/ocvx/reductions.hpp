#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ocvx/digraph.hpp"

namespace ocvx {

/// Elements are 0-based. Every set must be non-empty.
struct HittingSetInstance {
  std::size_t universe = 0;
  std::vector<std::vector<std::size_t>> sets;
  std::size_t budget = 0;
};

/// Elements are 0-based.
struct SetCoverInstance {
  std::size_t universe = 0;
  std::vector<std::vector<std::size_t>> sets;
  std::size_t budget = 0;
};

/// Undirected bipartite graph with declared sides; in_a[v] marks side A.
struct DominatingSetInstance {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<bool> in_a;
  std::size_t budget = 0;
};

struct ReductionOutput {
  OrientedGraph graph;
  std::size_t target_budget = 0;
  /// Role tag per constructed vertex ("x", "x'", "u", "a", "w", "z", ...).
  std::vector<std::string> roles;
  /// Hitting-set gadgets only: some element lies in exactly one set.
  bool degenerate = false;
};

/// Splits every vertex v into v^i -> v^o and maps each arc (u, v) to
/// (u^o, v^i). The underlying graph of the result is bipartite and the
/// geodetic interval and hull numbers are preserved, so the budget passes
/// through unchanged. Throws NotConnected or TooSmall.
ReductionOutput bd_transform(const OrientedGraph& graph, std::size_t budget = 0);

/// Acyclic gadget digraph with bipartite underlying graph whose P3 hull
/// number is at most budget + 2 exactly when the instance has a hitting set
/// of size at most budget. Throws InvalidInstance.
ReductionOutput hitting_set_to_twopath_hull(const HittingSetInstance& instance);

/// Same gadget plus the arcs x -> x', q -> x' and x -> w that make it work
/// for the geodetic hull number. Still acyclic, no longer bipartite.
ReductionOutput hitting_set_to_geodetic_hull(const HittingSetInstance& instance);

/// Orients every edge from A to B and hangs a pendant z_v on each vertex
/// (z_v -> v on side A, v -> z_v on side B). Target budget k + n. Throws
/// NotBipartite or InvalidInstance.
ReductionOutput dominating_set_to_twopath_interval(const DominatingSetInstance& instance);

/// Split digraph on {u_j} ∪ {f_i} ∪ {v, w} with target budget k + 2.
/// Throws PreconditionViolated unless the sets cover the universe and
/// |U| >= k + 2, and InvalidInstance on malformed input.
ReductionOutput set_cover_to_twopath_interval(const SetCoverInstance& instance);

// Exact optima of the source problems by subset enumeration. Instances
// larger than 20 elements / sets / vertices raise OracleCapExceeded.
std::size_t brute_hitting_set(const HittingSetInstance& instance);
/// nullopt when the sets do not cover the universe.
std::optional<std::size_t> brute_set_cover(const SetCoverInstance& instance);
std::size_t brute_dominating_set(const DominatingSetInstance& instance);

}  // namespace ocvx
