#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ocvx/convexity.hpp"
#include "ocvx/error.hpp"

namespace ocvx {

enum class Parameter { Interval, Hull };

std::string_view to_string(Parameter parameter);
std::optional<Parameter> parse_parameter(std::string_view name);

struct SolveStats {
  std::uint64_t subsets_examined = 0;   // candidate sets enumerated
  std::uint64_t hull_evaluations = 0;   // predicate evaluations
  double wall_ms = 0.0;
};

struct SolveResult {
  std::size_t value = 0;
  VertexSet witness;
  ConvexityKind kind = ConvexityKind::Geodetic;
  Parameter parameter = Parameter::Hull;
  SolveStats stats;
};

struct SolveOptions {
  /// brute_min refuses graphs with more vertices than this.
  std::size_t oracle_cap = 12;
  /// Upper limit on the candidate sets verify_minimum may enumerate.
  std::uint64_t verify_budget = 50'000'000;
  /// Worker threads; the result does not depend on this.
  unsigned jobs = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Thrown when SolveOptions::deadline passes. Every set smaller than
/// lower_bound has been refuted.
class TimeoutError : public Error {
 public:
  explicit TimeoutError(std::size_t lower_bound)
      : Error(ErrorCode::Timeout,
              "deadline reached, no solution below " + std::to_string(lower_bound)),
        lower_bound_(lower_bound) {}

  std::size_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::size_t lower_bound_;
};

/// Reference oracle: all subsets by increasing cardinality, lexicographic
/// within a cardinality; the first success is returned.
SolveResult brute_min(const OrientedGraph& graph, ConvexityKind kind,
                      Parameter parameter, const SolveOptions& options = {});

/// Plain enumeration like brute_min but stops after cardinality max_size.
std::optional<VertexSet> brute_find(const OrientedGraph& graph, ConvexityKind kind,
                                    Parameter parameter, std::size_t max_size,
                                    const SolveOptions& options = {});

/// Exact minimum restricted to supersets of the forced vertices that meet
/// every hitting family. Extension candidates are tried by descending
/// degree, ties by index. For hull sets a candidate already inside the hull
/// of the partial set is skipped, since the smaller set was tried earlier.
SolveResult solve_min(const OrientedGraph& graph, ConvexityKind kind,
                      Parameter parameter, const SolveOptions& options = {});

/// Checks that `claimed.witness` is valid with |witness| == value and that
/// no admissible set of cardinality value - 1 works.
bool verify_minimum(const OrientedGraph& graph, ConvexityKind kind,
                    Parameter parameter, const SolveResult& claimed,
                    const SolveOptions& options = {});

/// Inclusion-minimal valid set obtained by deleting vertices from V in
/// index order while the predicate still holds.
VertexSet greedy_upper_bound(const OrientedGraph& graph, ConvexityKind kind,
                             Parameter parameter);

}  // namespace ocvx
