#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ocvx/digraph.hpp"

namespace ocvx {

/// Which interval operator defines the convexity.
///   Geodetic: vertices on shortest directed (u,v)- or (v,u)-paths.
///   TwoPath:  middles of directed paths of length two (P3).
///   DistTwo:  middles of directed length-two paths whose endpoints are not
///             joined by an arc in the same direction (P3*).
enum class ConvexityKind { Geodetic, TwoPath, DistTwo };

inline constexpr ConvexityKind kAllKinds[] = {
    ConvexityKind::Geodetic, ConvexityKind::TwoPath, ConvexityKind::DistTwo};

std::string_view to_string(ConvexityKind kind);
/// Accepts "geodetic", "p3"/"twopath", "p3star"/"disttwo".
std::optional<ConvexityKind> parse_kind(std::string_view name);

// The functions below evaluate the definitions directly. `dist` is only read
// for Geodetic. All throw DomainMismatch if S or dist does not match the
// graph.

VertexSet interval(const OrientedGraph& graph, ConvexityKind kind,
                   const VertexSet& s, const DistanceMatrix& dist);

/// I^0(S) = S, I^k(S) = I(I^{k-1}(S)), recorded up to the first repeat.
struct HullTrace {
  std::vector<VertexSet> iterates;
  const VertexSet& closure() const { return iterates.back(); }
};

HullTrace hull_trace(const OrientedGraph& graph, ConvexityKind kind,
                     const VertexSet& s, const DistanceMatrix& dist);
VertexSet hull(const OrientedGraph& graph, ConvexityKind kind, const VertexSet& s,
               const DistanceMatrix& dist);

bool is_convex(const OrientedGraph& graph, ConvexityKind kind, const VertexSet& s,
               const DistanceMatrix& dist);
bool is_interval_set(const OrientedGraph& graph, ConvexityKind kind,
                     const VertexSet& s, const DistanceMatrix& dist);
bool is_hull_set(const OrientedGraph& graph, ConvexityKind kind, const VertexSet& s,
                 const DistanceMatrix& dist);

/// Constraints every interval set and every hull set satisfies: it contains
/// `forced` and meets each set in `hit_families`.
struct ForcedConstraints {
  VertexSet forced;
  std::vector<VertexSet> hit_families;

  bool admits(const VertexSet& s) const;
};

/// Sources and sinks are forced for every kind, transitive vertices for
/// Geodetic and DistTwo. Families: vertex sets of source and sink strong
/// components, plus for Geodetic and DistTwo every strong component whose
/// complement is convex.
ForcedConstraints forced_constraints(const OrientedGraph& graph, ConvexityKind kind);

/// Precomputed interval operator for repeated evaluation on one graph.
///
/// Geodetic and DistTwo keep one mask per ordered pair (u, v): the interior
/// witnessed by that pair. TwoPath tests N-(w) and N+(w) against S.
class IntervalOperator {
 public:
  IntervalOperator(const OrientedGraph& graph, ConvexityKind kind);
  IntervalOperator(const OrientedGraph& graph, ConvexityKind kind,
                   const DistanceMatrix& dist);

  std::size_t n() const { return graph_->n(); }
  ConvexityKind kind() const { return kind_; }
  const OrientedGraph& graph() const { return *graph_; }

  /// out = I(s). `out` must not alias `s`.
  void apply(const VertexSet& s, VertexSet& out) const;
  VertexSet interval(const VertexSet& s) const;

  /// Grows `closed` (already convex) by `added` and closes the result again.
  /// Only pairs touching new vertices are examined.
  void extend_hull(VertexSet& closed, const VertexSet& added) const;
  /// Grows `current`, an interval I(P) for some P, by the pairs that `added`
  /// forms with `base ∪ added` where base = P.
  void extend_interval(VertexSet& current, const VertexSet& base,
                       const VertexSet& added) const;

  VertexSet hull(const VertexSet& s) const;

  bool is_interval_set(const VertexSet& s) const;
  bool is_hull_set(const VertexSet& s) const;

 private:
  const VertexSet& pair_mask(Vertex u, Vertex v) const {
    return masks_[u * graph_->n() + v];
  }
  void add_pairs(const VertexSet& from, const VertexSet& with, VertexSet& out) const;

  const OrientedGraph* graph_;
  ConvexityKind kind_;
  std::vector<VertexSet> masks_;  // empty for TwoPath
};

}  // namespace ocvx
