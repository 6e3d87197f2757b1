#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ocvx/vertex_set.hpp"

namespace ocvx {

struct Arc {
  Vertex tail;
  Vertex head;
  auto operator<=>(const Arc&) const = default;
};

/// An orientation of a simple graph: no self-loops, no duplicate arcs and
/// never both (u,v) and (v,u). Immutable once constructed.
class OrientedGraph {
 public:
  /// Throws Error on any violated invariant. When `labels` is empty the
  /// vertices are labelled by their decimal index.
  OrientedGraph(std::size_t n, std::vector<Arc> arcs,
                std::vector<std::string> labels = {});

  std::size_t n() const { return n_; }
  std::size_t m() const { return arcs_.size(); }

  /// Arcs sorted by (tail, head).
  std::span<const Arc> arcs() const { return arcs_; }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  const VertexSet& out_set(Vertex v) const { return out_set_[v]; }
  const VertexSet& in_set(Vertex v) const { return in_set_[v]; }

  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }
  std::size_t degree(Vertex v) const { return out_[v].size() + in_[v].size(); }

  bool has_arc(Vertex u, Vertex v) const { return out_set_[u].contains(v); }
  /// Adjacent in the underlying undirected graph.
  bool adjacent(Vertex u, Vertex v) const {
    return has_arc(u, v) || has_arc(v, u);
  }

  const std::string& label(Vertex v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;

  bool operator==(const OrientedGraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_ && labels_ == other.labels_;
  }

 private:
  std::size_t n_;
  std::vector<Arc> arcs_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<VertexSet> out_set_;
  std::vector<VertexSet> in_set_;
  std::unordered_map<std::string, Vertex> index_;
};

// Arc-list text format: "<tail> <head>" per line, "<label>" alone declares a
// vertex, '#' starts a comment line. Vertices are indexed in order of first
// appearance.
OrientedGraph parse_arclist(std::string_view text);
/// Vertex declarations in index order, then arcs in (tail, head) order.
std::string serialize_arclist(const OrientedGraph& graph);

/// Subgraph induced by `keep`, vertices renumbered in ascending order and
/// labels preserved. The second member maps new indices to old ones.
std::pair<OrientedGraph, std::vector<Vertex>> induced_subgraph(
    const OrientedGraph& graph, const VertexSet& keep);

// ---------------------------------------------------------------------------
// Distances

class DistanceMatrix {
 public:
  using Hops = std::uint32_t;
  static constexpr Hops kInfinity = std::numeric_limits<Hops>::max();

  explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, kInfinity) {}

  std::size_t n() const { return n_; }
  Hops operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  Hops& at(Vertex u, Vertex v) { return dist_[u * n_ + v]; }
  bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kInfinity; }

  /// True iff w lies on some shortest directed (u,v)-path. Never adds
  /// through the sentinel.
  bool on_geodesic(Vertex u, Vertex w, Vertex v) const {
    const Hops uw = (*this)(u, w);
    const Hops wv = (*this)(w, v);
    const Hops uv = (*this)(u, v);
    if (uw == kInfinity || wv == kInfinity || uv == kInfinity) return false;
    return std::uint64_t{uw} + wv == uv;
  }

 private:
  std::size_t n_;
  std::vector<Hops> dist_;
};

/// One breadth-first traversal per source.
DistanceMatrix all_pairs_distances(const OrientedGraph& graph);

// ---------------------------------------------------------------------------
// Strong components and extreme vertices

struct StrongComponent {
  std::vector<Vertex> vertices;  // ascending
  VertexSet members;
  bool trivial = false;  // a single vertex
  bool source = false;   // no arc enters from another component
  bool sink = false;     // no arc leaves to another component
  // No shortest directed path between two outside vertices passes through
  // the component. Vacuously true for source and sink components.
  bool transitive = false;
};

struct SccDecomposition {
  std::vector<std::size_t> component_of;
  /// Topologically ordered: arcs between components go from lower to
  /// higher index.
  std::vector<StrongComponent> components;

  std::size_t count() const { return components.size(); }
};

SccDecomposition strong_components(const OrientedGraph& graph);

struct ExtremeFlags {
  bool source = false;
  bool sink = false;
  // Every in-neighbour has an arc to every out-neighbour.
  bool transitive = false;

  bool extreme() const { return source || sink || transitive; }
};

std::vector<ExtremeFlags> classify_extreme_vertices(const OrientedGraph& graph);

/// Vertices with a directed path to v, including v.
VertexSet in_section(const OrientedGraph& graph, Vertex v);
/// Vertices reachable from v, including v.
VertexSet out_section(const OrientedGraph& graph, Vertex v);

bool is_strongly_connected(const OrientedGraph& graph);
/// Connected as an undirected graph.
bool is_weakly_connected(const OrientedGraph& graph);
bool is_acyclic(const OrientedGraph& graph);
bool is_tournament(const OrientedGraph& graph);

/// Two-colouring of the underlying graph, or nullopt when it has an odd
/// cycle. Each connected piece gives colour 0 to its lowest vertex.
std::optional<std::vector<int>> underlying_bipartition(const OrientedGraph& graph);

}  // namespace ocvx
