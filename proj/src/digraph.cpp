#include "ocvx/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>

#include "ocvx/error.hpp"

namespace ocvx {
namespace {

bool valid_label(std::string_view label) {
  if (label.empty() || label.front() == '#') return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  });
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string at_line(std::size_t line_no, std::string_view line) {
  return "line " + std::to_string(line_no) + ": '" + std::string(line) + "'";
}

}  // namespace

OrientedGraph::OrientedGraph(std::size_t n, std::vector<Arc> arcs,
                             std::vector<std::string> labels)
    : n_(n), arcs_(std::move(arcs)), labels_(std::move(labels)) {
  if (n_ == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
  }
  if (labels_.size() != n_) {
    throw Error(ErrorCode::InvalidLabel, "expected " + std::to_string(n_) +
                                             " labels, got " +
                                             std::to_string(labels_.size()));
  }
  for (Vertex v = 0; v < n_; ++v) {
    if (!valid_label(labels_[v])) {
      throw Error(ErrorCode::InvalidLabel, "invalid label '" + labels_[v] + "'");
    }
    if (!index_.emplace(labels_[v], v).second) {
      throw Error(ErrorCode::InvalidLabel, "duplicate label '" + labels_[v] + "'");
    }
  }

  std::sort(arcs_.begin(), arcs_.end());
  out_.assign(n_, {});
  in_.assign(n_, {});
  out_set_.assign(n_, VertexSet(n_));
  in_set_.assign(n_, VertexSet(n_));
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const auto [u, v] = arcs_[i];
    if (u >= n_ || v >= n_) {
      throw Error(ErrorCode::InvalidVertex, "arc (" + std::to_string(u) + "," +
                                                std::to_string(v) + ") out of range");
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at " + labels_[u]);
    if (i > 0 && arcs_[i - 1] == arcs_[i]) {
      throw Error(ErrorCode::DuplicateArc,
                  "duplicate arc " + labels_[u] + " -> " + labels_[v]);
    }
    out_set_[u].insert(v);
    in_set_[v].insert(u);
  }
  for (const auto& [u, v] : arcs_) {
    if (out_set_[v].contains(u)) {
      throw Error(ErrorCode::AntiParallelPair,
                  "both " + labels_[u] + " -> " + labels_[v] + " and reverse");
    }
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

std::optional<Vertex> OrientedGraph::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

OrientedGraph parse_arclist(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Arc> arcs;
  std::unordered_map<std::uint64_t, std::size_t> seen;  // arc key -> line

  auto vertex_of = [&](std::string_view label) {
    auto [it, inserted] = index.emplace(std::string(label), labels.size());
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() > 2 || tokens.back().front() == '#') {
      throw Error(ErrorCode::MalformedLine, at_line(line_no, line));
    }
    if (tokens.size() == 1) {
      vertex_of(tokens[0]);
      continue;
    }
    if (tokens[0] == tokens[1]) {
      throw Error(ErrorCode::SelfLoop, at_line(line_no, line));
    }
    const Vertex u = vertex_of(tokens[0]);
    const Vertex v = vertex_of(tokens[1]);
    const std::uint64_t key = (std::uint64_t{u} << 32) | v;
    const std::uint64_t reverse = (std::uint64_t{v} << 32) | u;
    if (seen.contains(key)) {
      throw Error(ErrorCode::DuplicateArc, at_line(line_no, line));
    }
    if (const auto it = seen.find(reverse); it != seen.end()) {
      throw Error(ErrorCode::AntiParallelPair,
                  at_line(line_no, line) + " reverses line " +
                      std::to_string(it->second));
    }
    seen.emplace(key, line_no);
    arcs.push_back({u, v});
  }
  if (labels.empty()) throw Error(ErrorCode::EmptyGraph, "no vertices in input");
  const std::size_t n = labels.size();
  return OrientedGraph(n, std::move(arcs), std::move(labels));
}

std::string serialize_arclist(const OrientedGraph& graph) {
  std::string out;
  for (Vertex v = 0; v < graph.n(); ++v) {
    out += graph.label(v);
    out += '\n';
  }
  for (const auto& [u, v] : graph.arcs()) {
    out += graph.label(u);
    out += ' ';
    out += graph.label(v);
    out += '\n';
  }
  return out;
}

std::pair<OrientedGraph, std::vector<Vertex>> induced_subgraph(
    const OrientedGraph& graph, const VertexSet& keep) {
  if (keep.domain() != graph.n()) {
    throw Error(ErrorCode::DomainMismatch, "vertex set domain differs from graph");
  }
  std::vector<Vertex> old_of = keep.members();
  std::vector<Vertex> new_of(graph.n(), graph.n());
  std::vector<std::string> labels;
  for (Vertex i = 0; i < old_of.size(); ++i) {
    new_of[old_of[i]] = i;
    labels.push_back(graph.label(old_of[i]));
  }
  std::vector<Arc> arcs;
  for (const auto& [u, v] : graph.arcs()) {
    if (keep.contains(u) && keep.contains(v)) arcs.push_back({new_of[u], new_of[v]});
  }
  return {OrientedGraph(old_of.size(), std::move(arcs), std::move(labels)),
          std::move(old_of)};
}

DistanceMatrix all_pairs_distances(const OrientedGraph& graph) {
  const std::size_t n = graph.n();
  DistanceMatrix dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::size_t head = 0;
    std::size_t tail = 0;
    dist.at(s, s) = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      const auto du = dist(s, u);
      for (const Vertex v : graph.out_neighbors(u)) {
        if (dist(s, v) == DistanceMatrix::kInfinity) {
          dist.at(s, v) = du + 1;
          queue[tail++] = v;
        }
      }
    }
  }
  return dist;
}

SccDecomposition strong_components(const OrientedGraph& graph) {
  const std::size_t n = graph.n();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> found;  // reverse topological order
  std::size_t counter = 0;

  // Tarjan's algorithm.
  std::function<void(Vertex)> visit = [&](Vertex v) {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const Vertex w : graph.out_neighbors(v)) {
      if (order[w] == kUnvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (low[v] == order[v]) {
      std::vector<Vertex> component;
      Vertex w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      found.push_back(std::move(component));
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    if (order[v] == kUnvisited) visit(v);
  }

  SccDecomposition scc;
  scc.component_of.assign(n, 0);
  for (auto it = found.rbegin(); it != found.rend(); ++it) {
    StrongComponent c;
    c.vertices = std::move(*it);
    c.members = VertexSet::of(n, c.vertices);
    c.trivial = c.vertices.size() == 1;
    for (const Vertex v : c.vertices) scc.component_of[v] = scc.components.size();
    scc.components.push_back(std::move(c));
  }

  const DistanceMatrix dist = all_pairs_distances(graph);
  for (std::size_t ci = 0; ci < scc.count(); ++ci) {
    StrongComponent& c = scc.components[ci];
    std::vector<Arc> entering;
    std::vector<Arc> leaving;
    for (const Vertex v : c.vertices) {
      for (const Vertex a : graph.in_neighbors(v)) {
        if (!c.members.contains(a)) entering.push_back({a, v});
      }
      for (const Vertex b : graph.out_neighbors(v)) {
        if (!c.members.contains(b)) leaving.push_back({v, b});
      }
    }
    c.source = entering.empty();
    c.sink = leaving.empty();
    c.transitive = true;
    for (const auto& [a, c_in] : entering) {
      for (const auto& [c_out, b] : leaving) {
        // Shortest passage through the component is a -> c_in ~> c_out -> b.
        const std::uint64_t through = 2 + std::uint64_t{dist(c_in, c_out)};
        if (dist(a, b) >= through) {
          c.transitive = false;
          break;
        }
      }
      if (!c.transitive) break;
    }
  }
  return scc;
}

std::vector<ExtremeFlags> classify_extreme_vertices(const OrientedGraph& graph) {
  std::vector<ExtremeFlags> flags(graph.n());
  for (Vertex v = 0; v < graph.n(); ++v) {
    flags[v].source = graph.in_degree(v) == 0;
    flags[v].sink = graph.out_degree(v) == 0;
    bool transitive = true;
    for (const Vertex u : graph.in_neighbors(v)) {
      if (!graph.out_set(v).is_subset_of(graph.out_set(u))) {
        transitive = false;
        break;
      }
    }
    flags[v].transitive = transitive;
  }
  return flags;
}

namespace {

VertexSet reach(const OrientedGraph& graph, Vertex v, bool forward) {
  VertexSet seen(graph.n());
  std::vector<Vertex> stack{v};
  seen.insert(v);
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (const Vertex w : forward ? graph.out_neighbors(u) : graph.in_neighbors(u)) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

VertexSet in_section(const OrientedGraph& graph, Vertex v) {
  return reach(graph, v, false);
}

VertexSet out_section(const OrientedGraph& graph, Vertex v) {
  return reach(graph, v, true);
}

bool is_strongly_connected(const OrientedGraph& graph) {
  return out_section(graph, 0).is_full() && in_section(graph, 0).is_full();
}

bool is_weakly_connected(const OrientedGraph& graph) {
  VertexSet seen(graph.n());
  std::vector<Vertex> stack{0};
  seen.insert(0);
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (const auto list : {graph.out_neighbors(u), graph.in_neighbors(u)}) {
      for (const Vertex w : list) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
  }
  return seen.is_full();
}

bool is_acyclic(const OrientedGraph& graph) {
  std::vector<std::size_t> indegree(graph.n());
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < graph.n(); ++v) {
    indegree[v] = graph.in_degree(v);
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const Vertex u = ready.back();
    ready.pop_back();
    ++removed;
    for (const Vertex w : graph.out_neighbors(u)) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == graph.n();
}

bool is_tournament(const OrientedGraph& graph) {
  const std::size_t n = graph.n();
  return graph.m() == n * (n - 1) / 2;
}

std::optional<std::vector<int>> underlying_bipartition(const OrientedGraph& graph) {
  std::vector<int> colour(graph.n(), -1);
  for (Vertex s = 0; s < graph.n(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (const auto list : {graph.out_neighbors(u), graph.in_neighbors(u)}) {
        for (const Vertex w : list) {
          if (colour[w] == -1) {
            colour[w] = 1 - colour[u];
            queue.push_back(w);
          } else if (colour[w] == colour[u]) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return colour;
}

}  // namespace ocvx
