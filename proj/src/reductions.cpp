#include "ocvx/reductions.hpp"

#include <bit>
#include <cstdint>
#include <set>

#include "ocvx/error.hpp"

namespace ocvx {
namespace {

constexpr std::size_t kSourceOracleCap = 20;

class GraphBuilder {
 public:
  Vertex add(std::string label, std::string role) {
    labels_.push_back(std::move(label));
    roles_.push_back(std::move(role));
    return labels_.size() - 1;
  }

  void arc(Vertex u, Vertex v) {
    if (arc_set_.insert({u, v}).second) arcs_.push_back({u, v});
  }

  ReductionOutput finish(std::size_t budget, bool degenerate = false) && {
    const std::size_t n = labels_.size();
    return ReductionOutput{OrientedGraph(n, std::move(arcs_), std::move(labels_)),
                           budget, std::move(roles_), degenerate};
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> roles_;
  std::vector<Arc> arcs_;
  std::set<Arc> arc_set_;
};

std::string indexed(std::string_view name, std::size_t i) {
  return std::string(name) + "[" + std::to_string(i) + "]";
}

std::string indexed(std::string_view name, std::size_t i, std::size_t j) {
  return indexed(name, i) + "^" + std::to_string(j);
}

void check_sets(std::size_t universe, const std::vector<std::vector<std::size_t>>& sets,
                bool allow_empty) {
  if (universe == 0) throw Error(ErrorCode::InvalidInstance, "empty universe");
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (!allow_empty && sets[j].empty()) {
      throw Error(ErrorCode::InvalidInstance, "set " + std::to_string(j + 1) + " is empty");
    }
    std::set<std::size_t> seen;
    for (const std::size_t e : sets[j]) {
      if (e >= universe) {
        throw Error(ErrorCode::InvalidInstance,
                    "set " + std::to_string(j + 1) + " names element " +
                        std::to_string(e + 1) + " outside the universe");
      }
      if (!seen.insert(e).second) {
        throw Error(ErrorCode::InvalidInstance,
                    "set " + std::to_string(j + 1) + " repeats element " +
                        std::to_string(e + 1));
      }
    }
  }
}

std::uint64_t mask_of(const std::vector<std::size_t>& elements) {
  std::uint64_t m = 0;
  for (const std::size_t e : elements) m |= std::uint64_t{1} << e;
  return m;
}

ReductionOutput hitting_set_gadget(const HittingSetInstance& instance, bool geodetic) {
  check_sets(instance.universe, instance.sets, false);
  const std::size_t n = instance.universe;

  // occurrences[i] = indices of the sets containing element i, ascending.
  std::vector<std::vector<std::size_t>> occurrences(n);
  for (std::size_t j = 0; j < instance.sets.size(); ++j) {
    for (const std::size_t e : instance.sets[j]) occurrences[e].push_back(j);
  }
  bool degenerate = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (occurrences[i].empty()) {
      throw Error(ErrorCode::InvalidInstance,
                  "element " + std::to_string(i + 1) + " lies in no set");
    }
    degenerate |= occurrences[i].size() == 1;
  }

  GraphBuilder b;
  std::vector<Vertex> w;
  for (std::size_t j = 0; j < instance.sets.size(); ++j) w.push_back(b.add(indexed("w", j + 1), "w"));
  const Vertex x = b.add("x", "x");
  const Vertex x_prime = b.add("x'", "x'");

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t s = occurrences[i].size();
    const std::size_t id = i + 1;
    // Index 0 unused so that the superscripts read as 1..s.
    std::vector<Vertex> u(s + 1), a(s + 1), bb(s + 1), c(s + 1), p(s + 1), q(s + 1);
    auto wi = [&](std::size_t j) { return w[occurrences[i][j - 1]]; };

    for (std::size_t j = 1; j <= s; ++j) u[j] = b.add(indexed("u", id, j), "u");
    for (std::size_t j = 1; j < s; ++j) {
      a[j] = b.add(indexed("a", id, j), "a");
      bb[j] = b.add(indexed("b", id, j), "b");
      c[j] = b.add(indexed("c", id, j), "c");
    }
    for (std::size_t j = 2; j <= s; ++j) {
      p[j] = b.add(indexed("p", id, j), "p");
      q[j] = b.add(indexed("q", id, j), "q");
    }

    for (std::size_t j = 1; j < s; ++j) {
      b.arc(a[j], u[j]);
      b.arc(a[j], u[j + 1]);
      b.arc(u[j], bb[j]);
      b.arc(u[j + 1], bb[j]);
      b.arc(c[j], u[j]);
      b.arc(u[j + 1], c[j]);
    }
    for (std::size_t j = 2; j <= s; ++j) b.arc(q[j], p[j]);
    for (std::size_t j = 2; j < s; ++j) b.arc(q[j], p[j + 1]);

    for (std::size_t j = 1; j <= s; ++j) b.arc(u[j], wi(j));
    for (std::size_t j = 2; j <= s; ++j) b.arc(p[j], wi(j));
    if (s >= 2) {
      b.arc(wi(1), p[2]);
      b.arc(q[s], u[1]);
    }

    for (std::size_t j = 1; j < s; ++j) {
      b.arc(bb[j], x_prime);
      b.arc(c[j], x_prime);
      b.arc(x, a[j]);
    }
    for (std::size_t j = 2; j <= s; ++j) {
      b.arc(x, q[j]);
      if (geodetic) b.arc(q[j], x_prime);
    }
    if (geodetic) {
      for (std::size_t j = 1; j <= s; ++j) b.arc(x, wi(j));
    }
  }
  for (const Vertex wj : w) b.arc(wj, x_prime);
  if (geodetic) b.arc(x, x_prime);

  return std::move(b).finish(instance.budget + 2, degenerate);
}

}  // namespace

ReductionOutput bd_transform(const OrientedGraph& graph, std::size_t budget) {
  if (graph.n() < 2) throw Error(ErrorCode::TooSmall, "needs at least two vertices");
  if (!is_weakly_connected(graph)) {
    throw Error(ErrorCode::NotConnected, "input graph is not connected");
  }
  GraphBuilder b;
  for (Vertex v = 0; v < graph.n(); ++v) {
    const Vertex in = b.add(graph.label(v) + "^i", "in");
    const Vertex out = b.add(graph.label(v) + "^o", "out");
    b.arc(in, out);
  }
  for (const auto& [u, v] : graph.arcs()) b.arc(2 * u + 1, 2 * v);
  return std::move(b).finish(budget);
}

ReductionOutput hitting_set_to_twopath_hull(const HittingSetInstance& instance) {
  return hitting_set_gadget(instance, false);
}

ReductionOutput hitting_set_to_geodetic_hull(const HittingSetInstance& instance) {
  return hitting_set_gadget(instance, true);
}

ReductionOutput dominating_set_to_twopath_interval(const DominatingSetInstance& instance) {
  const std::size_t n = instance.n;
  if (n == 0 || instance.in_a.size() != n) {
    throw Error(ErrorCode::InvalidInstance, "side flags must cover every vertex");
  }
  GraphBuilder b;
  for (std::size_t v = 0; v < n; ++v) b.add(indexed("v", v + 1), instance.in_a[v] ? "A" : "B");
  for (std::size_t v = 0; v < n; ++v) b.add(indexed("z", v + 1), "z");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [x, y] : instance.edges) {
    if (x >= n || y >= n || x == y) {
      throw Error(ErrorCode::InvalidInstance, "edge endpoint out of range or loop");
    }
    if (instance.in_a[x] == instance.in_a[y]) {
      throw Error(ErrorCode::NotBipartite, "edge " + std::to_string(x + 1) + "-" +
                                               std::to_string(y + 1) +
                                               " lies within one side");
    }
    if (!instance.in_a[x]) std::swap(x, y);
    if (!seen.insert({x, y}).second) {
      throw Error(ErrorCode::InvalidInstance, "duplicate edge");
    }
    b.arc(x, y);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (instance.in_a[v]) {
      b.arc(n + v, v);
    } else {
      b.arc(v, n + v);
    }
  }
  return std::move(b).finish(instance.budget + n);
}

ReductionOutput set_cover_to_twopath_interval(const SetCoverInstance& instance) {
  check_sets(instance.universe, instance.sets, true);
  std::vector<bool> covered(instance.universe, false);
  for (const auto& set : instance.sets) {
    for (const std::size_t e : set) covered[e] = true;
  }
  for (std::size_t e = 0; e < instance.universe; ++e) {
    if (!covered[e]) {
      throw Error(ErrorCode::PreconditionViolated,
                  "element " + std::to_string(e + 1) + " is not covered by any set");
    }
  }
  if (instance.universe < instance.budget + 2) {
    throw Error(ErrorCode::PreconditionViolated,
                "universe of size " + std::to_string(instance.universe) +
                    " is smaller than k + 2 = " + std::to_string(instance.budget + 2));
  }

  GraphBuilder b;
  std::vector<Vertex> u, f;
  for (std::size_t j = 0; j < instance.universe; ++j) u.push_back(b.add(indexed("u", j + 1), "u"));
  for (std::size_t i = 0; i < instance.sets.size(); ++i) f.push_back(b.add(indexed("f", i + 1), "f"));
  const Vertex v = b.add("v", "v");
  const Vertex w = b.add("w", "w");

  for (std::size_t i = 0; i < f.size(); ++i) {
    for (const std::size_t e : instance.sets[i]) b.arc(f[i], u[e]);
    b.arc(f[i], w);
    b.arc(v, f[i]);
    for (std::size_t later = i + 1; later < f.size(); ++later) b.arc(f[i], f[later]);
  }
  for (const Vertex uj : u) b.arc(uj, v);
  return std::move(b).finish(instance.budget + 2);
}

std::size_t brute_hitting_set(const HittingSetInstance& instance) {
  check_sets(instance.universe, instance.sets, false);
  if (instance.universe > kSourceOracleCap) {
    throw Error(ErrorCode::OracleCapExceeded, "universe too large for enumeration");
  }
  std::vector<std::uint64_t> masks;
  for (const auto& set : instance.sets) masks.push_back(mask_of(set));
  std::size_t best = instance.universe;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << instance.universe); ++pick) {
    const auto size = static_cast<std::size_t>(std::popcount(pick));
    if (size >= best) continue;
    bool hits = true;
    for (const auto m : masks) hits = hits && (m & pick) != 0;
    if (hits) best = size;
  }
  return best;
}

std::optional<std::size_t> brute_set_cover(const SetCoverInstance& instance) {
  check_sets(instance.universe, instance.sets, true);
  if (instance.sets.size() > kSourceOracleCap || instance.universe > 63) {
    throw Error(ErrorCode::OracleCapExceeded, "too many sets for enumeration");
  }
  const std::uint64_t all = (std::uint64_t{1} << instance.universe) - 1;
  std::optional<std::size_t> best;
  const std::size_t m = instance.sets.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    const auto size = static_cast<std::size_t>(std::popcount(pick));
    if (best && size >= *best) continue;
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((pick >> i) & 1u) covered |= mask_of(instance.sets[i]);
    }
    if (covered == all) best = size;
  }
  return best;
}

std::size_t brute_dominating_set(const DominatingSetInstance& instance) {
  const std::size_t n = instance.n;
  if (n > kSourceOracleCap) {
    throw Error(ErrorCode::OracleCapExceeded, "graph too large for enumeration");
  }
  std::vector<std::uint64_t> closed(n);
  for (std::size_t v = 0; v < n; ++v) closed[v] = std::uint64_t{1} << v;
  for (const auto& [x, y] : instance.edges) {
    closed[x] |= std::uint64_t{1} << y;
    closed[y] |= std::uint64_t{1} << x;
  }
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::size_t best = n;
  for (std::uint64_t pick = 0; pick <= all; ++pick) {
    const auto size = static_cast<std::size_t>(std::popcount(pick));
    if (size >= best) continue;
    std::uint64_t dominated = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((pick >> v) & 1u) dominated |= closed[v];
    }
    if (dominated == all) best = size;
  }
  return best;
}

}  // namespace ocvx
