#include "ocvx/generators.hpp"

#include <string>

#include "ocvx/error.hpp"

namespace ocvx {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::InvalidParams, "probability must lie in [0, 1]");
  }
}

void check_order(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidParams, "graph needs at least one vertex");
}

Arc oriented(Vertex u, Vertex v, Rng& rng) {
  return bernoulli(rng, 0.5) ? Arc{u, v} : Arc{v, u};
}

void add_tournament(std::vector<Arc>& arcs, const std::vector<Vertex>& vs, Rng& rng) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) arcs.push_back(oriented(vs[i], vs[j], rng));
  }
}

}  // namespace

std::size_t uniform_index(Rng& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

bool bernoulli(Rng& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

OrientedGraph random_tournament(std::size_t n, Rng& rng) {
  check_order(n);
  std::vector<Vertex> vs(n);
  for (Vertex v = 0; v < n; ++v) vs[v] = v;
  std::vector<Arc> arcs;
  add_tournament(arcs, vs, rng);
  return OrientedGraph(n, std::move(arcs));
}

OrientedGraph random_strong_tournament(std::size_t n, Rng& rng) {
  if (n == 2) throw Error(ErrorCode::InvalidParams, "no strong tournament on two vertices");
  for (;;) {
    OrientedGraph g = random_tournament(n, rng);
    if (is_strongly_connected(g)) return g;
  }
}

OrientedGraph random_oriented(std::size_t n, double p, Rng& rng) {
  check_order(n);
  check_probability(p);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) arcs.push_back(oriented(u, v, rng));
    }
  }
  return OrientedGraph(n, std::move(arcs));
}

OrientedGraph random_connected_oriented(std::size_t n, double p, Rng& rng) {
  check_order(n);
  check_probability(p);
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (Vertex v = 1; v < n; ++v) {
    const Vertex parent = uniform_index(rng, v);
    edge[parent][v] = true;
  }
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (edge[u][v] || bernoulli(rng, p)) arcs.push_back(oriented(u, v, rng));
    }
  }
  return OrientedGraph(n, std::move(arcs));
}

OrientedGraph random_strong_oriented(std::size_t n, double p, Rng& rng,
                                     std::size_t max_tries) {
  if (n == 2) throw Error(ErrorCode::InvalidParams, "no strong oriented graph on two vertices");
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    OrientedGraph g = random_oriented(n, p, rng);
    if (is_strongly_connected(g)) return g;
  }
  throw Error(ErrorCode::InvalidParams,
              "no strongly connected sample in " + std::to_string(max_tries) + " draws");
}

OrientedGraph triangle_plus_paths(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::InvalidParams, "triangle-paths needs k >= 2");
  std::vector<std::string> labels{"u", "v", "w"};
  std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}};
  for (std::size_t i = 1; i <= k; ++i) {
    const Vertex z1 = labels.size();
    const Vertex z2 = z1 + 1;
    labels.push_back("z[" + std::to_string(i) + "]^1");
    labels.push_back("z[" + std::to_string(i) + "]^2");
    arcs.push_back({0, z1});
    arcs.push_back({z1, z2});
    arcs.push_back({z2, 1});
  }
  const std::size_t n = labels.size();
  return OrientedGraph(n, std::move(arcs), std::move(labels));
}

OrientedGraph random_bipartite_oriented(std::size_t a, std::size_t b, double p, Rng& rng) {
  check_order(a + b);
  check_probability(p);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) {
      if (bernoulli(rng, p)) arcs.push_back(oriented(u, v, rng));
    }
  }
  return OrientedGraph(a + b, std::move(arcs));
}

OrientedGraph random_split_oriented(std::size_t n, Rng& rng) {
  check_order(n);
  const std::size_t clique_size = 1 + uniform_index(rng, n);
  std::vector<Vertex> clique(clique_size);
  for (Vertex v = 0; v < clique_size; ++v) clique[v] = v;
  std::vector<Arc> arcs;
  add_tournament(arcs, clique, rng);
  for (Vertex s = clique_size; s < n; ++s) {
    for (const Vertex c : clique) {
      if (bernoulli(rng, 0.5)) arcs.push_back(oriented(s, c, rng));
    }
  }
  return OrientedGraph(n, std::move(arcs));
}

OrientedGraph random_cobipartite_oriented(std::size_t n, Rng& rng) {
  check_order(n);
  const std::size_t first = uniform_index(rng, n + 1);
  std::vector<Vertex> left, right;
  for (Vertex v = 0; v < n; ++v) (v < first ? left : right).push_back(v);
  std::vector<Arc> arcs;
  add_tournament(arcs, left, rng);
  add_tournament(arcs, right, rng);
  for (const Vertex u : left) {
    for (const Vertex v : right) {
      if (bernoulli(rng, 0.5)) arcs.push_back(oriented(u, v, rng));
    }
  }
  return OrientedGraph(n, std::move(arcs));
}

}  // namespace ocvx
