#pragma once

#include <cstdint>
#include <random>

#include "ocvx/digraph.hpp"

namespace ocvx {

// Seeded instance generators. Sampling uses only raw mt19937_64 output with
// explicit arithmetic, so a seed yields the same graph on every platform.
// Parameter errors raise InvalidParams.

using Rng = std::mt19937_64;

OrientedGraph random_tournament(std::size_t n, Rng& rng);

/// Rejection-samples tournaments until one is strong. n must not be 2.
OrientedGraph random_strong_tournament(std::size_t n, Rng& rng);

/// Each unordered pair is an edge with probability p, oriented by a coin.
OrientedGraph random_oriented(std::size_t n, double p, Rng& rng);

/// random_oriented plus a random spanning tree, so the underlying graph is
/// connected.
OrientedGraph random_connected_oriented(std::size_t n, double p, Rng& rng);

/// Rejection-samples random_oriented until the result is strongly connected.
/// Gives up with InvalidParams after max_tries draws.
OrientedGraph random_strong_oriented(std::size_t n, double p, Rng& rng,
                                     std::size_t max_tries = 100000);

/// Directed triangle u -> v -> w -> u plus k >= 2 paths u -> z[i]^1 ->
/// z[i]^2 -> v. Has 3 + 2k vertices and 3 + 3k arcs.
OrientedGraph triangle_plus_paths(std::size_t k);

/// Parts {0..a-1} and {a..a+b-1}; each cross pair is an edge with
/// probability p, oriented by a coin.
OrientedGraph random_bipartite_oriented(std::size_t a, std::size_t b, double p, Rng& rng);

/// Random orientation of a random split graph on n vertices: a tournament on
/// a clique of random size, every other vertex joined to a random subset of it.
OrientedGraph random_split_oriented(std::size_t n, Rng& rng);

/// Two random tournaments joined by random cross arcs.
OrientedGraph random_cobipartite_oriented(std::size_t n, Rng& rng);

/// Uniform in [0, bound). bound must be positive.
std::size_t uniform_index(Rng& rng, std::size_t bound);
bool bernoulli(Rng& rng, double p);

}  // namespace ocvx
