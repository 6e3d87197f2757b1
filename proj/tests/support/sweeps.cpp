#include "support/sweeps.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

namespace sweeps {
namespace {

std::vector<std::size_t> members(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; mask >> e; ++e) {
    if ((mask >> e) & 1u) out.push_back(e);
  }
  return out;
}

// Non-decreasing sequences of length `count` over [first, last].
void multisets(std::uint32_t first, std::uint32_t last, std::size_t count,
               std::vector<std::uint32_t>& prefix,
               const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
  if (prefix.size() == count) {
    emit(prefix);
    return;
  }
  for (std::uint32_t x = prefix.empty() ? first : prefix.back(); x <= last; ++x) {
    prefix.push_back(x);
    multisets(first, last, count, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ocvx::HittingSetInstance> hitting_set_instances(std::size_t max_universe,
                                                            std::size_t max_sets,
                                                            std::size_t max_budget) {
  std::vector<ocvx::HittingSetInstance> out;
  for (std::size_t n = 1; n <= max_universe; ++n) {
    const std::uint32_t all = (1u << n) - 1;
    for (std::size_t m = 1; m <= max_sets; ++m) {
      std::vector<std::uint32_t> prefix;
      multisets(1, all, m, prefix, [&](const std::vector<std::uint32_t>& sets) {
        for (std::size_t e = 0; e < n; ++e) {
          const auto hits = std::count_if(sets.begin(), sets.end(),
                                          [&](std::uint32_t s) { return (s >> e) & 1u; });
          if (hits < 2) return;
        }
        for (std::size_t k = 0; k <= max_budget; ++k) {
          ocvx::HittingSetInstance instance{n, {}, k};
          for (const auto s : sets) instance.sets.push_back(members(s));
          out.push_back(std::move(instance));
        }
      });
    }
  }
  return out;
}

std::vector<ocvx::DominatingSetInstance> bipartite_graphs(std::size_t max_n) {
  std::vector<ocvx::DominatingSetInstance> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    // Canonical form: sides are 0..a-1 (A) and a..n-1 (B); the key is the
    // lexicographically least edge bitmap over all side-preserving
    // relabellings.
    for (std::size_t a = 0; a <= n; ++a) {
      const std::size_t b = n - a;
      std::vector<std::size_t> pa(a), pb(b);
      std::set<std::uint64_t> seen;
      for (std::uint64_t edges = 0; edges < (std::uint64_t{1} << (a * b)); ++edges) {
        std::iota(pa.begin(), pa.end(), 0);
        std::uint64_t best = ~std::uint64_t{0};
        do {
          std::iota(pb.begin(), pb.end(), 0);
          do {
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < a; ++i) {
              for (std::size_t j = 0; j < b; ++j) {
                if ((edges >> (i * b + j)) & 1u) key |= std::uint64_t{1} << (pa[i] * b + pb[j]);
              }
            }
            best = std::min(best, key);
          } while (std::next_permutation(pb.begin(), pb.end()));
        } while (std::next_permutation(pa.begin(), pa.end()));
        if (!seen.insert(best).second) continue;

        ocvx::DominatingSetInstance instance;
        instance.n = n;
        instance.in_a.assign(n, false);
        for (std::size_t i = 0; i < a; ++i) instance.in_a[i] = true;
        for (std::size_t i = 0; i < a; ++i) {
          for (std::size_t j = 0; j < b; ++j) {
            if ((best >> (i * b + j)) & 1u) instance.edges.emplace_back(i, a + j);
          }
        }
        out.push_back(std::move(instance));
      }
    }
  }
  return out;
}

std::vector<ocvx::SetCoverInstance> set_cover_instances(std::size_t max_universe,
                                                        std::size_t max_sets) {
  std::vector<ocvx::SetCoverInstance> out;
  for (std::size_t n = 2; n <= max_universe; ++n) {
    const std::uint32_t all = (1u << n) - 1;
    for (std::size_t m = 1; m <= max_sets; ++m) {
      std::vector<std::uint32_t> prefix;
      multisets(1, all, m, prefix, [&](const std::vector<std::uint32_t>& sets) {
        for (std::size_t i = 1; i < sets.size(); ++i) {
          if (sets[i] == sets[i - 1]) return;
        }
        std::uint32_t covered = 0;
        for (const auto s : sets) covered |= s;
        if (covered != all) return;
        for (std::size_t k = 0; k + 2 <= n; ++k) {
          ocvx::SetCoverInstance instance{n, {}, k};
          for (const auto s : sets) instance.sets.push_back(members(s));
          out.push_back(std::move(instance));
        }
      });
    }
  }
  return out;
}

ocvx::SetCoverInstance random_set_cover(std::size_t universe, std::size_t max_sets,
                                        ocvx::Rng& rng) {
  const std::uint32_t all = (1u << universe) - 1;
  for (;;) {
    const std::size_t m = 1 + ocvx::uniform_index(rng, max_sets);
    std::vector<std::uint32_t> sets;
    std::uint32_t covered = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto s = static_cast<std::uint32_t>(1 + ocvx::uniform_index(rng, all));
      sets.push_back(s);
      covered |= s;
    }
    if (covered != all) continue;
    ocvx::SetCoverInstance instance{universe, {}, ocvx::uniform_index(rng, universe - 1)};
    for (const auto s : sets) instance.sets.push_back(members(s));
    return instance;
  }
}

}  // namespace sweeps
