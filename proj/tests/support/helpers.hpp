#pragma once

#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "starfree.hpp"

namespace testing_support {

inline oracle::G to_oracle(const starfree::Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
    return oracle::make(g.order(), edges);
}

/// Seeded G(n, p) with n in [lo, hi] and p in [0.1, 0.9].
inline starfree::Graph random_graph(std::uint64_t seed, int lo, int hi) {
    starfree::CounterRng rng(seed, 7);
    const int n = static_cast<int>(rng.uniform_int(lo, hi));
    const double p = 0.1 + 0.8 * rng.uniform01();
    return starfree::random_graph(n, p, rng);
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
    starfree::CounterRng rng(seed, 11);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
    return perm;
}

}  // namespace testing_support
