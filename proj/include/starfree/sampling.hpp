#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "graph.hpp"
#include "predicates.hpp"
#include "rng.hpp"

namespace starfree {

enum class SampleStrategy { rejection, line_graph };

inline SampleStrategy parse_sample_strategy(const std::string& s) {
    if (s == "rejection") return SampleStrategy::rejection;
    if (s == "line_graph") return SampleStrategy::line_graph;
    throw InvalidArgument("unknown sampling strategy '" + s + "'");
}

inline std::string to_string(SampleStrategy s) { return s == SampleStrategy::rejection ? "rejection" : "line_graph"; }

/// G(order, p) drawn from `rng`.
inline Graph random_graph(int order, double p, CounterRng& rng) {
    std::vector<Edge> edges;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i)
            if (rng.bernoulli(p)) edges.push_back({i, j});
    return Graph(order, edges);
}

inline constexpr int kDefaultSampleBudget = 10000;

/// A K_{1,r}-free graph on at most n vertices, fully determined by
/// (r, n, seed, strategy).
///
/// rejection: attempt a draws an order in [1, n] and a density in [0, 1),
/// samples G(order, p) and keeps it if it is K_{1,r}-free.
/// line_graph: the line graph of a random graph, trimmed to at most n edges
/// first; always claw-free, so only offered for r = 3.
inline Graph sample_k1r_free(int r, int n, std::uint64_t seed, SampleStrategy strategy,
                             int budget = kDefaultSampleBudget) {
    if (r < 3) throw InvalidArgument("sample_k1r_free needs r >= 3");
    if (n < 1 || n > kMaxVertices) throw InvalidArgument("sample_k1r_free needs 1 <= n <= 512");
    if (strategy == SampleStrategy::line_graph) {
        if (r != 3) throw InvalidArgument("the line_graph strategy is for r = 3");
        CounterRng rng(seed, 0);
        int base = 2;
        while ((base + 1) * base / 2 <= n && base < 40) ++base;
        const int order = static_cast<int>(rng.uniform_int(2, base));
        const double p = rng.uniform01();
        std::vector<Edge> edges = random_graph(order, p, rng).edges();
        for (int i = static_cast<int>(edges.size()) - 1; i > 0; --i)
            std::swap(edges[i], edges[rng.uniform_int(0, i)]);
        if (static_cast<int>(edges.size()) > n) edges.resize(n);
        if (edges.empty()) return empty_graph(1);
        return line_graph(Graph(order, edges));
    }
    for (int attempt = 0; attempt < budget; ++attempt) {
        CounterRng rng(seed, static_cast<std::uint64_t>(attempt));
        const int order = static_cast<int>(rng.uniform_int(1, n));
        const double p = rng.uniform01();
        Graph g = random_graph(order, p, rng);
        if (is_k1r_free(g, r).free) return g;
    }
    throw BudgetExhausted("sample_k1r_free: 0 of " + std::to_string(budget) +
                              " rejection attempts accepted (acceptance rate 0)",
                          0.0);
}

}  // namespace starfree
