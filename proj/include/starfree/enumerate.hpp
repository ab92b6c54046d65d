#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "graph.hpp"
#include "isomorphism.hpp"

namespace starfree {

enum class CubicStrategy { edge_backtracking, vertex_augmentation };

namespace detail {

inline void check_cubic_order(int n) {
    if (n < 4 || n > 14 || n % 2 != 0) throw InvalidArgument("enumerate_cubic needs n even with 4 <= n <= 14");
}

/// Labelled search that fills the least vertex with spare degree, taking new
/// vertices strictly in discovery order, so every output is connected and
/// BFS-labelled. Isomorphic outputs are merged by canonical form.
class CubicEdgeSearch {
public:
    explicit CubicEdgeSearch(int n) : n_(n), rows_(n), deg_(n, 0) {}

    std::vector<Graph> run() {
        discovered_ = 1;
        fill(0, 0);
        std::vector<Graph> out;
        for (auto& [key, g] : found_) out.push_back(g);
        return out;
    }

private:
    void fill(int v, int min_w) {
        while (v < n_ && deg_[v] == 3) {
            ++v;
            min_w = 0;
        }
        if (v == n_) {
            Graph g = Graph::from_rows(n_, rows_);
            found_.emplace(canonical_form(g), std::move(g));
            return;
        }
        if (v >= discovered_) return;  // would leave v unreachable
        // spare degree among later vertices must be able to absorb v's need
        const int limit = std::min(discovered_ + 1, n_);
        for (int w = std::max(min_w, v + 1); w < limit; ++w) {
            if (deg_[w] == 3 || rows_[v].test(w)) continue;
            const bool fresh = w == discovered_;
            link(v, w);
            if (fresh) ++discovered_;
            fill(v, w + 1);
            if (fresh) --discovered_;
            unlink(v, w);
        }
    }

    void link(int a, int b) {
        rows_[a].set(b);
        rows_[b].set(a);
        ++deg_[a];
        ++deg_[b];
    }

    void unlink(int a, int b) {
        rows_[a].reset(b);
        rows_[b].reset(a);
        --deg_[a];
        --deg_[b];
    }

    int n_;
    int discovered_ = 1;
    std::vector<Bits> rows_;
    std::vector<int> deg_;
    std::map<std::string, Graph> found_;
};

class IsoClasses {
public:
    bool insert(const Graph& g) { return classes_.emplace(canonical_form(g), g).second; }

    std::vector<Graph> graphs() const {
        std::vector<Graph> out;
        for (const auto& [k, g] : classes_) out.push_back(g);
        return out;
    }

private:
    std::map<std::string, Graph> classes_;
};

/// Grows connected subcubic graphs one vertex at a time, the new vertex
/// joining 1..3 existing vertices of spare degree. Each level is reduced to
/// isomorphism classes, and a graph is dropped once its total spare degree
/// exceeds what the remaining vertices can fill.
inline std::vector<Graph> cubic_by_augmentation(int n) {
    std::vector<Graph> level{empty_graph(1)};
    for (int j = 1; j < n; ++j) {
        IsoClasses next;
        for (const auto& g : level) {
            std::vector<int> open;
            for (int v = 0; v < j; ++v)
                if (g.degree(v) < 3) open.push_back(v);
            const int m = static_cast<int>(open.size());
            for (int mask = 1; mask < (1 << m); ++mask) {
                const int links = __builtin_popcount(static_cast<unsigned>(mask));
                if (links > 3) continue;
                std::vector<Edge> edges = g.edges();
                for (int i = 0; i < m; ++i)
                    if (mask >> i & 1) edges.push_back({open[i], j});
                Graph h(j + 1, edges);
                int spare = 0;
                for (int v = 0; v <= j; ++v) spare += 3 - h.degree(v);
                const int remaining = n - (j + 1);
                if (spare > 3 * remaining) continue;
                if (remaining == 0 && spare != 0) continue;
                next.insert(h);
            }
        }
        level = next.graphs();
    }
    return level;
}

}  // namespace detail

/// All connected cubic graphs on n vertices (n even, 4..14), one per
/// isomorphism class, each in canonical labelling, sorted by canonical form.
inline std::vector<Graph> enumerate_cubic(int n, CubicStrategy strategy = CubicStrategy::edge_backtracking) {
    detail::check_cubic_order(n);
    std::vector<Graph> raw = strategy == CubicStrategy::edge_backtracking ? detail::CubicEdgeSearch(n).run()
                                                                          : detail::cubic_by_augmentation(n);
    std::vector<std::pair<std::string, Graph>> keyed;
    for (const auto& g : raw) keyed.emplace_back(canonical_form(g), canonical_graph(g));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    std::vector<Graph> out;
    for (auto& [k, g] : keyed) out.push_back(std::move(g));
    return out;
}

}  // namespace starfree
