#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace starfree {

namespace detail {

class KColoring {
public:
    KColoring(const Graph& g, const Bits& within, int k) : g_(g), within_(within & g.vertices()), k_(k) {
        color_.assign(g.order(), -1);
        forbidden_.assign(g.order(), std::vector<int>(std::max(k, 1), 0));
    }

    std::optional<std::vector<int>> run() {
        if (within_.none()) return color_;
        if (k_ <= 0) return std::nullopt;
        remaining_ = within_.count();
        if (search(0)) return color_;
        return std::nullopt;
    }

private:
    int saturation(int v) const {
        int s = 0;
        for (int c = 0; c < k_; ++c) s += forbidden_[v][c] > 0;
        return s;
    }

    // DSATUR choice: most distinct neighbour colours, then most uncoloured
    // neighbours, then least index.
    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        within_.for_each([&](int v) {
            if (color_[v] >= 0) return;
            int sat = saturation(v);
            if (sat < best_sat) return;
            int deg = 0;
            (g_.neighbors(v) & within_).for_each([&](int u) { deg += color_[u] < 0; });
            if (sat > best_sat || deg > best_deg) best = v, best_sat = sat, best_deg = deg;
        });
        return best;
    }

    void assign(int v, int c, int delta) {
        (g_.neighbors(v) & within_).for_each([&](int u) { forbidden_[u][c] += delta; });
    }

    bool search(int used) {
        if (remaining_ == 0) return true;
        const int v = pick();
        if (saturation(v) >= k_) return false;
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden_[v][c]) continue;
            color_[v] = c;
            --remaining_;
            assign(v, c, +1);
            if (search(std::max(used, c + 1))) return true;
            assign(v, c, -1);
            ++remaining_;
            color_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    Bits within_;
    int k_;
    int remaining_ = 0;
    std::vector<int> color_;
    std::vector<std::vector<int>> forbidden_;
};

}  // namespace detail

/// A proper colouring of g[within] with colours 0..k-1 (entries outside
/// `within` stay -1), or nothing if g[within] is not k-colourable.
inline std::optional<std::vector<int>> k_coloring(const Graph& g, const Bits& within, int k) {
    return detail::KColoring(g, within, k).run();
}

inline bool is_k_colorable(const Graph& g, const Bits& within, int k) {
    if (k == 2) return is_bipartite(g, within);
    if (k == 1) {
        bool edge = false;
        (within & g.vertices()).for_each([&](int v) { edge = edge || g.neighbors(v).intersects(within); });
        return !edge;
    }
    return k_coloring(g, within, k).has_value();
}

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& color, int k) {
    if (static_cast<int>(color.size()) != g.order()) return false;
    for (int c : color)
        if (c < 0 || c >= k) return false;
    for (auto e : g.edges())
        if (color[e.u] == color[e.v]) return false;
    return true;
}

}  // namespace starfree
