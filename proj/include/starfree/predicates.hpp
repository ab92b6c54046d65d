#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"
#include "independent_set.hpp"

namespace starfree {

struct StarFreeResult {
    bool free = true;
    /// On failure: center first, then the r pairwise non-adjacent leaves.
    std::vector<int> witness;
};

/// K_{1,r}-freeness: no vertex has r pairwise non-adjacent neighbours.
/// The witness uses the least offending center and the lex-least leaf set.
inline StarFreeResult is_k1r_free(const Graph& g, int r) {
    if (r < 2) throw InvalidArgument("is_k1r_free needs r >= 2");
    detail::LexIndependentSearch search(g);
    for (int v = 0; v < g.order(); ++v) {
        const Bits nb = g.neighbors(v);
        if (nb.count() < r) continue;
        if (auto leaves = search.of_size(nb, r)) {
            StarFreeResult res{false, {v}};
            for (int u : leaves->to_vector()) res.witness.push_back(u);
            return res;
        }
    }
    return {};
}

inline bool is_claw_free(const Graph& g) { return is_k1r_free(g, 3).free; }

namespace detail {

inline bool find_clique_in(const Graph& g, const Bits& cand, int need, Bits& chosen) {
    if (need <= 0) return true;
    if (cand.count() < need) return false;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
        Bits rest = cand.above(v) & g.neighbors(v);
        if (rest.count() < need - 1) continue;
        chosen.set(v);
        if (find_clique_in(g, rest, need - 1, chosen)) return true;
        chosen.reset(v);
    }
    return false;
}

}  // namespace detail

/// Lex-least q-clique inside `within`, if any.
inline std::optional<Bits> find_clique(const Graph& g, int q, const Bits& within) {
    if (q < 1) throw InvalidArgument("clique size must be >= 1");
    Bits chosen;
    if (detail::find_clique_in(g, within & g.vertices(), q, chosen)) return chosen;
    return std::nullopt;
}

inline bool contains_clique(const Graph& g, int q) { return find_clique(g, q, g.vertices()).has_value(); }

/// Induced K_4 - e: an edge uv whose common neighbourhood holds a non-edge.
inline std::optional<std::vector<int>> find_induced_diamond(const Graph& g) {
    for (auto e : g.edges()) {
        const Bits common = g.neighbors(e.u) & g.neighbors(e.v);
        if (common.count() < 2) continue;
        for (int a = common.first(); a >= 0; a = common.next(a)) {
            const Bits rest = common.above(a) - g.neighbors(a);
            if (rest.any()) return std::vector<int>{e.u, e.v, a, rest.first()};
        }
    }
    return std::nullopt;
}

inline bool is_diamond_free(const Graph& g) { return !find_induced_diamond(g).has_value(); }

/// True when every vertex lies on a triangle.
inline bool every_vertex_in_triangle(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        bool ok = false;
        const Bits nb = g.neighbors(v);
        for (int u = nb.first(); u >= 0 && !ok; u = nb.next(u)) ok = g.neighbors(u).intersects(nb);
        if (!ok) return false;
    }
    return true;
}

}  // namespace starfree
