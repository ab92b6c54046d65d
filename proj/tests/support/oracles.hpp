#pragma once

// Exhaustive reference implementations. They work on plain adjacency masks
// and share no code with the library, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct G {
    int n = 0;
    std::vector<std::uint32_t> adj;  // n <= 20

    bool edge(int a, int b) const { return adj[a] >> b & 1u; }
};

inline G make(int n, const std::vector<std::pair<int, int>>& edges) {
    G g{n, std::vector<std::uint32_t>(n, 0)};
    for (auto [a, b] : edges) {
        g.adj[a] |= 1u << b;
        g.adj[b] |= 1u << a;
    }
    return g;
}

inline int pc(std::uint32_t x) { return __builtin_popcount(x); }

inline std::vector<int> members(std::uint32_t s) {
    std::vector<int> out;
    for (int v = 0; s; ++v, s >>= 1)
        if (s & 1u) out.push_back(v);
    return out;
}

struct Best {
    int value = -1;
    std::vector<int> witness;
};

/// Extremal subset under `ok`; among optimal sets the lexicographically
/// least ascending vertex list.
inline Best extremal(const G& g, bool maximize, const std::function<bool(std::uint32_t)>& ok) {
    Best best;
    const std::uint32_t full = g.n == 32 ? ~0u : (1u << g.n) - 1;
    for (std::uint32_t s = 0;; ++s) {
        const int size = pc(s);
        const bool contender = best.value < 0 || (maximize ? size >= best.value : size <= best.value);
        if (contender && ok(s)) {
            const auto m = members(s);
            const bool better = best.value < 0 || (maximize ? size > best.value : size < best.value) ||
                                (size == best.value && m < best.witness);
            if (better) best = {size, m};
        }
        if (s == full) break;
    }
    return best;
}

inline int max_inside_degree(const G& g, std::uint32_t s) {
    int d = 0;
    for (int v : members(s)) d = std::max(d, pc(g.adj[v] & s));
    return d;
}

inline Best alpha_k(const G& g, int k) {
    return extremal(g, true, [&](std::uint32_t s) { return max_inside_degree(g, s) <= k; });
}

inline Best alpha(const G& g) { return alpha_k(g, 0); }

inline Best gamma_k(const G& g, int k) {
    return extremal(g, false, [&](std::uint32_t d) {
        for (int v = 0; v < g.n; ++v)
            if (!(d >> v & 1u) && pc(g.adj[v] & d) < k) return false;
        return true;
    });
}

inline Best gamma(const G& g) { return gamma_k(g, 1); }

inline bool independent(const G& g, std::uint32_t s) {
    for (int v : members(s))
        if (g.adj[v] & s) return false;
    return true;
}

/// Chromatic number by dynamic programming over subsets.
inline int chi(const G& g) {
    const std::uint32_t full = (1u << g.n) - 1;
    std::vector<char> indep(full + 1, 1);
    for (std::uint32_t s = 1; s <= full; ++s) {
        const int low = __builtin_ctz(s);
        indep[s] = indep[s & (s - 1)] && !(g.adj[low] & s);
    }
    std::vector<int> best(full + 1, 1 << 20);
    best[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        const std::uint32_t low = s & -s;
        const std::uint32_t rest = s ^ low;
        // colour classes containing the lowest vertex of s
        for (std::uint32_t t = rest;; t = (t - 1) & rest) {
            const std::uint32_t cls = t | low;
            if (indep[cls]) best[s] = std::min(best[s], best[s ^ cls] + 1);
            if (t == 0) break;
        }
    }
    return best[full];
}

inline bool two_colourable(const G& g, std::uint32_t s) {
    std::vector<int> side(g.n, -1);
    for (int start : members(s)) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : members(g.adj[v] & s)) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool k_colourable(const G& g, std::uint32_t s, int k) {
    if (k == 2) return two_colourable(g, s);
    const auto vs = members(s);
    std::vector<int> colour(g.n, -1);
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == vs.size()) return true;
        for (int c = 0; c < k; ++c) {
            bool clash = false;
            for (int u : members(g.adj[vs[i]] & s)) clash = clash || colour[u] == c;
            if (clash) continue;
            colour[vs[i]] = c;
            if (go(i + 1)) return true;
            colour[vs[i]] = -1;
        }
        return false;
    };
    return go(0);
}

inline Best alphaF_chromatic(const G& g, int k) {
    return extremal(g, true, [&](std::uint32_t s) { return k_colourable(g, s, k); });
}

inline bool has_clique(const G& g, std::uint32_t s, int q) {
    std::function<bool(std::uint32_t, int)> grow = [&](std::uint32_t cand, int need) {
        if (need == 0) return true;
        for (int v : members(cand))
            if (grow(cand & g.adj[v] & ~((2u << v) - 1), need - 1)) return true;
        return false;
    };
    return grow(s, q);
}

inline Best alphaF_kqfree(const G& g, int q) {
    return extremal(g, true, [&](std::uint32_t s) { return !has_clique(g, s, q); });
}

inline bool connected(const G& g, std::uint32_t s) {
    if (!s) return false;
    std::uint32_t seen = s & -s, frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v : members(frontier)) next |= g.adj[v] & s;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == s;
}

/// Wagner: planar iff there is no K5 and no K3,3 minor. Branch sets are
/// labelled in order of first appearance, so each set partition is visited
/// once. Meant for n <= 9.
inline bool planar(const G& g) {
    std::vector<std::uint32_t> sets;
    auto touching = [&](std::uint32_t a, std::uint32_t b) {
        for (int v : members(a))
            if (g.adj[v] & b) return true;
        return false;
    };
    auto minor_found = [&]() {
        for (auto s : sets)
            if (!connected(g, s)) return false;
        const int c = static_cast<int>(sets.size());
        if (c == 5) {
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    if (!touching(sets[i], sets[j])) return false;
            return true;
        }
        if (c == 6) {
            for (int mask = 0; mask < 64; ++mask) {
                if (pc(static_cast<std::uint32_t>(mask)) != 3 || !(mask & 1)) continue;
                bool all = true;
                for (int i = 0; i < 6 && all; ++i)
                    for (int j = 0; j < 6 && all; ++j)
                        if ((mask >> i & 1) && !(mask >> j & 1)) all = touching(sets[i], sets[j]);
                if (all) return true;
            }
        }
        return false;
    };
    std::function<bool(int)> go = [&](int v) {
        if (v == g.n) return minor_found();
        if (go(v + 1)) return true;  // v unused
        const int used = static_cast<int>(sets.size());
        for (int i = 0; i <= used && i < 6; ++i) {
            if (i == used) sets.push_back(0);
            sets[i] |= 1u << v;
            const bool found = go(v + 1);
            sets[i] &= ~(1u << v);
            if (i == used) sets.pop_back();
            if (found) return true;
        }
        return false;
    };
    return !go(0);
}

inline bool outerplanar(const G& g) {
    G h{g.n + 1, g.adj};
    h.adj.push_back((1u << g.n) - 1);
    for (int v = 0; v < g.n; ++v) h.adj[v] |= 1u << g.n;
    return planar(h);
}

/// graph6 decoding written from the format description, for n < 63.
inline std::optional<G> decode_graph6(const std::string& s) {
    if (s.empty() || s[0] < 63 || s[0] > 125) return std::nullopt;
    const int n = s[0] - 63;
    G g{n, std::vector<std::uint32_t>(n, 0)};
    std::vector<int> bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        const int x = s[i] - 63;
        if (x < 0 || x > 63) return std::nullopt;
        for (int b = 5; b >= 0; --b) bits.push_back(x >> b & 1);
    }
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            if (k >= bits.size()) return std::nullopt;
            if (bits[k]) {
                g.adj[i] |= 1u << j;
                g.adj[j] |= 1u << i;
            }
        }
    return g;
}

}  // namespace oracle
