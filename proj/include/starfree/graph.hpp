#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"

namespace starfree {

struct Edge {
    int u;
    int v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1, n <= 512.
///
/// Adjacency is stored as one fixed-width bit row per vertex; rows are
/// symmetric with a zero diagonal. Every transformation returns a new Graph.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::span<const Edge> edges, std::string label = {}) : n_(n), label_(std::move(label)) {
        check_order(n);
        rows_.assign(n, Bits{});
        for (const auto& e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
                throw InvalidArgument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                      std::to_string(e.v));
            if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
            rows_[e.u].set(e.v);
            rows_[e.v].set(e.u);
        }
    }

    Graph(int n, std::initializer_list<Edge> edges, std::string label = {})
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(label)) {}

    Graph(int n, const std::vector<Edge>& edges, std::string label = {})
        : Graph(n, std::span<const Edge>(edges), std::move(label)) {}

    /// Builds from raw rows; rejects asymmetric rows, loops and bits >= n.
    static Graph from_rows(int n, std::vector<Bits> rows, std::string label = {}) {
        check_order(n);
        if (static_cast<int>(rows.size()) != n) throw InvalidArgument("row count does not match order");
        const Bits mask = Bits::prefix(n);
        for (int v = 0; v < n; ++v) {
            if (!rows[v].subset_of(mask)) throw InvalidArgument("adjacency row has bits beyond n");
            if (rows[v].test(v)) throw InvalidArgument("loop at vertex " + std::to_string(v));
        }
        for (int v = 0; v < n; ++v)
            for (int u = rows[v].first(); u >= 0; u = rows[v].next(u))
                if (!rows[u].test(v)) throw InvalidArgument("adjacency is not symmetric");
        Graph g;
        g.n_ = n;
        g.rows_ = std::move(rows);
        g.label_ = std::move(label);
        return g;
    }

    int order() const { return n_; }
    int size() const {
        int m = 0;
        for (const auto& r : rows_) m += r.count();
        return m / 2;
    }

    Bits vertices() const { return Bits::prefix(n_); }
    const Bits& neighbors(int v) const { return rows_[v]; }
    Bits closed_neighborhood(int v) const {
        Bits b = rows_[v];
        b.set(v);
        return b;
    }
    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    int degree(int v) const { return rows_[v].count(); }

    int max_degree() const {
        int d = 0;
        for (const auto& r : rows_) d = std::max(d, r.count());
        return d;
    }
    int min_degree() const {
        if (n_ == 0) return 0;
        int d = n_;
        for (const auto& r : rows_) d = std::min(d, r.count());
        return d;
    }

    /// Edges with u < v, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v)) out.push_back({u, v});
        return out;
    }

    const std::string& label() const { return label_; }
    Graph with_label(std::string label) const {
        Graph g = *this;
        g.label_ = std::move(label);
        return g;
    }

    /// Structural equality on labelled vertices; the label string is ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    static void check_order(int n) {
        if (n < 0 || n > kMaxVertices)
            throw InvalidArgument("graph order " + std::to_string(n) + " outside [0, 512]");
    }

    int n_ = 0;
    std::vector<Bits> rows_;
    std::string label_;
};

// ---------------------------------------------------------------------------
// Transformations

/// Subgraph induced by s, vertices renumbered in ascending original order.
inline Graph induced(const Graph& g, const Bits& s) {
    std::vector<int> keep = (s & g.vertices()).to_vector();
    std::vector<int> index(g.order(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
    std::vector<Bits> rows(keep.size());
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        (g.neighbors(keep[i]) & s).for_each([&](int u) { rows[i].set(index[u]); });
    return Graph::from_rows(static_cast<int>(keep.size()), std::move(rows));
}

inline Graph induced(const Graph& g, const VertexSet& s) { return induced(g, s.bits()); }

inline Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<Bits> rows(n);
    const Bits all = g.vertices();
    for (int v = 0; v < n; ++v) {
        rows[v] = all - g.neighbors(v);
        rows[v].reset(v);
    }
    return Graph::from_rows(n, std::move(rows));
}

/// Vertex v of g becomes vertex perm[v] of the result.
inline Graph relabel(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation size does not match order");
    std::vector<Edge> es;
    for (auto e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
    return Graph(n, es, g.label());
}

/// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    for (auto e : b.edges()) es.push_back({e.u + a.order(), e.v + a.order()});
    return Graph(a.order() + b.order(), es);
}

/// a + b: disjoint union plus every edge between a and b.
inline Graph join(const Graph& a, const Graph& b) {
    std::vector<Edge> es = disjoint_union(a, b).edges();
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) es.push_back({u, a.order() + v});
    return Graph(a.order() + b.order(), es);
}

inline Graph line_graph(const Graph& g) {
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());
    std::vector<Edge> out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u || es[i].v == es[j].v)
                out.push_back({i, j});
    return Graph(m, out);
}

// ---------------------------------------------------------------------------
// Small named graphs

inline Graph empty_graph(int n) { return Graph(n, std::span<const Edge>{}); }

inline Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, es);
}

inline Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    return Graph(n, es);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw InvalidArgument("cycle needs n >= 3");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.push_back({v, (v + 1) % n});
    return Graph(n, es);
}

/// K_{1,r}: center 0, leaves 1..r.
inline Graph star_graph(int r) {
    std::vector<Edge> es;
    for (int v = 1; v <= r; ++v) es.push_back({0, v});
    return Graph(r + 1, es);
}

/// Circulant graph on n vertices with the given connection distances.
inline Graph circulant_graph(int n, std::initializer_list<int> jumps) {
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v)
        for (int j : jumps) {
            int u = (v + j) % n;
            if (u != v && !std::count(es.begin(), es.end(), Edge{std::min(u, v), std::max(u, v)}))
                es.push_back({std::min(u, v), std::max(u, v)});
        }
    return Graph(n, es);
}

// ---------------------------------------------------------------------------
// Cheap structural queries

/// Common degree when the graph is regular.
inline std::optional<int> regularity(const Graph& g) {
    if (g.order() == 0) return 0;
    const int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

inline bool is_cubic(const Graph& g) { return g.order() > 0 && regularity(g) == 3; }

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    Bits seen = Bits::single(0), frontier = seen;
    while (frontier.any()) {
        Bits next;
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen == g.vertices();
}

/// Connected components, each as a vertex bitset, ordered by least vertex.
inline std::vector<Bits> components(const Graph& g) {
    std::vector<Bits> out;
    Bits rest = g.vertices();
    while (rest.any()) {
        Bits seen = Bits::single(rest.first()), frontier = seen;
        while (frontier.any()) {
            Bits next;
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next -= seen;
            seen |= next;
            frontier = next;
        }
        out.push_back(seen);
        rest -= seen;
    }
    return out;
}

/// Two-colouring by BFS.
inline bool is_bipartite(const Graph& g, const Bits& within) {
    std::vector<int> side(g.order(), -1);
    Bits rest = within;
    while (rest.any()) {
        int s = rest.first();
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        rest.reset(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            bool bad = false;
            (g.neighbors(v) & within).for_each([&](int u) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    rest.reset(u);
                    q.push(u);
                } else if (side[u] == side[v]) {
                    bad = true;
                }
            });
            if (bad) return false;
        }
    }
    return true;
}

inline bool is_bipartite(const Graph& g) { return is_bipartite(g, g.vertices()); }

inline bool is_complete(const Graph& g) { return g.size() * 2 == g.order() * (g.order() - 1); }

}  // namespace starfree
