#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace starfree {

namespace detail {

using AdjLists = std::vector<std::vector<int>>;

inline AdjLists adjacency_lists(const Graph& g) {
    AdjLists adj(g.order());
    for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v).to_vector();
    return adj;
}

/// Ordered partition of the vertex set. Refinement only ever looks at cell
/// positions and neighbour counts, never at vertex ids, so the resulting cell
/// sequence is invariant under relabelling.
struct OrderedPartition {
    std::vector<std::vector<int>> cells;
    // splitters still to process; empty means "all cells" (no refinement yet)
    std::vector<std::vector<int>> pending;

    static OrderedPartition by_degree(const AdjLists& adj) {
        const int n = static_cast<int>(adj.size());
        std::vector<std::pair<int, int>> by;
        for (int v = 0; v < n; ++v) by.emplace_back(static_cast<int>(adj[v].size()), v);
        std::sort(by.begin(), by.end());
        OrderedPartition p;
        for (std::size_t i = 0; i < by.size(); ++i) {
            if (i == 0 || by[i].first != by[i - 1].first) p.cells.emplace_back();
            p.cells.back().push_back(by[i].second);
        }
        return p;
    }

    /// Refines to the coarsest equitable partition below the current one.
    /// Every cell ever created is queued once as a splitter, so the result is
    /// equitable; the order of work depends only on cell positions.
    void refine(const AdjLists& adj) {
        if (pending.empty()) pending = cells;
        std::vector<std::vector<int>> queue = std::move(pending);
        pending.clear();
        std::vector<int> count(adj.size(), 0);
        std::vector<std::pair<int, int>> counted;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::vector<int> splitter = queue[head];
            for (int s : splitter)
                for (int u : adj[s]) ++count[u];
            for (std::size_t xi = 0; xi < cells.size(); ++xi) {
                auto& cell = cells[xi];
                if (cell.size() == 1) continue;
                bool uniform = true;
                for (int v : cell) uniform = uniform && count[v] == count[cell.front()];
                if (uniform) continue;
                counted.clear();
                for (int v : cell) counted.emplace_back(count[v], v);
                std::sort(counted.begin(), counted.end());
                std::vector<std::vector<int>> parts;
                for (std::size_t i = 0; i < counted.size(); ++i) {
                    if (i == 0 || counted[i].first != counted[i - 1].first) parts.emplace_back();
                    parts.back().push_back(counted[i].second);
                }
                for (const auto& part : parts) queue.push_back(part);
                cells.erase(cells.begin() + static_cast<long>(xi));
                cells.insert(cells.begin() + static_cast<long>(xi), parts.begin(), parts.end());
                xi += parts.size() - 1;
            }
            for (int s : splitter)
                for (int u : adj[s]) count[u] = 0;
        }
    }

    /// Moves v into its own cell just before the rest of its cell. On an
    /// equitable partition only {v} needs to be used as a splitter afterwards.
    OrderedPartition individualize(int v) const {
        OrderedPartition p;
        p.pending.push_back({v});
        for (const auto& c : cells) {
            if (c.size() > 1 && std::find(c.begin(), c.end(), v) != c.end()) {
                p.cells.push_back({v});
                std::vector<int> rest;
                for (int u : c)
                    if (u != v) rest.push_back(u);
                p.cells.push_back(std::move(rest));
            } else {
                p.cells.push_back(c);
            }
        }
        return p;
    }

    /// First cell of least size > 1; -1 when discrete.
    int target_cell() const {
        int best = -1;
        std::size_t best_size = SIZE_MAX;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const std::size_t s = cells[i].size();
            if (s > 1 && s < best_size) best = static_cast<int>(i), best_size = s;
        }
        return best;
    }
};

inline std::string adjacency_string(const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    std::string s;
    s.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) s.push_back(g.adjacent(order[i], order[j]) ? '1' : '0');
    return s;
}

/// Individualisation-refinement tree walk keeping the leaf with the greatest
/// adjacency string. Leaves that tie with the first or the best leaf reveal
/// automorphisms; at any node, automorphisms fixing the individualised
/// prefix let us skip target vertices in an already explored orbit.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), adj_(adjacency_lists(g)) {}

    std::vector<int> run() {
        std::vector<int> prefix;
        walk(OrderedPartition::by_degree(adj_), prefix);
        return best_order_;
    }

private:
    void walk(OrderedPartition p, std::vector<int>& prefix) {
        p.refine(adj_);
        const int t = p.target_cell();
        if (t < 0) {
            leaf(p);
            return;
        }
        const std::vector<int> cell = p.cells[t];
        std::vector<int> explored;
        for (int v : cell) {
            if (!explored.empty() && same_orbit(prefix, explored, v)) continue;
            explored.push_back(v);
            prefix.push_back(v);
            walk(p.individualize(v), prefix);
            prefix.pop_back();
        }
    }

    void leaf(const OrderedPartition& p) {
        std::vector<int> order;
        for (const auto& c : p.cells) order.push_back(c.front());
        std::string s = adjacency_string(g_, order);
        if (first_order_.empty()) {
            first_order_ = order;
            first_ = s;
        } else if (s == first_) {
            record(first_order_, order);
        }
        if (best_order_.empty() || s > best_) {
            best_ = std::move(s);
            best_order_ = std::move(order);
        } else if (s == best_) {
            record(best_order_, order);
        }
    }

    void record(const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> gamma(g_.order());
        for (std::size_t i = 0; i < from.size(); ++i) gamma[from[i]] = to[i];
        autos_.push_back(std::move(gamma));
    }

    bool same_orbit(const std::vector<int>& prefix, const std::vector<int>& explored, int v) const {
        const int n = g_.order();
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const auto& gamma : autos_) {
            bool fixes = true;
            for (int u : prefix) fixes = fixes && gamma[u] == u;
            if (!fixes) continue;
            any = true;
            for (int x = 0; x < n; ++x) parent[find(x)] = find(gamma[x]);
        }
        if (!any) return false;
        for (int u : explored)
            if (find(u) == find(v)) return true;
        return false;
    }

    const Graph& g_;
    AdjLists adj_;
    std::string best_, first_;
    std::vector<int> best_order_, first_order_;
    std::vector<std::vector<int>> autos_;
};

}  // namespace detail

/// Canonical vertex order: the individualisation-refinement leaf with the
/// lexicographically greatest upper-triangle adjacency string.
inline std::vector<int> canonical_order(const Graph& g) {
    if (g.order() == 0) return {};
    return detail::CanonicalSearch(g).run();
}

/// Isomorphism-invariant string: order, then the canonical adjacency bits.
inline std::string canonical_form(const Graph& g) {
    return std::to_string(g.order()) + ":" + detail::adjacency_string(g, canonical_order(g));
}

inline Graph canonical_graph(const Graph& g) {
    const auto order = canonical_order(g);
    std::vector<int> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[order[i]] = i;
    return relabel(g, perm);
}

/// An isomorphism a -> b (mapping[v] is the image of v), if one exists.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
    if (a.order() == 0) return std::vector<int>{};
    const auto oa = canonical_order(a), ob = canonical_order(b);
    if (detail::adjacency_string(a, oa) != detail::adjacency_string(b, ob)) return std::nullopt;
    std::vector<int> mapping(a.order());
    for (int i = 0; i < a.order(); ++i) mapping[oa[i]] = ob[i];
    return mapping;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace starfree
