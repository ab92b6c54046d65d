#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"
#include "predicates.hpp"

namespace starfree::detail {

/// Greedy clique cover of every suffix of `verts`, swept from the top down.
/// out[i] bounds how many of verts[i..] a feasible set can hold when each
/// clique contributes at most `cap` members.
inline void clique_cover_bounds(const Graph& g, const std::vector<int>& verts, int cap, std::vector<int>& out) {
    const int len = static_cast<int>(verts.size());
    out.assign(len, 0);
    std::vector<Bits> joinable;
    std::vector<int> sizes;
    int total = 0;
    for (int i = len - 1; i >= 0; --i) {
        const int v = verts[i];
        bool placed = false;
        for (std::size_t c = 0; c < joinable.size(); ++c) {
            if (!joinable[c].test(v)) continue;
            joinable[c] &= g.neighbors(v);
            if (sizes[c]++ < cap) ++total;
            placed = true;
            break;
        }
        if (!placed) {
            joinable.push_back(g.neighbors(v));
            sizes.push_back(1);
            if (cap > 0) ++total;
        }
        out[i] = total;
    }
}

struct LexMaxResult {
    Bits members;
    int size = 0;
    long long nodes = 0;
};

/// Include-first depth-first search over a hereditary family, branching on
/// candidates in ascending order. A node must provide size(), members(),
/// candidates(), with(v) and bounds(verts, out). Pruning only discards
/// subtrees that cannot beat the current record, so the first set found at
/// the final record size is the lexicographically least optimum.
template <class Node>
LexMaxResult lex_maximum(const Node& root) {
    LexMaxResult res;
    int best = -1;
    std::vector<int> bound;
    std::function<void(const Node&)> expand = [&](const Node& node) {
        ++res.nodes;
        if (node.size() > best) {
            best = node.size();
            res.members = node.members();
        }
        const Bits& cand = node.candidates();
        if (cand.none()) return;
        const std::vector<int> verts = cand.to_vector();
        node.bounds(verts, bound);
        const std::vector<int> local = bound;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (node.size() + local[i] <= best) break;
            expand(node.with(verts[i]));
        }
    };
    expand(root);
    res.size = best;
    return res;
}

/// Sets inducing maximum degree at most k.
class KIndependentNode {
public:
    KIndependentNode(const Graph& g, int k) : g_(&g), k_(k), cand_(g.vertices()), deg_(g.order(), 0) {}

    int size() const { return size_; }
    const Bits& members() const { return set_; }
    const Bits& candidates() const { return cand_; }

    KIndependentNode with(int v) const {
        KIndependentNode c = *this;
        c.set_.set(v);
        ++c.size_;
        g_->neighbors(v).for_each([&](int u) { ++c.deg_[u]; });
        Bits blocked;
        c.set_.for_each([&](int w) {
            if (c.deg_[w] >= k_) blocked |= g_->neighbors(w);
        });
        Bits next = cand_.above(v);
        next.for_each([&](int u) {
            if (c.deg_[u] > k_) blocked.set(u);
        });
        c.cand_ = next - blocked;
        return c;
    }

    void bounds(const std::vector<int>& verts, std::vector<int>& out) const {
        clique_cover_bounds(*g_, verts, k_ + 1, out);
    }

private:
    const Graph* g_;
    int k_;
    Bits set_, cand_;
    int size_ = 0;
    std::vector<int> deg_;
};

/// Sets whose induced subgraph is k-colourable (k >= 2).
class ColorableNode {
public:
    ColorableNode(const Graph& g, int k) : g_(&g), k_(k), cand_(g.vertices()) {}

    int size() const { return size_; }
    const Bits& members() const { return set_; }
    const Bits& candidates() const { return cand_; }

    ColorableNode with(int v) const {
        ColorableNode c = *this;
        c.set_.set(v);
        ++c.size_;
        c.cand_ = Bits{};
        cand_.above(v).for_each([&](int u) {
            Bits trial = c.set_;
            trial.set(u);
            // adding u only matters when it touches the current set
            if (!g_->neighbors(u).intersects(c.set_) || is_k_colorable(*g_, trial, k_)) c.cand_.set(u);
        });
        return c;
    }

    void bounds(const std::vector<int>& verts, std::vector<int>& out) const {
        clique_cover_bounds(*g_, verts, k_, out);
    }

private:
    const Graph* g_;
    int k_;
    Bits set_, cand_;
    int size_ = 0;
};

/// Sets whose induced subgraph has no K_q (q >= 2).
class CliqueFreeNode {
public:
    CliqueFreeNode(const Graph& g, int q) : g_(&g), q_(q), cand_(g.vertices()) {}

    int size() const { return size_; }
    const Bits& members() const { return set_; }
    const Bits& candidates() const { return cand_; }

    CliqueFreeNode with(int v) const {
        CliqueFreeNode c = *this;
        c.set_.set(v);
        ++c.size_;
        c.cand_ = Bits{};
        cand_.above(v).for_each([&](int u) {
            const Bits around = g_->neighbors(u) & c.set_;
            Bits scratch;
            if (around.count() < q_ - 1 || !find_clique_in(*g_, around, q_ - 1, scratch)) c.cand_.set(u);
        });
        return c;
    }

    void bounds(const std::vector<int>& verts, std::vector<int>& out) const {
        clique_cover_bounds(*g_, verts, q_ - 1, out);
    }

private:
    const Graph* g_;
    int q_;
    Bits set_, cand_;
    int size_ = 0;
};

/// Sets accepted by an arbitrary hereditary predicate on the induced subgraph.
class PredicateNode {
public:
    using Pred = std::function<bool(const Graph&)>;

    PredicateNode(const Graph& g, const Pred* pred) : g_(&g), pred_(pred) {
        g.vertices().for_each([&](int u) {
            if ((*pred_)(induced(g, Bits::single(u)))) cand_.set(u);
        });
    }

    int size() const { return size_; }
    const Bits& members() const { return set_; }
    const Bits& candidates() const { return cand_; }

    PredicateNode with(int v) const {
        PredicateNode c = *this;
        c.set_.set(v);
        ++c.size_;
        c.cand_ = Bits{};
        cand_.above(v).for_each([&](int u) {
            Bits trial = c.set_;
            trial.set(u);
            if ((*pred_)(induced(*g_, trial))) c.cand_.set(u);
        });
        return c;
    }

    void bounds(const std::vector<int>& verts, std::vector<int>& out) const {
        const int len = static_cast<int>(verts.size());
        out.resize(len);
        for (int i = 0; i < len; ++i) out[i] = len - i;
    }

private:
    const Graph* g_;
    const Pred* pred_;
    Bits set_, cand_;
    int size_ = 0;
};

}  // namespace starfree::detail
