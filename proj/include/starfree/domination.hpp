#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "graph.hpp"

namespace starfree::detail {

/// Exact minimum k-dominating set: every vertex outside D needs at least k
/// neighbours in D.
///
/// decide() is a set-cover search: pick the deficient vertex with the fewest
/// ways to be repaired, try each repair in ascending order, and forbid every
/// tried repair for the later siblings. A node is cut when the largest
/// `budget` single-vertex deficit reductions cannot clear the total deficit.
/// minimum() deepens the budget until decide() succeeds and then extracts the
/// lexicographically least optimum one vertex at a time.
class DominationSearch {
public:
    DominationSearch(const Graph& g, int k) : g_(g), k_(k), need_(g.order()) {}

    Bits minimum() {
        const int n = g_.order();
        int s = 0;
        while (!decide(s, Bits{}, Bits{})) ++s;
        Bits chosen, excluded;
        for (int v = 0; v < n && chosen.count() < s; ++v) {
            Bits with = chosen;
            with.set(v);
            if (decide(s - chosen.count() - 1, with, excluded))
                chosen = with;
            else
                excluded.set(v);
        }
        return chosen;
    }

    bool decide(int budget, const Bits& forced, const Bits& excluded) { return search(forced, excluded, budget); }

    long long nodes() const { return nodes_; }

private:
    bool search(const Bits& d, Bits x, int budget) {
        ++nodes_;
        const int n = g_.order();
        Bits deficient;
        int total = 0;
        for (int v = 0; v < n; ++v) {
            need_[v] = 0;
            if (d.test(v)) continue;
            const int have = g_.neighbors(v).count_and(d);
            if (have < k_) {
                need_[v] = k_ - have;
                total += need_[v];
                deficient.set(v);
            }
        }
        if (total == 0) return true;
        if (budget <= 0) return false;

        const Bits free = g_.vertices() - d - x;
        std::vector<int> gains;
        free.for_each([&](int u) { gains.push_back(need_[u] + g_.neighbors(u).count_and(deficient)); });
        if (static_cast<int>(gains.size()) > budget) {
            std::nth_element(gains.begin(), gains.begin() + budget, gains.end(), std::greater<>());
            gains.resize(budget);
        }
        int reach = 0;
        for (int gval : gains) reach += gval;
        if (reach < total) return false;

        int pick = -1, pick_count = 1 << 30;
        Bits pick_options;
        for (int v = deficient.first(); v >= 0; v = deficient.next(v)) {
            Bits options = g_.neighbors(v) & free;
            const int via_neighbors = options.count();
            if (free.test(v)) {
                if (via_neighbors < need_[v])
                    options = Bits::single(v);
                else
                    options.set(v);
            } else if (via_neighbors < need_[v]) {
                return false;
            }
            const int c = options.count();
            if (c == 0) return false;
            if (c < pick_count) {
                pick = v;
                pick_count = c;
                pick_options = options;
                if (c == 1) break;
            }
        }
        (void)pick;

        for (int o = pick_options.first(); o >= 0; o = pick_options.next(o)) {
            Bits next = d;
            next.set(o);
            if (search(next, x, budget - 1)) return true;
            x.set(o);
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> need_;
    long long nodes_ = 0;
};

}  // namespace starfree::detail
