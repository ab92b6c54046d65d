#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace starfree::detail {

/// Branch-and-bound maximum independent set restricted to a candidate set.
///
/// Vertices are branched in ascending order, include-first, so the first set
/// reaching a new record size is the lexicographically least set of that size.
/// The bound at each node is a greedy clique cover of every candidate suffix,
/// computed once per node by sweeping the candidates from the top down.
class LexIndependentSearch {
public:
    explicit LexIndependentSearch(const Graph& g) : g_(g) {}

    /// Lex-least maximum independent subset of `cand`.
    Bits maximum(const Bits& cand) {
        target_ = -1;
        best_size_ = greedy_size(cand) - 1;
        best_ = Bits{};
        found_ = false;
        stop_ = false;
        expand(Bits{}, 0, cand);
        return best_;
    }

    /// Lex-least independent subset of `cand` with exactly `size` vertices.
    std::optional<Bits> of_size(const Bits& cand, int size) {
        target_ = size;
        best_size_ = size - 1;
        best_ = Bits{};
        found_ = false;
        stop_ = false;
        expand(Bits{}, 0, cand);
        if (!found_) return std::nullopt;
        return best_;
    }

    long long nodes() const { return nodes_; }

private:
    int greedy_size(Bits rest) const {
        int size = 0;
        while (rest.any()) {
            int pick = -1, pick_deg = 1 << 30;
            rest.for_each([&](int v) {
                int d = g_.neighbors(v).count_and(rest);
                if (d < pick_deg) pick_deg = d, pick = v;
            });
            rest -= g_.closed_neighborhood(pick);
            ++size;
        }
        return size;
    }

    void expand(const Bits& s, int size, const Bits& cand) {
        ++nodes_;
        if (size > best_size_) {
            best_size_ = size;
            best_ = s;
            found_ = true;
            if (size == target_) {
                stop_ = true;
                return;
            }
        }
        if (cand.none()) return;

        const std::vector<int> verts = cand.to_vector();
        const int len = static_cast<int>(verts.size());
        std::vector<int> bound(len);
        cliques_.clear();
        for (int i = len - 1; i >= 0; --i) {
            const int v = verts[i];
            bool placed = false;
            for (auto& joinable : cliques_) {
                if (joinable.test(v)) {
                    joinable &= g_.neighbors(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) cliques_.push_back(g_.neighbors(v));
            bound[i] = static_cast<int>(cliques_.size());
        }

        for (int i = 0; i < len; ++i) {
            if (size + bound[i] <= best_size_) break;
            const int v = verts[i];
            Bits next = cand.above(v) - g_.neighbors(v);
            Bits with = s;
            with.set(v);
            expand(with, size + 1, next);
            if (stop_) return;
        }
    }

    const Graph& g_;
    int target_ = -1;
    int best_size_ = -1;
    Bits best_;
    bool found_ = false;
    bool stop_ = false;
    long long nodes_ = 0;
    std::vector<Bits> cliques_;  // scratch, only valid while computing bounds
};

}  // namespace starfree::detail
