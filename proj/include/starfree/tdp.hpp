#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "families.hpp"
#include "isomorphism.hpp"
#include "predicates.hpp"

namespace starfree {

enum class UnitKind { triangle, diamond };

struct TDUnit {
    UnitKind kind = UnitKind::triangle;
    std::vector<int> vertices;  // ascending

    friend bool operator==(const TDUnit&, const TDUnit&) = default;
};

/// Units sorted by their least vertex.
struct TDPartition {
    std::vector<TDUnit> units;

    int count(UnitKind kind) const {
        return static_cast<int>(std::count_if(units.begin(), units.end(), [&](const TDUnit& u) { return u.kind == kind; }));
    }

    friend bool operator==(const TDPartition&, const TDPartition&) = default;
};

/// The triangle-diamond partition of a connected, claw-free, cubic graph
/// other than K_4. Every induced diamond becomes a unit; what is left splits
/// into vertex-disjoint triangles.
inline TDPartition td_partition(const Graph& g) {
    const std::string op = "td_partition";
    if (!is_cubic(g)) throw HypothesisFailed(op, "cubic");
    if (!is_connected(g)) throw HypothesisFailed(op, "connected");
    if (!is_claw_free(g)) throw HypothesisFailed(op, "claw-free");
    if (g.order() == 4) throw HypothesisFailed(op, "not-K4");

    TDPartition p;
    Bits used;
    for (auto e : g.edges()) {
        const Bits common = g.neighbors(e.u) & g.neighbors(e.v);
        if (common.count() != 2) continue;
        const int a = common.first(), b = common.next(a);
        if (g.adjacent(a, b)) continue;
        Bits unit = common;
        unit.set(e.u);
        unit.set(e.v);
        if (unit.intersects(used)) throw std::logic_error("td_partition: overlapping diamonds");
        used |= unit;
        p.units.push_back({UnitKind::diamond, unit.to_vector()});
    }
    for (int v = 0; v < g.order(); ++v) {
        if (used.test(v)) continue;
        const Bits nb = g.neighbors(v) - used;
        std::vector<TDUnit> found;
        for (int a = nb.first(); a >= 0; a = nb.next(a)) {
            const Bits rest = nb.above(a) & g.neighbors(a);
            for (int b = rest.first(); b >= 0; b = rest.next(b)) found.push_back({UnitKind::triangle, {v, a, b}});
        }
        if (found.size() != 1) throw std::logic_error("td_partition: vertex " + std::to_string(v) + " is not in exactly one free triangle");
        for (int u : found[0].vertices) used.set(u);
        p.units.push_back(found[0]);
    }
    for (auto& u : p.units) std::sort(u.vertices.begin(), u.vertices.end());
    std::sort(p.units.begin(), p.units.end(),
              [](const TDUnit& a, const TDUnit& b) { return a.vertices.front() < b.vertices.front(); });
    return p;
}

/// Membership in T_cubic = {F_{2k} : k >= 1}, by isomorphism with the
/// necklace of matching order.
inline bool is_Tcubic(const Graph& g) {
    const int n = g.order();
    if (n < 6 || n % 6 != 0) return false;
    if (!is_cubic(g) || !is_connected(g) || !is_claw_free(g) || !is_diamond_free(g)) return false;
    return are_isomorphic(g, triangle_necklace(n / 6));
}

}  // namespace starfree
