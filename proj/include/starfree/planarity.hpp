#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "graph.hpp"

namespace starfree {

inline constexpr int kPlanarityMaxOrder = 64;

namespace detail {

inline bool boyer_myrvold(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::property<boost::vertex_index_t, int>>;
    BoostGraph bg(g.order());
    for (auto e : g.edges()) boost::add_edge(e.u, e.v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

inline void check_planarity_order(const Graph& g, int cap) {
    if (g.order() > cap)
        throw SizeLimitExceeded("planarity predicates are capped at n <= " + std::to_string(cap));
}

}  // namespace detail

/// Euler prefilter (m <= 3n - 6 for n >= 3), then the Boyer-Myrvold
/// edge-addition test.
inline bool is_planar(const Graph& g, int cap = kPlanarityMaxOrder) {
    detail::check_planarity_order(g, cap);
    const int n = g.order(), m = g.size();
    if (n <= 4) return true;
    if (m > 3 * n - 6) return false;
    return detail::boyer_myrvold(g);
}

/// g is outerplanar iff g plus one universal vertex is planar.
inline bool is_outerplanar(const Graph& g, int cap = kPlanarityMaxOrder) {
    detail::check_planarity_order(g, cap);
    const int n = g.order(), m = g.size();
    if (n <= 3) return true;
    if (m > 2 * n - 3) return false;
    return detail::boyer_myrvold(join(g, complete_graph(1)));
}

}  // namespace starfree
