#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace starfree {

namespace detail {

/// Builds a graph from named vertices so the figure transcriptions read like
/// the drawings. Vertices are numbered in order of first appearance.
class NamedBuilder {
public:
    int id(const std::string& name) {
        auto [it, fresh] = index_.emplace(name, static_cast<int>(names_.size()));
        if (fresh) names_.push_back(name);
        return it->second;
    }

    void edge(const std::string& a, const std::string& b) { edges_.push_back({id(a), id(b)}); }

    void path(std::initializer_list<const char*> seq) {
        const char* prev = nullptr;
        for (const char* s : seq) {
            if (prev) edge(prev, s);
            prev = s;
        }
    }

    void cycle(std::initializer_list<const char*> seq) {
        path(seq);
        edge(*(seq.end() - 1), *seq.begin());
    }

    Graph build(std::string label) const {
        return Graph(static_cast<int>(names_.size()), edges_, std::move(label));
    }

    const std::vector<std::string>& names() const { return names_; }

private:
    std::map<std::string, int> index_;
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
};

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidArgument(msg);
}

/// Copies of `block` laid side by side; copy c occupies [c*b, (c+1)*b).
inline std::vector<Edge> replicate(const Graph& block, int copies) {
    std::vector<Edge> edges;
    const int b = block.order();
    for (int c = 0; c < copies; ++c)
        for (auto e : block.edges()) edges.push_back({e.u + c * b, e.v + c * b});
    return edges;
}

}  // namespace detail

/// (r-1)K_k + K_t: the cliques come first, the t universal vertices last.
inline Graph join_cliques(int r, int k, int t) {
    detail::require(r >= 3 && k >= 1 && t >= 1, "join_cliques needs r >= 3, k >= 1, t >= 1");
    Graph cliques = empty_graph(0);
    for (int i = 0; i < r - 1; ++i) cliques = disjoint_union(cliques, complete_graph(k));
    return join(cliques, complete_graph(t))
        .with_label("(" + std::to_string(r - 1) + ")K" + std::to_string(k) + "+K" + std::to_string(t));
}

/// (r-1)K_{k+1} + K_t, the sharp graph for the k-independence bound.
inline Graph alpha_k_sharp(int r, int k, int t) {
    detail::require(r >= 3 && k >= 0 && t >= 1, "alpha_k_sharp needs r >= 3, k >= 0, t >= 1");
    return join_cliques(r, k + 1, t);
}

/// C_m plus a hub (vertex m) adjacent to the whole rim.
inline Graph wheel(int m) {
    detail::require(m >= 3, "wheel needs m >= 3");
    return join(cycle_graph(m), complete_graph(1)).with_label("W" + std::to_string(m));
}

inline Graph cycle(int n) {
    detail::require(n >= 3, "cycle needs n >= 3");
    return cycle_graph(n).with_label("C" + std::to_string(n));
}

/// F_{2k}: triangles {x_i, y_i, z_i} for i in [2k], linked by x_{2i-1}x_{2i},
/// y_{2i-1}y_{2i} and z_{2i}z_{2i+1} (indices mod 2k). Vertex 3(i-1)+{0,1,2}
/// is x_i, y_i, z_i.
inline Graph triangle_necklace(int k) {
    detail::require(k >= 1, "triangle_necklace needs k >= 1");
    const int m = 2 * k;
    auto x = [](int i) { return 3 * i; };
    auto y = [](int i) { return 3 * i + 1; };
    auto z = [](int i) { return 3 * i + 2; };
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        edges.push_back({x(i), y(i)});
        edges.push_back({y(i), z(i)});
        edges.push_back({x(i), z(i)});
    }
    for (int i = 0; i < m; i += 2) {
        edges.push_back({x(i), x(i + 1)});
        edges.push_back({y(i), y(i + 1)});
        edges.push_back({z(i + 1), z((i + 2) % m)});
    }
    return Graph(3 * m, edges, "F" + std::to_string(m));
}

namespace detail {

struct Gadget {
    Graph graph;
    int u = -1, v = -1, w = -1;  // attachment vertices
};

inline Gadget g12_gadget() {
    NamedBuilder b;
    b.cycle({"u1", "u2", "u3"});
    b.cycle({"v1", "v2", "v3"});
    b.cycle({"w1", "w2", "w3"});
    b.id("u4");
    b.id("v4");
    b.id("w4");
    b.path({"u3", "u4", "v4", "w4", "w3"});
    b.edge("v3", "v4");
    b.edge("u2", "v1");
    b.edge("v2", "w1");
    b.edge("u4", "w4");
    Gadget gd{b.build("G12")};
    gd.u = b.id("u1");
    gd.v = b.id("w2");
    return gd;
}

inline Gadget g20_gadget() {
    NamedBuilder b;
    for (std::string s : {"u", "w"}) {
        auto n = [&](int i) { return s + std::to_string(i); };
        b.edge(n(1), n(2));
        b.edge(n(2), n(3));
        b.edge(n(3), n(4));
        b.edge(n(2), n(4));
        b.edge(n(1), n(3));
        b.edge(n(5), n(6));
        b.edge(n(6), n(7));
        b.edge(n(5), n(7));
        b.edge(n(7), n(8));
        b.edge(n(1), n(5));
        b.edge(n(4), n(6));
    }
    b.cycle({"v2", "v3", "v4"});
    b.edge("v2", "v1");
    b.cycle({"v1", "u8", "w8"});
    Gadget gd{b.build("G20")};
    gd.u = b.id("v4");
    gd.v = b.id("v3");
    return gd;
}

inline Gadget g15_gadget() {
    NamedBuilder b;
    for (auto [p, q] : std::initializer_list<std::pair<const char*, const char*>>{
             {"t1", "t4"}, {"t1", "t5"}, {"t2", "t3"}, {"t2", "t5"}, {"t3", "t4"},
             {"a1", "t2"}, {"a1", "t3"}, {"a1", "a2"}, {"a1", "a3"}, {"a2", "a3"},
             {"b1", "t1"}, {"b1", "t4"}, {"b1", "b2"}, {"b1", "a2"}, {"b2", "a2"},
             {"c1", "b2"}, {"c1", "c2"}, {"c1", "t2"}, {"c1", "t5"}, {"b2", "c2"},
             {"d1", "d2"}, {"d1", "c2"}, {"d2", "c2"}, {"d1", "t4"}, {"d1", "t3"},
             {"e1", "d2"}, {"e1", "a3"}, {"d2", "a3"}, {"e1", "t5"}, {"e1", "t1"}})
        b.edge(p, q);
    Gadget gd{b.build("G15")};
    gd.v = b.id("c2");
    gd.u = b.id("d1");
    gd.w = b.id("d2");
    return gd;
}

/// k copies of a gadget whose degree-deficient vertices u, v get chained:
/// v_i u_{i+1} for i < k and v_k u_1 (for k = 1 the single edge u_1 v_1).
inline Graph chain(const Gadget& gd, int k, std::string label) {
    const int b = gd.graph.order();
    auto edges = replicate(gd.graph, k);
    for (int i = 0; i < k; ++i) edges.push_back({gd.v + i * b, gd.u + ((i + 1) % k) * b});
    return Graph(b * k, edges, std::move(label));
}

}  // namespace detail

inline Graph g12() { return detail::g12_gadget().graph; }

inline Graph h_cubic(int k) {
    detail::require(k >= 1, "h_cubic needs k >= 1");
    return detail::chain(detail::g12_gadget(), k, "H" + std::to_string(k) + ",cubic");
}

inline Graph g20() { return detail::g20_gadget().graph; }

inline Graph g_cubic(int k) {
    detail::require(k >= 2, "g_cubic needs k >= 2");
    return detail::chain(detail::g20_gadget(), k, "G" + std::to_string(k) + ",cubic");
}

inline Graph g15() { return detail::g15_gadget().graph; }

/// k copies of G15; in copy j the edges v_j u_j and v_j w_j are replaced by
/// v_{j+1} u_j and v_{j+1} w_j (cyclically).
inline Graph g15_ring(int k) {
    detail::require(k >= 2, "g15_ring needs k >= 2");
    const auto gd = detail::g15_gadget();
    const int b = gd.graph.order();
    std::vector<Edge> edges;
    for (int j = 0; j < k; ++j) {
        for (auto e : gd.graph.edges()) {
            const bool rewired = (e.u == gd.v || e.v == gd.v) &&
                                 (e.u == gd.u || e.v == gd.u || e.u == gd.w || e.v == gd.w);
            if (!rewired) edges.push_back({e.u + j * b, e.v + j * b});
        }
        const int next_v = gd.v + ((j + 1) % k) * b;
        edges.push_back({next_v, gd.u + j * b});
        edges.push_back({next_v, gd.w + j * b});
    }
    return Graph(b * k, edges, "G15(" + std::to_string(k) + ")");
}

/// The 4-regular planar claw-free graph on 30 vertices: a 10-cycle of v's,
/// u_i on v_{2i-1}v_{2i}, w's on the remaining consecutive v pairs, the w's
/// alternating with an inner 5-cycle of x's, and an outer 5-cycle of t's with
/// t_i on u_i u_{i+1}.
inline Graph g30() {
    detail::NamedBuilder b;
    auto n = [](const char* s, int i) { return std::string(s) + std::to_string(i); };
    for (int i = 1; i <= 10; ++i) b.edge(n("v", i), n("v", i % 10 + 1));
    for (int i = 1; i <= 5; ++i) b.edge(n("x", i), n("x", i % 5 + 1));
    for (int i = 1; i <= 5; ++i) {
        b.edge(n("u", i), n("v", 2 * i - 1));
        b.edge(n("u", i), n("v", 2 * i));
    }
    b.edge("w1", "v10");
    b.edge("w1", "v1");
    for (int i = 2; i <= 5; ++i) {
        b.edge(n("w", i), n("v", 2 * i - 2));
        b.edge(n("w", i), n("v", 2 * i - 1));
    }
    for (int i = 1; i <= 5; ++i) {
        b.edge(n("w", i), n("x", i));
        b.edge(n("x", i), n("w", i % 5 + 1));
    }
    for (int i = 1; i <= 5; ++i) {
        b.edge(n("t", i), n("u", i));
        b.edge(n("t", i), n("u", i % 5 + 1));
        b.edge(n("t", i), n("t", i % 5 + 1));
    }
    return b.build("G30");
}

/// C_5 + K_k for k in [3]; the clique is vertices 5..4+k.
inline Graph c5_join_kk(int k) {
    detail::require(k >= 1 && k <= 3, "c5_join_kk needs k in [3]");
    return join(cycle_graph(5), complete_graph(k)).with_label("C5+K" + std::to_string(k));
}

/// Group j (of p) holds r-1 copies of K_{k+1} and a clique X_j of order
/// 2t+mu. The first t+mu vertices of X_j see every copy of group j; the last
/// t see copies 2..r-1 of group j and copy 1 of group j+1 (cyclically).
inline Graph prop61(int r, int k, int p, int t, int mu) {
    detail::require(r >= 3 && r >= k + 1, "prop61 needs r >= max(3, k+1)");
    detail::require(k >= 0 && p >= 1 && t >= 1 && (mu == 0 || mu == 1),
                    "prop61 needs k >= 0, p >= 1, t >= 1, mu in {0,1}");
    const int copy_size = k + 1;
    const int x_size = 2 * t + mu;
    const int group = (r - 1) * copy_size + x_size;
    auto copy_vertex = [&](int j, int c, int i) { return j * group + c * copy_size + i; };
    auto x_vertex = [&](int j, int i) { return j * group + (r - 1) * copy_size + i; };
    std::vector<Edge> edges;
    for (int j = 0; j < p; ++j) {
        for (int c = 0; c < r - 1; ++c)
            for (int a = 0; a < copy_size; ++a)
                for (int b2 = a + 1; b2 < copy_size; ++b2) edges.push_back({copy_vertex(j, c, a), copy_vertex(j, c, b2)});
        for (int a = 0; a < x_size; ++a)
            for (int b2 = a + 1; b2 < x_size; ++b2) edges.push_back({x_vertex(j, a), x_vertex(j, b2)});
        for (int a = 0; a < x_size; ++a) {
            const bool first_role = a < t + mu;
            for (int c = 0; c < r - 1; ++c) {
                const int owner = (first_role || c > 0) ? j : (j + 1) % p;
                for (int i = 0; i < copy_size; ++i) edges.push_back({x_vertex(j, a), copy_vertex(owner, c, i)});
            }
        }
    }
    return Graph(p * group, edges,
                 "P61(r=" + std::to_string(r) + ",k=" + std::to_string(k) + ",p=" + std::to_string(p) +
                     ",t=" + std::to_string(t) + ",mu=" + std::to_string(mu) + ")");
}

enum class FamilyName {
    JoinCliques,
    Wheel,
    Cycle,
    TriangleNecklace,
    G12Chain,
    G20Chain,
    G15,
    G15Ring,
    G30,
    C5JoinKk,
    AlphaKSharp,
    Prop61,
};

struct FamilySpec {
    FamilyName name = FamilyName::Cycle;
    std::map<std::string, int> params;
};

struct FamilyInfo {
    FamilyName name;
    std::string id;
    std::vector<std::string> params;  // required parameter names
};

inline const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table = {
        {FamilyName::JoinCliques, "join_cliques", {"r", "k", "t"}},
        {FamilyName::Wheel, "wheel", {"m"}},
        {FamilyName::Cycle, "cycle", {"n"}},
        {FamilyName::TriangleNecklace, "triangle_necklace", {"k"}},
        {FamilyName::G12Chain, "h_cubic", {"k"}},
        {FamilyName::G20Chain, "g_cubic", {"k"}},
        {FamilyName::G15, "g15", {}},
        {FamilyName::G15Ring, "g15_ring", {"k"}},
        {FamilyName::G30, "g30", {}},
        {FamilyName::C5JoinKk, "c5_join_kk", {"k"}},
        {FamilyName::AlphaKSharp, "alpha_k_sharp", {"r", "k", "t"}},
        {FamilyName::Prop61, "prop61", {"r", "k", "p", "t", "mu"}},
    };
    return table;
}

inline const FamilyInfo& family_info(FamilyName name) {
    for (const auto& f : family_table())
        if (f.name == name) return f;
    throw InvalidArgument("unknown family");
}

inline FamilyName parse_family_name(const std::string& id) {
    for (const auto& f : family_table())
        if (f.id == id) return f.name;
    if (id == "g12") return FamilyName::G12Chain;
    if (id == "g20") return FamilyName::G20Chain;
    throw InvalidArgument("unknown family '" + id + "'");
}

inline std::string to_string(FamilyName name) { return family_info(name).id; }

/// Builds the graph a spec describes. "g12"/"g20" are accepted as k = 1 of
/// the chains when no k is given (returning the bare gadget).
inline Graph make_family(const FamilySpec& spec) {
    auto get = [&](const std::string& key) {
        auto it = spec.params.find(key);
        if (it == spec.params.end())
            throw InvalidArgument("family " + to_string(spec.name) + " needs parameter '" + key + "'");
        return it->second;
    };
    switch (spec.name) {
        case FamilyName::JoinCliques: return join_cliques(get("r"), get("k"), get("t"));
        case FamilyName::Wheel: return wheel(get("m"));
        case FamilyName::Cycle: return cycle(get("n"));
        case FamilyName::TriangleNecklace: return triangle_necklace(get("k"));
        case FamilyName::G12Chain: return spec.params.count("k") ? h_cubic(get("k")) : g12();
        case FamilyName::G20Chain: return spec.params.count("k") ? g_cubic(get("k")) : g20();
        case FamilyName::G15: return g15();
        case FamilyName::G15Ring: return g15_ring(get("k"));
        case FamilyName::G30: return g30();
        case FamilyName::C5JoinKk: return c5_join_kk(get("k"));
        case FamilyName::AlphaKSharp: return alpha_k_sharp(get("r"), get("k"), get("t"));
        case FamilyName::Prop61: return prop61(get("r"), get("k"), get("p"), get("t"), get("mu"));
    }
    throw InvalidArgument("unknown family");
}

/// The r for which the family is K_{1,r}-free by construction.
inline int declared_r(const FamilySpec& spec) {
    switch (spec.name) {
        case FamilyName::JoinCliques:
        case FamilyName::AlphaKSharp:
        case FamilyName::Prop61: return spec.params.at("r");
        case FamilyName::Wheel: return std::max(3, spec.params.at("m") / 2 + 1);
        default: return 3;
    }
}

}  // namespace starfree
