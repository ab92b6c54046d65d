#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "domination.hpp"
#include "independent_set.hpp"
#include "lex_search.hpp"
#include "planarity.hpp"
#include "predicates.hpp"

namespace starfree {

enum class InvariantKind {
    alpha,
    gamma,
    gamma_k,
    alpha_k,
    chi,
    alphaF_chromatic,
    alphaF_kqfree,
    alphaF_trianglefree,
    bipartite,
    outerplanar,
    planar,
};

inline const std::vector<std::pair<InvariantKind, std::string>>& invariant_names() {
    static const std::vector<std::pair<InvariantKind, std::string>> names = {
        {InvariantKind::alpha, "alpha"},
        {InvariantKind::gamma, "gamma"},
        {InvariantKind::gamma_k, "gamma_k"},
        {InvariantKind::alpha_k, "alpha_k"},
        {InvariantKind::chi, "chi"},
        {InvariantKind::alphaF_chromatic, "alphaF_chromatic"},
        {InvariantKind::alphaF_kqfree, "alphaF_kqfree"},
        {InvariantKind::alphaF_trianglefree, "alphaF_trianglefree"},
        {InvariantKind::bipartite, "bipartite"},
        {InvariantKind::outerplanar, "outerplanar"},
        {InvariantKind::planar, "planar"},
    };
    return names;
}

inline std::string to_string(InvariantKind kind) {
    for (const auto& [k, name] : invariant_names())
        if (k == kind) return name;
    return "?";
}

inline InvariantKind parse_invariant_kind(const std::string& name) {
    for (const auto& [k, s] : invariant_names())
        if (s == name) return k;
    throw InvalidArgument("unknown invariant '" + name + "'");
}

struct InvariantValue {
    InvariantKind kind = InvariantKind::alpha;
    std::map<std::string, int> params;
    int value = 0;
    VertexSet witness{0};
    std::vector<int> coloring;  // only for chi
};

/// Order caps for the exponential searches; callers may raise them.
struct SolverLimits {
    int alphaF = 30;
    int max_induced = 22;
    int chi = 64;
    int planarity = kPlanarityMaxOrder;
};

namespace detail {

inline void check_cap(const Graph& g, int cap, const char* what) {
    if (g.order() > cap)
        throw SizeLimitExceeded(std::string(what) + " is capped at n <= " + std::to_string(cap) + " (got " +
                                std::to_string(g.order()) + ")");
}

inline InvariantValue make_value(const Graph& g, InvariantKind kind, std::map<std::string, int> params,
                                 const Bits& members) {
    InvariantValue v;
    v.kind = kind;
    v.params = std::move(params);
    v.witness = VertexSet(g.order(), members);
    v.value = v.witness.size();
    return v;
}

}  // namespace detail

inline InvariantValue alpha(const Graph& g) {
    detail::LexIndependentSearch search(g);
    return detail::make_value(g, InvariantKind::alpha, {}, search.maximum(g.vertices()));
}

inline InvariantValue gamma_k(const Graph& g, int k) {
    if (k < 1) throw InvalidArgument("gamma_k needs k >= 1");
    detail::DominationSearch search(g, k);
    return detail::make_value(g, k == 1 ? InvariantKind::gamma : InvariantKind::gamma_k, {{"k", k}},
                              search.minimum());
}

inline InvariantValue gamma(const Graph& g) {
    auto v = gamma_k(g, 1);
    v.params.clear();
    return v;
}

inline InvariantValue alpha_k(const Graph& g, int k) {
    if (k < 0) throw InvalidArgument("alpha_k needs k >= 0");
    if (k == 0) {
        auto v = alpha(g);
        v.kind = InvariantKind::alpha_k;
        v.params = {{"k", 0}};
        return v;
    }
    auto res = detail::lex_maximum(detail::KIndependentNode(g, k));
    return detail::make_value(g, InvariantKind::alpha_k, {{"k", k}}, res.members);
}

/// Chromatic number: clique lower bound, then k-colourability for k = omega, omega + 1, ...
inline InvariantValue chi(const Graph& g, const SolverLimits& limits = {}) {
    detail::check_cap(g, limits.chi, "chi");
    InvariantValue v;
    v.kind = InvariantKind::chi;
    v.witness = VertexSet(g.order());
    if (g.order() == 0) return v;
    const int omega = alpha(complement(g)).value;
    for (int k = omega;; ++k) {
        if (auto col = k_coloring(g, g.vertices(), k)) {
            v.value = k;
            v.coloring = std::move(*col);
            return v;
        }
    }
}

inline InvariantValue alphaF_chromatic(const Graph& g, int k, const SolverLimits& limits = {}) {
    if (k < 1) throw InvalidArgument("alphaF_chromatic needs k >= 1");
    detail::check_cap(g, limits.alphaF, "alphaF_chromatic");
    std::map<std::string, int> params{{"k", k}};
    if (k == 1) {
        auto v = alpha(g);
        v.kind = InvariantKind::alphaF_chromatic;
        v.params = params;
        return v;
    }
    if (is_k_colorable(g, g.vertices(), k))
        return detail::make_value(g, InvariantKind::alphaF_chromatic, params, g.vertices());
    auto res = detail::lex_maximum(detail::ColorableNode(g, k));
    return detail::make_value(g, InvariantKind::alphaF_chromatic, params, res.members);
}

inline InvariantValue alphaF_kqfree(const Graph& g, int q, const SolverLimits& limits = {}) {
    if (q < 3) throw InvalidArgument("alphaF_kqfree needs q >= 3");
    detail::check_cap(g, limits.alphaF, "alphaF_kqfree");
    std::map<std::string, int> params{{"q", q}};
    if (!contains_clique(g, q)) return detail::make_value(g, InvariantKind::alphaF_kqfree, params, g.vertices());
    auto res = detail::lex_maximum(detail::CliqueFreeNode(g, q));
    return detail::make_value(g, InvariantKind::alphaF_kqfree, params, res.members);
}

inline InvariantValue alphaF_trianglefree(const Graph& g, const SolverLimits& limits = {}) {
    auto v = alphaF_kqfree(g, 3, limits);
    v.kind = InvariantKind::alphaF_trianglefree;
    v.params.clear();
    return v;
}

/// Largest S with pred(g[S]); pred must be closed under vertex deletion.
inline InvariantValue max_induced(const Graph& g, const std::function<bool(const Graph&)>& pred,
                                  const SolverLimits& limits = {}) {
    detail::check_cap(g, limits.max_induced, "max_induced");
    auto res = detail::lex_maximum(detail::PredicateNode(g, &pred));
    return detail::make_value(g, InvariantKind::planar, {}, res.members);
}

inline InvariantValue max_induced_bipartite(const Graph& g, const SolverLimits& limits = {}) {
    auto v = alphaF_chromatic(g, 2, limits);
    v.kind = InvariantKind::bipartite;
    v.params.clear();
    return v;
}

inline InvariantValue max_induced_planar(const Graph& g, const SolverLimits& limits = {}) {
    const int cap = limits.planarity;
    auto v = max_induced(g, [cap](const Graph& h) { return is_planar(h, cap); }, limits);
    v.kind = InvariantKind::planar;
    return v;
}

inline InvariantValue max_induced_outerplanar(const Graph& g, const SolverLimits& limits = {}) {
    const int cap = limits.planarity;
    auto v = max_induced(g, [cap](const Graph& h) { return is_outerplanar(h, cap); }, limits);
    v.kind = InvariantKind::outerplanar;
    return v;
}

inline int param_or(const std::map<std::string, int>& params, const std::string& key, int fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

inline int require_param(const std::map<std::string, int>& params, const std::string& key, InvariantKind kind) {
    auto it = params.find(key);
    if (it == params.end()) throw InvalidArgument(to_string(kind) + " needs parameter --" + key);
    return it->second;
}

inline InvariantValue compute(const Graph& g, InvariantKind kind, const std::map<std::string, int>& params = {},
                              const SolverLimits& limits = {}) {
    switch (kind) {
        case InvariantKind::alpha: return alpha(g);
        case InvariantKind::gamma: return gamma(g);
        case InvariantKind::gamma_k: return gamma_k(g, require_param(params, "k", kind));
        case InvariantKind::alpha_k: return alpha_k(g, require_param(params, "k", kind));
        case InvariantKind::chi: return chi(g, limits);
        case InvariantKind::alphaF_chromatic: return alphaF_chromatic(g, require_param(params, "k", kind), limits);
        case InvariantKind::alphaF_kqfree: return alphaF_kqfree(g, require_param(params, "q", kind), limits);
        case InvariantKind::alphaF_trianglefree: return alphaF_trianglefree(g, limits);
        case InvariantKind::bipartite: return max_induced_bipartite(g, limits);
        case InvariantKind::outerplanar: return max_induced_outerplanar(g, limits);
        case InvariantKind::planar: return max_induced_planar(g, limits);
    }
    throw InvalidArgument("unknown invariant kind");
}

/// Re-checks that the witness certifies the value: right cardinality and the
/// defining predicate (for chi: a proper colouring with `value` colours).
inline bool verify_witness(const Graph& g, const InvariantValue& v) {
    const Bits s = v.witness.bits();
    if (v.kind != InvariantKind::chi && v.witness.size() != v.value) return false;
    const Graph h = induced(g, s);
    switch (v.kind) {
        case InvariantKind::alpha: return h.size() == 0;
        case InvariantKind::alpha_k: return h.order() == 0 || h.max_degree() <= param_or(v.params, "k", 0);
        case InvariantKind::gamma:
        case InvariantKind::gamma_k: {
            const int k = param_or(v.params, "k", 1);
            for (int u = 0; u < g.order(); ++u)
                if (!s.test(u) && g.neighbors(u).count_and(s) < k) return false;
            return true;
        }
        case InvariantKind::chi: return is_proper_coloring(g, v.coloring, v.value);
        case InvariantKind::alphaF_chromatic:
            return is_k_colorable(h, h.vertices(), param_or(v.params, "k", 1));
        case InvariantKind::alphaF_kqfree: return !contains_clique(h, param_or(v.params, "q", 3));
        case InvariantKind::alphaF_trianglefree: return !contains_clique(h, 3);
        case InvariantKind::bipartite: return is_bipartite(h);
        case InvariantKind::outerplanar: return is_outerplanar(h, kMaxVertices);
        case InvariantKind::planar: return is_planar(h, kMaxVertices);
    }
    return false;
}

}  // namespace starfree
