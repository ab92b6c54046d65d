#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace starfree;
using testing_support::random_graph;
using testing_support::random_permutation;
using testing_support::to_oracle;

namespace {

void expect_same(const InvariantValue& got, const oracle::Best& want, const Graph& g, const char* what) {
    EXPECT_EQ(got.value, want.value) << what << " on " << emit_graph6(g);
    EXPECT_EQ(got.witness.to_vector(), want.witness) << what << " witness on " << emit_graph6(g);
    EXPECT_TRUE(verify_witness(g, got)) << what << " on " << emit_graph6(g);
}

}  // namespace

TEST(Solvers, MatchExhaustiveSearch) {
    for (std::uint64_t s = 0; s < 150; ++s) {
        const Graph g = random_graph(100 + s, 1, 11);
        const auto o = to_oracle(g);
        expect_same(alpha(g), oracle::alpha(o), g, "alpha");
        expect_same(gamma(g), oracle::gamma(o), g, "gamma");
        expect_same(gamma_k(g, 2), oracle::gamma_k(o, 2), g, "gamma_2");
        expect_same(gamma_k(g, 3), oracle::gamma_k(o, 3), g, "gamma_3");
        expect_same(alpha_k(g, 1), oracle::alpha_k(o, 1), g, "alpha_1");
        expect_same(alpha_k(g, 2), oracle::alpha_k(o, 2), g, "alpha_2");
        expect_same(alphaF_chromatic(g, 2), oracle::alphaF_chromatic(o, 2), g, "bipartite");
        expect_same(alphaF_chromatic(g, 3), oracle::alphaF_chromatic(o, 3), g, "3-colourable");
        expect_same(alphaF_kqfree(g, 3), oracle::alphaF_kqfree(o, 3), g, "triangle-free");
        expect_same(alphaF_kqfree(g, 4), oracle::alphaF_kqfree(o, 4), g, "K4-free");
        const auto c = chi(g);
        EXPECT_EQ(c.value, oracle::chi(o)) << emit_graph6(g);
        EXPECT_TRUE(is_proper_coloring(g, c.coloring, c.value));
    }
}

TEST(Solvers, MaxInducedPlanarAndOuterplanar) {
    for (std::uint64_t s = 0; s < 25; ++s) {
        const Graph g = random_graph(700 + s, 5, 8);
        const auto o = to_oracle(g);
        const auto planar = oracle::extremal(o, true, [&](std::uint32_t m) {
            oracle::G h = o;
            for (auto& row : h.adj) row &= m;
            for (int v = 0; v < o.n; ++v)
                if (!(m >> v & 1u)) h.adj[v] = 0;
            return oracle::planar(h);
        });
        expect_same(max_induced_planar(g), planar, g, "planar");
        const auto outer = oracle::extremal(o, true, [&](std::uint32_t m) {
            oracle::G h = o;
            for (auto& row : h.adj) row &= m;
            for (int v = 0; v < o.n; ++v)
                if (!(m >> v & 1u)) h.adj[v] = 0;
            return oracle::outerplanar(h);
        });
        expect_same(max_induced_outerplanar(g), outer, g, "outerplanar");
    }
}

TEST(Solvers, SmallNamedGraphs) {
    const Graph c7 = cycle_graph(7);
    EXPECT_EQ(alpha(c7).value, 3);
    EXPECT_EQ(gamma(c7).value, 3);
    EXPECT_EQ(chi(c7).value, 3);
    EXPECT_EQ(alpha_k(c7, 1).value, 4);
    EXPECT_EQ(gamma_k(c7, 2).value, 4);
    EXPECT_EQ(alpha(complete_graph(6)).value, 1);
    EXPECT_EQ(gamma(empty_graph(5)).value, 5);
    EXPECT_EQ(chi(parse_graph6("IheA@GUAo")).value, 3);
    EXPECT_EQ(alphaF_trianglefree(complete_graph(5)).value, 2);
    EXPECT_EQ(max_induced_bipartite(cycle_graph(5)).value, 4);
}

TEST(Solvers, WitnessIsLexLeast) {
    // C6: both {0,2,4} and {1,3,5} are maximum independent sets
    EXPECT_EQ(alpha(cycle_graph(6)).witness.to_vector(), (std::vector<int>{0, 2, 4}));
    EXPECT_EQ(gamma(cycle_graph(6)).witness.to_vector(), (std::vector<int>{0, 3}));
}

TEST(Solvers, ParameterValidation) {
    EXPECT_THROW(gamma_k(cycle_graph(5), 0), InvalidArgument);
    EXPECT_THROW(alpha_k(cycle_graph(5), -1), InvalidArgument);
    EXPECT_THROW(alphaF_chromatic(cycle_graph(5), 0), InvalidArgument);
    EXPECT_THROW(alphaF_kqfree(cycle_graph(5), 2), InvalidArgument);
    EXPECT_THROW(compute(cycle_graph(5), InvariantKind::gamma_k, {}), InvalidArgument);
    EXPECT_THROW(parse_invariant_kind("omega"), InvalidArgument);
}

TEST(Solvers, SizeCaps) {
    const Graph big = cycle_graph(31);
    EXPECT_THROW(alphaF_chromatic(big, 2), SizeLimitExceeded);
    EXPECT_THROW(max_induced_planar(cycle_graph(23)), SizeLimitExceeded);
    SolverLimits raised;
    raised.alphaF = 40;
    EXPECT_EQ(alphaF_chromatic(big, 2, raised).value, 30);
}

TEST(Solvers, ComputeDispatch) {
    const Graph g = cycle_graph(9);
    EXPECT_EQ(compute(g, InvariantKind::alpha).value, 4);
    EXPECT_EQ(compute(g, InvariantKind::gamma_k, {{"k", 2}}).value, 5);
    EXPECT_EQ(compute(g, InvariantKind::alphaF_chromatic, {{"k", 2}}).value, 8);
    EXPECT_EQ(compute(g, InvariantKind::alphaF_kqfree, {{"q", 3}}).value, 9);
    EXPECT_EQ(compute(g, InvariantKind::planar).value, 9);
}

TEST(Properties, ComplementRelatesAlphaAndClique) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const Graph g = random_graph(3000 + s, 1, 14);
        const int a = alpha(g).value;
        EXPECT_TRUE(contains_clique(complement(g), a));
        EXPECT_FALSE(contains_clique(complement(g), a + 1));
    }
}

TEST(Properties, ChromaticTimesIndependence) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const Graph g = random_graph(4000 + s, 1, 14);
        EXPECT_GE(chi(g).value * alpha(g).value, g.order()) << emit_graph6(g);
    }
}

TEST(Properties, MonotoneUnderInducedSubgraphs) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const Graph g = random_graph(5000 + s, 2, 14);
        Bits keep = g.vertices();
        keep.reset(static_cast<int>(s % g.order()));
        const Graph h = induced(g, keep);
        EXPECT_LE(alpha(h).value, alpha(g).value);
        EXPECT_LE(alpha_k(h, 1).value, alpha_k(g, 1).value);
        EXPECT_LE(alphaF_chromatic(h, 2).value, alphaF_chromatic(g, 2).value);
        EXPECT_LE(chi(h).value, chi(g).value);
        // k-domination chain
        EXPECT_LE(gamma(g).value, gamma_k(g, 2).value);
        EXPECT_LE(gamma_k(g, 2).value, gamma_k(g, 3).value);
        EXPECT_LE(alpha(g).value, alpha_k(g, 1).value);
    }
}

TEST(Properties, DegreeBoundsOnDominationAndIndependence) {
    for (std::uint64_t s = 0; s < 150; ++s) {
        const Graph g = random_graph(6000 + s, 2, 14);
        const int n = g.order();
        const int gam = gamma(g).value;
        EXPECT_GE(gam * (g.max_degree() + 1), n) << emit_graph6(g);
        if (is_connected(g) && !is_complete(g) && g.max_degree() >= 3)
            EXPECT_GE(alpha(g).value * g.max_degree(), n) << emit_graph6(g);
    }
}

TEST(Properties, InvariantsSurviveRelabelling) {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const Graph g = random_graph(7000 + s, 1, 14);
        const Graph h = relabel(g, random_permutation(g.order(), s));
        EXPECT_EQ(alpha(g).value, alpha(h).value);
        EXPECT_EQ(gamma(g).value, gamma(h).value);
        EXPECT_EQ(chi(g).value, chi(h).value);
        EXPECT_EQ(alphaF_kqfree(g, 3).value, alphaF_kqfree(h, 3).value);
    }
}

TEST(Properties, Deterministic) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Graph g = random_graph(8000 + s, 5, 20);
        EXPECT_EQ(alpha(g).witness, alpha(g).witness);
        EXPECT_EQ(gamma(g).witness, gamma(g).witness);
        EXPECT_EQ(chi(g).coloring, chi(g).coloring);
    }
}
