#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace starfree;
using testing_support::random_graph;
using testing_support::random_permutation;
using testing_support::to_oracle;

TEST(Graph, BasicAccessors) {
    const Graph g = cycle_graph(5);
    EXPECT_EQ(g.order(), 5);
    EXPECT_EQ(g.size(), 5);
    EXPECT_TRUE(g.adjacent(0, 4));
    EXPECT_FALSE(g.adjacent(0, 2));
    EXPECT_EQ(regularity(g), 2);
    EXPECT_TRUE(is_connected(g));
    EXPECT_FALSE(is_bipartite(g));
    EXPECT_TRUE(is_bipartite(cycle_graph(6)));
    EXPECT_EQ(components(disjoint_union(g, g)).size(), 2u);
}

TEST(Graph, RejectsLoopsAndBadVertices) {
    const std::vector<Edge> loop{{1, 1}};
    EXPECT_THROW(Graph(3, loop), InvalidArgument);
    const std::vector<Edge> far{{0, 3}};
    EXPECT_THROW(Graph(3, far), InvalidArgument);
}

TEST(Graph, ComplementIsAnInvolution) {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const Graph g = random_graph(s, 1, 20);
        const Graph c = complement(g);
        EXPECT_EQ(g.size() + c.size(), g.order() * (g.order() - 1) / 2);
        EXPECT_EQ(complement(c), g);
    }
}

TEST(Graph, JoinAndLineGraph) {
    const Graph j = join(cycle_graph(5), complete_graph(2));
    EXPECT_EQ(j.order(), 7);
    EXPECT_EQ(j.size(), 5 + 1 + 10);
    const Graph l = line_graph(complete_graph(4));
    EXPECT_EQ(l.order(), 6);
    EXPECT_EQ(regularity(l), 4);
    EXPECT_TRUE(is_claw_free(line_graph(random_graph(3, 4, 10))));
}

TEST(Graph6, RoundTripThousandGraphs) {
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const Graph g = random_graph(1000 + s, 1, 30);
        const std::string text = emit_graph6(g);
        EXPECT_EQ(parse_graph6(text), g) << text;
        if (g.order() <= 20) {
            const auto ref = oracle::decode_graph6(text);
            ASSERT_TRUE(ref.has_value()) << text;
            EXPECT_EQ(ref->adj, to_oracle(g).adj) << text;
        }
    }
}

TEST(Graph6, KnownEncodings) {
    EXPECT_EQ(emit_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(emit_graph6(empty_graph(1)), "@");
    const Graph petersen = parse_graph6("IheA@GUAo");
    EXPECT_EQ(petersen.order(), 10);
    EXPECT_EQ(regularity(petersen), 3);
    EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6, LongOrderHeader) {
    const Graph g = cycle_graph(100);
    const std::string text = emit_graph6(g);
    EXPECT_EQ(text[0], 126);
    EXPECT_EQ(parse_graph6(text), g);
}

TEST(Graph6, MalformedInputIsRejected) {
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6("C"), ParseError);     // truncated
    EXPECT_THROW(parse_graph6("C~~"), ParseError);   // too long
    EXPECT_THROW(parse_graph6("A "), ParseError);    // bad byte
    EXPECT_THROW(parse_graph6("A@"), ParseError);    // padding bit set
    EXPECT_THROW(emit_graph6(empty_graph(0)), InvalidArgument);
}

TEST(EdgeList, ParseAndEmit) {
    const Graph g = parse_edge_list("# a path\n4\n0 1\n1 2\n\n2 3\n");
    EXPECT_EQ(g, path_graph(4));
    EXPECT_EQ(parse_edge_list(emit_edge_list(g)), g);
    EXPECT_EQ(parse_graph_text("0 1\n1 2\n2 0\n"), complete_graph(3));
    EXPECT_EQ(parse_graph_text("C~"), complete_graph(4));
    EXPECT_THROW(parse_edge_list("3\n0 0\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3\n0 x\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3\n0 5\n"), ParseError);
}

TEST(Predicates, StarFreenessWithWitness) {
    const auto claw = is_k1r_free(star_graph(3), 3);
    EXPECT_FALSE(claw.free);
    EXPECT_EQ(claw.witness, (std::vector<int>{0, 1, 2, 3}));
    EXPECT_TRUE(is_k1r_free(star_graph(3), 4).free);
    EXPECT_TRUE(is_claw_free(cycle_graph(7)));
    EXPECT_FALSE(is_claw_free(parse_graph6("IheA@GUAo")));
    EXPECT_THROW(is_k1r_free(cycle_graph(4), 1), InvalidArgument);
}

TEST(Predicates, StarFreenessAgreesWithBruteForce) {
    for (std::uint64_t s = 0; s < 300; ++s) {
        const Graph g = random_graph(5000 + s, 1, 12);
        const auto o = to_oracle(g);
        for (int r = 2; r <= 5; ++r) {
            bool star = false;
            for (int c = 0; c < o.n && !star; ++c)
                for (std::uint32_t leaves = o.adj[c]; leaves && !star; leaves = (leaves - 1) & o.adj[c])
                    star = oracle::pc(leaves) == r && oracle::independent(o, leaves);
            EXPECT_EQ(is_k1r_free(g, r).free, !star) << emit_graph6(g) << " r=" << r;
        }
    }
}

TEST(Predicates, DiamondsAndTriangles) {
    const Graph diamond(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_FALSE(is_diamond_free(diamond));
    EXPECT_TRUE(is_diamond_free(complete_graph(4)));  // induced only
    EXPECT_TRUE(every_vertex_in_triangle(diamond));
    EXPECT_FALSE(every_vertex_in_triangle(cycle_graph(6)));
    EXPECT_TRUE(contains_clique(complete_graph(5), 5));
    EXPECT_FALSE(contains_clique(cycle_graph(5), 3));
}

TEST(Planarity, KnownGraphs) {
    EXPECT_FALSE(is_planar(complete_graph(5)));
    EXPECT_TRUE(is_planar(complete_graph(4)));
    const Graph k33(6, std::vector<Edge>{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    EXPECT_FALSE(is_planar(k33));
    EXPECT_FALSE(is_planar(parse_graph6("IheA@GUAo")));
    EXPECT_TRUE(is_outerplanar(cycle_graph(8)));
    EXPECT_FALSE(is_outerplanar(complete_graph(4)));
    EXPECT_THROW(is_planar(empty_graph(65)), SizeLimitExceeded);
}

TEST(Planarity, AgreesWithMinorOracle) {
    int nonplanar = 0;
    for (std::uint64_t s = 0; s < 120; ++s) {
        const Graph g = random_graph(9000 + s, 5, 8);
        const auto o = to_oracle(g);
        const bool p = oracle::planar(o);
        nonplanar += !p;
        EXPECT_EQ(is_planar(g), p) << emit_graph6(g);
        if (g.order() <= 7) EXPECT_EQ(is_outerplanar(g), oracle::outerplanar(o)) << emit_graph6(g);
    }
    EXPECT_GT(nonplanar, 5);
}

TEST(Isomorphism, CanonicalFormIsRelabelInvariant) {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const Graph g = random_graph(20000 + s, 1, 16);
        const auto perm = random_permutation(g.order(), s);
        const Graph h = relabel(g, perm);
        EXPECT_EQ(canonical_form(g), canonical_form(h));
        const auto iso = find_isomorphism(g, h);
        ASSERT_TRUE(iso.has_value());
        for (const auto& e : g.edges()) EXPECT_TRUE(h.adjacent((*iso)[e.u], (*iso)[e.v]));
    }
}

TEST(Isomorphism, DistinguishesNonIsomorphicGraphs) {
    // two cospectral-ish cubic graphs on 6 vertices: prism and K_{3,3}
    const Graph prism(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    const Graph k33(6, std::vector<Edge>{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    EXPECT_FALSE(are_isomorphic(prism, k33));
    EXPECT_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
    EXPECT_TRUE(are_isomorphic(cycle_graph(9), relabel(cycle_graph(9), random_permutation(9, 3))));
}

TEST(Enumeration, CubicCountsAgreeAcrossStrategies) {
    const std::map<int, std::size_t> expected{{4, 1}, {6, 2}, {8, 5}, {10, 19}, {12, 85}};
    for (const auto& [n, count] : expected) {
        const auto a = enumerate_cubic(n, CubicStrategy::edge_backtracking);
        const auto b = enumerate_cubic(n, CubicStrategy::vertex_augmentation);
        EXPECT_EQ(a.size(), count) << "n=" << n;
        ASSERT_EQ(a.size(), b.size()) << "n=" << n;
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(canonical_form(a[i]), canonical_form(b[i]));
        for (const auto& g : a) {
            EXPECT_TRUE(is_cubic(g));
            EXPECT_TRUE(is_connected(g));
        }
    }
}

TEST(Enumeration, FourteenVertices) {
    EXPECT_EQ(enumerate_cubic(14, CubicStrategy::vertex_augmentation).size(), 509u);
}

TEST(Enumeration, RejectsBadOrders) {
    EXPECT_THROW(enumerate_cubic(7), InvalidArgument);
    EXPECT_THROW(enumerate_cubic(2), InvalidArgument);
    EXPECT_THROW(enumerate_cubic(16), InvalidArgument);
}

TEST(Sampling, DeterministicAndStarFree) {
    for (int r = 3; r <= 4; ++r)
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const Graph a = sample_k1r_free(r, 20, seed, SampleStrategy::rejection);
            EXPECT_EQ(a, sample_k1r_free(r, 20, seed, SampleStrategy::rejection));
            EXPECT_LE(a.order(), 20);
            EXPECT_TRUE(is_k1r_free(a, r).free);
        }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph l = sample_k1r_free(3, 24, seed, SampleStrategy::line_graph);
        EXPECT_LE(l.order(), 24);
        EXPECT_TRUE(is_claw_free(l));
    }
    EXPECT_THROW(sample_k1r_free(4, 10, 1, SampleStrategy::line_graph), InvalidArgument);
}

TEST(Sampling, BudgetExhaustion) {
    // r = 3 on n = 1 always succeeds; a zero budget cannot
    EXPECT_THROW(sample_k1r_free(3, 10, 1, SampleStrategy::rejection, 0), BudgetExhausted);
}

TEST(Rng, CounterStreamsAreIndependentOfOrder) {
    CounterRng a(5, 9), b(5, 9), c(5, 10);
    std::vector<std::uint64_t> xa, xb;
    for (int i = 0; i < 10; ++i) xa.push_back(a.next()), xb.push_back(b.next());
    EXPECT_EQ(xa, xb);
    EXPECT_NE(xa.front(), c.next());
    for (int i = 0; i < 1000; ++i) {
        const auto v = a.uniform_int(-3, 3);
        EXPECT_GE(v, -3);
        EXPECT_LE(v, 3);
    }
}
