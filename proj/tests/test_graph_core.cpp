#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "netsparsity/errors.hpp"
#include "netsparsity/graph.hpp"
#include "oracles.hpp"

using namespace netsparsity;

namespace {

Graph parse(const std::string& text, bool weighted = false, std::optional<std::size_t> nodes = std::nullopt) {
    std::istringstream in(text);
    return parse_edge_list(in, weighted, nodes);
}

std::vector<Rational> values_of(const OrderedDegreeVector& b) { return b.values(); }

// a hub of degree 4 plus one extra edge between two leaves.
Graph hub_with_chord() { return parse("h\ta\nh\tb\nh\tc\nh\td\na\tb\n"); }

}  // namespace

TEST(ParseEdgeList, DenseIndicesInFirstAppearanceOrder) {
    const auto g = parse("a\tb\nb\tc");
    EXPECT_EQ(g.node_count(), 3u);
    ASSERT_EQ(g.edge_count(), 2u);
    const auto edges = g.edges();
    EXPECT_EQ(edges[0].u, 0u);
    EXPECT_EQ(edges[0].v, 1u);
    EXPECT_EQ(edges[1].u, 1u);
    EXPECT_EQ(edges[1].v, 2u);
    EXPECT_EQ(edges[0].weight, 1);
    EXPECT_EQ(g.label(2), "c");
}

TEST(ParseEdgeList, WeightedDuplicatesAccumulate) {
    const auto g = parse("a\tb\t3\na\tb\t2", true);
    ASSERT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(g.edges()[0].weight, 5);
    EXPECT_TRUE(g.weighted());
}

TEST(ParseEdgeList, CommentsBlankLinesAndCarriageReturns) {
    const auto g = parse("# header\n\na\tb\r\n  # indented comment\nb\tc\n");
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
}

TEST(ParseEdgeList, Rejections) {
    EXPECT_THROW(parse("a\ta"), ParseError);                        // self-loop
    EXPECT_THROW(parse("a\tb\na\tb"), ParseError);                  // unweighted duplicate
    EXPECT_THROW(parse("b\ta\na\tb"), ParseError);                  // duplicate, reversed
    EXPECT_THROW(parse("a\tb\t2"), ParseError);                     // weight column when unweighted
    EXPECT_THROW(parse("a\tb\t-1", true), ParseError);              // negative weight
    EXPECT_THROW(parse("a\tb\theavy", true), ParseError);           // non-numeric weight
    EXPECT_THROW(parse("a b"), ParseError);                         // not tab separated
    EXPECT_THROW(parse("a\tb\tc\td", true), ParseError);            // too many fields
    EXPECT_THROW(parse("a\tb\nb\tc", false, 2), ParseError);        // declared below labels
    EXPECT_THROW(parse(""), ParseError);                            // no nodes
}

TEST(ParseEdgeList, ErrorsCarryLineNumbers) {
    try {
        parse("a\tb\n# c\nc\tc\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(ParseEdgeList, DeclaredNodesAddIsolatedNodes) {
    const auto g = parse("a\tb", false, 5);
    EXPECT_EQ(g.node_count(), 5u);
    EXPECT_EQ(values_of(degree_vector(g)), oracle::rationals({0, 0, 0, 1, 1}));
}

TEST(ParseEdgeList, ZeroWeightRegistersNodesWithoutEdge) {
    const auto g = parse("a\tb\t0\nb\tc\t2", true);
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseEdgeList, RationalWeights) {
    const auto g = parse("a\tb\t1/2\nb\tc\t0.25", true);
    EXPECT_EQ(values_of(degree_vector(g)), (std::vector<Rational>{oracle::q(1, 4), oracle::q(1, 2), oracle::q(3, 4)}));
}

TEST(ParseEdgeList, WriteThenReadKeepsDegrees) {
    const auto g = parse("x\ty\t3\ny\tz\t1/3\nx\tz\t2", true);
    std::ostringstream out;
    write_edge_list(out, g);
    const auto back = parse(out.str(), true);
    EXPECT_EQ(degree_vector(back), degree_vector(g));
}

TEST(DegreeVector, HubWithChord) {
    const auto b = degree_vector(hub_with_chord());
    EXPECT_EQ(values_of(b), oracle::rationals({1, 1, 2, 2, 4}));
    EXPECT_EQ(b.total(), 10);
}

TEST(DegreeVector, CompleteGraph) {
    const auto b = degree_vector(complete_graph(4));
    EXPECT_EQ(values_of(b), oracle::rationals({3, 3, 3, 3}));
    EXPECT_EQ(b.total(), 12);
}

TEST(DegreeVector, WeightedTriangleUsesRowSums) {
    // adjacency rows: a = [0,2,4], b = [2,0,3], c = [4,3,0]
    const auto g = parse("a\tb\t2\nb\tc\t3\na\tc\t4", true);
    const auto b = degree_vector(g);
    EXPECT_EQ(values_of(b), oracle::rationals({5, 6, 7}));
    EXPECT_EQ(b.total(), 18);
    EXPECT_EQ(b.total(), 2 * g.total_weight());
}

TEST(DegreeVector, FromSequence) {
    const auto b = degree_vector_from_sequence(oracle::rationals({4, 2, 2, 1, 1}));
    EXPECT_EQ(values_of(b), oracle::rationals({1, 1, 2, 2, 4}));
    EXPECT_EQ(b.total(), 10);
    EXPECT_EQ(degree_vector_from_sequence(oracle::rationals({0, 0, 0})).total(), 0);
    EXPECT_EQ(degree_vector_from_sequence(oracle::rationals({2, 2, 2, 3, 3})).total(), 12);
}

TEST(DegreeVector, FromSequenceRejections) {
    EXPECT_THROW(degree_vector_from_sequence(oracle::rationals({1, -1})), std::invalid_argument);
    EXPECT_THROW(degree_vector_from_sequence(std::vector<Rational>{}), std::invalid_argument);
}

TEST(DegreeVector, MixedDenominatorsShareOneScale) {
    const std::vector<Rational> v{oracle::q(1, 3), oracle::q(1, 2), Rational(2)};
    const auto b = degree_vector_from_sequence(v);
    EXPECT_EQ(b.denominator(), 6);
    EXPECT_EQ(b.total(), oracle::q(17, 6));
    EXPECT_EQ(b[0], oracle::q(1, 3));
}

TEST(DegreeVector, OverflowingDenominatorsAreRejected) {
    std::vector<Rational> v;
    for (long p : {1000003L, 1000033L, 1000037L, 1000039L}) v.emplace_back(1, p);
    EXPECT_THROW(degree_vector_from_sequence(v), std::overflow_error);
}

TEST(AddEdge, ChordOnFourCycle) {
    const auto g = add_edge(cycle_graph(4), 0, 2);
    EXPECT_EQ(values_of(degree_vector(g)), oracle::rationals({2, 2, 3, 3}));
}

TEST(AddEdge, PathClosesIntoTriangle) {
    const auto g = add_edge(path_graph(3), 0, 2);
    EXPECT_EQ(values_of(degree_vector(g)), oracle::rationals({2, 2, 2}));
}

TEST(AddEdge, OriginalUnchanged) {
    const auto g = path_graph(3);
    (void)add_edge(g, 0, 2);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(AddEdge, Rejections) {
    const auto k5 = complete_graph(5);
    for (NodeIndex u = 0; u < 5; ++u)
        for (NodeIndex v = 0; v < 5; ++v) EXPECT_THROW(add_edge(k5, u, v), std::invalid_argument);
    EXPECT_THROW(add_edge(path_graph(3), 0, 7), std::invalid_argument);
}

TEST(GraphInvariants, FromEdgesValidates) {
    EXPECT_THROW(Graph::from_edges(3, {{0, 0, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph::from_edges(3, {{0, 3, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph::from_edges(3, {{0, 1, 1}, {1, 0, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph::from_edges(3, {{0, 1, 2}}, false), std::invalid_argument);
    EXPECT_THROW(Graph::from_edges(3, {{0, 1, 0}}, true), std::invalid_argument);
    EXPECT_THROW(Graph(0), std::invalid_argument);
}

TEST(GraphInvariants, RelabelingLeavesDegreeVectorUnchanged) {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng.below(20);
        const auto g = oracle::random_simple_graph(rng, n, 1, 3);
        std::vector<NodeIndex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t k = n - 1; k > 0; --k) std::swap(perm[k], perm[rng.below(k + 1)]);
        std::vector<Edge> relabeled;
        for (const auto& e : g.edges()) relabeled.push_back({perm[e.u], perm[e.v], e.weight});
        const auto h = Graph::from_edges(n, relabeled);
        EXPECT_EQ(degree_vector(g), degree_vector(h));
        EXPECT_EQ(degree_vector(g).total(), 2 * g.total_weight());
    }
}

TEST(GraphInvariants, AddEdgeRaisesExactlyTwoEntries) {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + rng.below(15);
        const auto g = oracle::random_simple_graph(rng, n, 1, 2);
        if (g.is_complete()) continue;
        NodeIndex u, v;
        do {
            u = rng.below(n);
            v = rng.below(n);
        } while (u == v || g.has_edge(u, v));
        auto before = g.node_degrees();
        auto after = add_edge(g, u, v).node_degrees();
        int changed = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (after[k] != before[k]) {
                ++changed;
                EXPECT_EQ(after[k], before[k] + 1);
            }
        }
        EXPECT_EQ(changed, 2);
        EXPECT_EQ(degree_vector(add_edge(g, u, v)).total(), degree_vector(g).total() + 2);
    }
}
