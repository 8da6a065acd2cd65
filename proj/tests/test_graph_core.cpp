#include "support.hpp"

#include <gtest/gtest.h>

using namespace packcolor;

namespace {

std::vector<Graph> small_graph_zoo() {
    std::vector<Graph> zoo{petersen(), complete(4), cycle(6), cycle(5), path(7), prism(5), hypercube(3),
                           empty_graph(4)};
    for (std::uint32_t seed = 1; seed <= 40; ++seed)
        zoo.push_back(oracle::random_graph(2 + seed % 63, seed, 3, 0.5 + 0.01 * seed));
    return zoo;
}

}  // namespace

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
    EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    EXPECT_THROW(Graph::subcubic(5, star), std::invalid_argument);
}

TEST(Graph, BasicQueries) {
    const Graph g = Graph::from_edges(4, {{2, 0}, {0, 1}, {3, 0}});
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_EQ(g.degree(0), 3u);
    EXPECT_EQ(g.max_degree(), 3u);
    EXPECT_TRUE(g.is_subcubic());
    EXPECT_FALSE(g.is_cubic());
    EXPECT_TRUE(g.adjacent(3, 0));
    EXPECT_FALSE(g.adjacent(1, 2));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
    EXPECT_THROW(g.degree(4), std::out_of_range);
}

TEST(DistanceLeq, Examples) {
    EXPECT_TRUE(distance_leq(petersen(), 0, 7, 2));
    EXPECT_FALSE(distance_leq(petersen(), 0, 7, 1));
    EXPECT_FALSE(distance_leq(cycle(6), 0, 3, 2));
    EXPECT_TRUE(distance_leq(cycle(6), 0, 3, 3));
    EXPECT_TRUE(distance_leq(cycle(6), 4, 4, 0));
    EXPECT_FALSE(distance_leq(empty_graph(2), 0, 1, 100));
}

TEST(DistanceLeq, AgreesWithAllPairsOracle) {
    for (const Graph& g : small_graph_zoo()) {
        const auto d = oracle::all_pairs(g);
        DistanceQuery q(g);
        for (Vertex u = 0; u < g.order(); ++u) {
            const auto bfs = bfs_distances(g, u);
            for (Vertex v = 0; v < g.order(); ++v) {
                const unsigned expected = d[u][v];
                EXPECT_EQ(bfs[v] == kUnreachable ? oracle::kInf : bfs[v], expected);
                for (std::uint32_t r = 0; r <= 6; ++r)
                    ASSERT_EQ(q.within(u, v, r), expected <= r) << "u=" << u << " v=" << v << " r=" << r;
            }
        }
    }
}

TEST(DistanceLeq, BallMatchesOracle) {
    for (const Graph& g : small_graph_zoo()) {
        const auto d = oracle::all_pairs(g);
        DistanceQuery q(g);
        for (Vertex u = 0; u < g.order(); ++u)
            for (std::uint32_t r = 0; r <= 3; ++r) {
                auto ball = q.ball(u, r);
                std::sort(ball.begin(), ball.end());
                std::vector<Vertex> expected;
                for (Vertex v = 0; v < g.order(); ++v)
                    if (d[u][v] <= r)
                        expected.push_back(v);
                ASSERT_EQ(ball, expected);
            }
    }
}

TEST(Neighborhood, Examples) {
    EXPECT_EQ(neighborhood(petersen(), 0), (std::vector<Vertex>{1, 4, 5}));
    EXPECT_EQ(neighborhood(complete(4), 2), (std::vector<Vertex>{0, 1, 3}));
    EXPECT_TRUE(neighborhood(empty_graph(1), 0).empty());
}

TEST(Components, CountsAndDiameter) {
    std::size_t count = 0;
    connected_components(Graph::from_edges(5, {{0, 1}, {2, 3}}), &count);
    EXPECT_EQ(count, 3u);
    EXPECT_TRUE(is_connected(petersen()));
    EXPECT_EQ(diameter(petersen()), 2u);
    EXPECT_EQ(diameter(cycle(7)), 3u);
}

TEST(Graph, RelabelPreservesStructure) {
    const Graph p = petersen();
    const auto perm = oracle::permutation(p.order(), 3);
    const Graph q = relabel(p, perm);
    for (auto [u, v] : p.edges())
        EXPECT_TRUE(q.adjacent(perm[u], perm[v]));
    EXPECT_EQ(q.edge_count(), p.edge_count());
}

TEST(Subdivide, Counts) {
    const auto k4 = subdivide(complete(4));
    EXPECT_EQ(k4.graph.order(), 10u);
    EXPECT_EQ(k4.graph.edge_count(), 12u);
    const auto p = subdivide(petersen());
    EXPECT_EQ(p.graph.order(), 25u);
    EXPECT_EQ(p.graph.edge_count(), 30u);
}

TEST(Subdivide, TriangleBecomesHexagon) { EXPECT_TRUE(oracle::isomorphic(subdivide(cycle(3)).graph, cycle(6))); }

TEST(Subdivide, OriginMapIsTotal) {
    const Graph g = petersen();
    const auto d = subdivide(g);
    ASSERT_EQ(d.origin.size(), d.graph.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        EXPECT_TRUE(d.origin[v].original);
        EXPECT_EQ(d.origin[v].a, v);
        for (Vertex w : d.graph.neighbors(v))
            EXPECT_GE(w, g.order());
    }
    for (Vertex m = static_cast<Vertex>(g.order()); m < d.graph.order(); ++m) {
        EXPECT_FALSE(d.origin[m].original);
        EXPECT_TRUE(g.adjacent(d.origin[m].a, d.origin[m].b));
        EXPECT_EQ(d.graph.degree(m), 2u);
        EXPECT_TRUE(d.graph.adjacent(m, d.origin[m].a));
        EXPECT_TRUE(d.graph.adjacent(m, d.origin[m].b));
    }
}

TEST(Subdivide, DoublesAllDistances) {
    for (std::uint32_t seed = 0; seed < 100; ++seed) {
        const Graph g = oracle::random_graph(4 + seed % 30, 1000 + seed);
        const auto d = subdivide(g);
        const auto dg = oracle::all_pairs(g);
        for (Vertex u = 0; u < g.order(); ++u) {
            const auto dd = bfs_distances(d.graph, u);
            for (Vertex v = 0; v < g.order(); ++v) {
                const unsigned expected = dg[u][v] == oracle::kInf ? kUnreachable : 2 * dg[u][v];
                ASSERT_EQ(dd[v], expected) << "seed " << seed;
            }
        }
    }
}

TEST(Graph6, Examples) {
    const Graph k3 = parse_graph6("Bw");
    EXPECT_EQ(k3, complete(3));
    EXPECT_EQ(write_graph6(complete(3)), "Bw");
    EXPECT_EQ(oracle::graph6(complete(3)), "Bw");
    EXPECT_EQ(write_graph6(empty_graph(1)), "@");
    EXPECT_EQ(parse_graph6("@"), empty_graph(1));
    EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), complete(3));
}

// Encodings produced by an external graph6 implementation for the same
// labelled graphs.
TEST(Graph6, MatchesReferenceStrings) {
    EXPECT_EQ(write_graph6(complete(4)), "C~");
    EXPECT_EQ(write_graph6(petersen()), "IheA@GUAo");
    EXPECT_EQ(write_graph6(cycle(6)), "EhEG");
    EXPECT_EQ(write_graph6(path(5)), "DhC");
    EXPECT_EQ(write_graph6(cycle(62)),
              "}hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G????"
              "?_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@??"
              "??????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@???"
              "??????@_?????????_");
}

TEST(Graph6, Errors) {
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6("B"), ParseError);       // too short
    EXPECT_THROW(parse_graph6("Bww"), ParseError);     // trailing garbage
    EXPECT_THROW(parse_graph6("B\x01"), ParseError);   // non-printable
    EXPECT_THROW(parse_graph6("~?@?"), ParseError);    // n >= 63 header
    EXPECT_THROW(parse_graph6("Bx"), ParseError);      // padding bit set
    EXPECT_THROW(write_graph6(cycle(63)), std::invalid_argument);
}

TEST(Graph6, RoundTripAgainstReferenceEncoder) {
    for (const Graph& g : small_graph_zoo()) {
        const std::string text = write_graph6(g);
        EXPECT_EQ(text, oracle::graph6(g));
        EXPECT_EQ(parse_graph6(text), g);
        EXPECT_EQ(write_graph6(parse_graph6(text)), text);
    }
    for (std::size_t n = 1; n <= 6; ++n)
        for (const Graph& g : oracle::subcubic_corpus(n))
            EXPECT_EQ(parse_graph6(write_graph6(g)), g);
}

TEST(EdgeList, Examples) {
    EXPECT_EQ(parse_edge_list("3 3\n0 1\n1 2\n0 2"), complete(3));
    EXPECT_EQ(parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"), complete(4));
    EXPECT_EQ(parse_edge_list("# comment\n3 1\n\n0 2  # trailing\n"), Graph::from_edges(3, {{0, 2}}));
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
    try {
        parse_edge_list("2 1\n0 0");
        FAIL() << "self-loop accepted";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 1\n0 5\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 1\n0 x\n"), ParseError);
    EXPECT_THROW(parse_edge_list(""), ParseError);
}

TEST(EdgeList, RoundTrip) {
    for (const Graph& g : small_graph_zoo())
        EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
    const Graph big = oracle::random_graph(200, 5);
    EXPECT_EQ(parse_graph(write_edge_list(big)), big);
}

TEST(Format, Sniffing) {
    EXPECT_EQ(sniff_format("Bw"), GraphFormat::Graph6);
    EXPECT_EQ(sniff_format(">>graph6<<Bw"), GraphFormat::Graph6);
    EXPECT_EQ(sniff_format("3 0\n"), GraphFormat::EdgeList);
    EXPECT_EQ(sniff_format("# c\n3 0\n"), GraphFormat::EdgeList);
    EXPECT_EQ(parse_graph("IheA@GUAo\n"), petersen());
    EXPECT_THROW(sniff_format("  \n"), ParseError);
}
