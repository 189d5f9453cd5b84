#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "domseq/graph.hpp"
#include "domseq/graph_io.hpp"
#include "domseq/vertex_set.hpp"

using namespace domseq;

TEST_CASE("vertex set basics across both words") {
    VertexSet s;
    CHECK(s.empty());
    CHECK_EQ(s.count(), 0);
    CHECK_EQ(s.first(), -1);

    s.set(3);
    s.set(100);
    CHECK(s.test(3));
    CHECK(s.test(100));
    CHECK_FALSE(s.test(4));
    CHECK_EQ(s.count(), 2);
    CHECK_EQ(s.first(), 3);

    s.reset(3);
    CHECK_EQ(s.first(), 100);
    CHECK_FALSE(s.empty());

    CHECK_EQ(VertexSet::single(77).elements(), std::vector<int>{77});
}

TEST_CASE("vertex set range and operators") {
    VertexSet r = VertexSet::range(70);
    CHECK_EQ(r.count(), 70);
    CHECK(r.test(0));
    CHECK(r.test(69));
    CHECK_FALSE(r.test(70));

    VertexSet a = VertexSet::single(1) | VertexSet::single(65);
    CHECK(a.subset_of(r));
    CHECK_FALSE(r.subset_of(a));
    CHECK(a.intersects(r));

    VertexSet b = r - a;
    CHECK_EQ(b.count(), 68);
    CHECK_FALSE(b.test(65));
    CHECK_EQ((a & b).count(), 0);
    CHECK_EQ((a | b), r);
    CHECK_FALSE(a.intersects(b));
}

TEST_CASE("vertex set iteration is ascending") {
    VertexSet s;
    s.set(90);
    s.set(2);
    s.set(63);
    s.set(64);
    CHECK_EQ(s.elements(), std::vector<int>{2, 63, 64, 90});
}

TEST_CASE("graph construction and guards") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 2);  // duplicate is a no-op
    CHECK_EQ(g.edge_count(), 2);
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_EQ(g.degree(1), 2);
    CHECK_EQ(g.min_degree(), 0);
    CHECK_EQ(g.max_degree(), 2);
    CHECK(g.has_isolated_vertex());
    CHECK_FALSE(g.is_connected());

    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(VertexSet::capacity + 1), std::invalid_argument);
}

TEST_CASE("neighborhoods") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_EQ(g.neighbors(0).elements(), std::vector<int>{1});
    CHECK_EQ(g.closed_neighbors(0).elements(), std::vector<int>{0, 1});
    CHECK(g.neighbors(2).empty());
    CHECK_EQ(g.closed_neighbors(2).elements(), std::vector<int>{2});
}

TEST_CASE("connectivity") {
    Graph p(3);
    p.add_edge(0, 1);
    p.add_edge(1, 2);
    CHECK(p.is_connected());
    CHECK(Graph(1).is_connected());
    CHECK(Graph(0).is_connected());
    CHECK_FALSE(Graph(2).is_connected());
}

TEST_CASE("edge list parsing") {
    Graph g = parse_graph("# comment\n4 3\n0 1\n\n2 1\n0 1\n");
    CHECK_EQ(g.vertex_count(), 4);
    CHECK_EQ(g.edge_count(), 2);  // duplicate collapses
    CHECK(g.has_edge(1, 2));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("x y\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 1 9\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n"), ParseError);

    try {
        parse_graph("# leading comment\n2 1\n0 3\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK_EQ(e.line(), 3);
    }
}

TEST_CASE("serialize round-trip is canonical") {
    Graph g(4);
    g.add_edge(3, 0);
    g.add_edge(2, 1);
    std::string text = serialize_graph(g);
    CHECK_EQ(text, "4 2\n0 3\n1 2\n");
    Graph back = parse_graph(text);
    CHECK_EQ(serialize_graph(back), text);
}

TEST_CASE("graph file loading") {
    const char* path = "tmp_roundtrip.g";
    {
        std::ofstream out(path);
        out << "3 2\n0 1\n1 2\n";
    }
    Graph g = load_graph_file(path);
    CHECK_EQ(g.vertex_count(), 3);
    CHECK_EQ(g.edge_count(), 2);
    std::remove(path);

    CHECK_THROWS(load_graph_file("definitely_missing_file.g"));
}
