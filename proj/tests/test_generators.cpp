#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "domseq/generators.hpp"
#include "domseq/graph_io.hpp"

using namespace domseq;

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

// Q_2 is a 4-cycle; (a, b) adjacency = Hamming distance 1 on bit labels.
bool q2_adjacency_ok() {
    Graph q = hypercube(2);
    return q.has_edge(0, 1) && q.has_edge(0, 2) && q.has_edge(3, 1) && q.has_edge(3, 2) &&
           !q.has_edge(0, 3) && !q.has_edge(1, 2);
}

}  // namespace

TEST_CASE("basic families") {
    CHECK_EQ(path(1).edge_count(), 0);
    CHECK_EQ(path(5).edge_count(), 4);
    CHECK(path(5).is_connected());
    CHECK_EQ(path(5).max_degree(), 2);
    CHECK_EQ(path(5).min_degree(), 1);

    CHECK_EQ(cycle(3).edge_count(), 3);
    CHECK_EQ(cycle(6).min_degree(), 2);
    CHECK_EQ(cycle(6).max_degree(), 2);
    CHECK(cycle(6).is_connected());
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);

    CHECK_EQ(complete(4).edge_count(), 6);
    CHECK_EQ(complete(1).edge_count(), 0);

    CHECK_EQ(edgeless(5).edge_count(), 0);
    CHECK_EQ(edgeless(0).vertex_count(), 0);

    Graph s = star(4);
    CHECK_EQ(s.vertex_count(), 5);
    CHECK_EQ(s.degree(0), 4);  // center
    CHECK_EQ(s.degree(1), 1);
    CHECK_EQ(s.edge_count(), 4);
}

TEST_CASE("hypercube") {
    for (int d = 1; d <= 5; ++d) {
        Graph q = hypercube(d);
        CHECK_EQ(q.vertex_count(), 1 << d);
        CHECK_EQ(q.min_degree(), d);
        CHECK_EQ(q.max_degree(), d);
        CHECK_EQ(q.edge_count(), d * (1 << (d - 1)));
        CHECK(q.is_connected());
    }
    CHECK(q2_adjacency_ok());
}

TEST_CASE("product edge counts") {
    Graph g = cycle(5);
    Graph h = path(4);
    long long ng = g.vertex_count(), mg = g.edge_count();
    long long nh = h.vertex_count(), mh = h.edge_count();

    Graph cart = cartesian_product(g, h);
    CHECK_EQ(cart.vertex_count(), ng * nh);
    CHECK_EQ(cart.edge_count(), mg * nh + ng * mh);

    Graph strong = strong_product(g, h);
    CHECK_EQ(strong.edge_count(), mg * nh + ng * mh + 2 * mg * mh);

    Graph lex = lexicographic_product(g, h);
    CHECK_EQ(lex.edge_count(), mg * nh * nh + ng * mh);
}

TEST_CASE("lexicographic product is order-sensitive") {
    Graph a = lexicographic_product(path(2), path(3));  // 1*9 + 2*2 edges
    Graph b = lexicographic_product(path(3), path(2));  // 2*4 + 3*1 edges
    CHECK_EQ(a.vertex_count(), b.vertex_count());
    CHECK_EQ(a.edge_count(), 13);
    CHECK_EQ(b.edge_count(), 11);
}

TEST_CASE("product adjacency rules on a small case") {
    Graph g = path(2);
    Graph h = path(2);
    // row-major: (a,b) -> 2a + b
    Graph cart = cartesian_product(g, h);
    CHECK(cart.has_edge(0, 1));   // same a, b-edge
    CHECK(cart.has_edge(0, 2));   // a-edge, same b
    CHECK_FALSE(cart.has_edge(0, 3));  // diagonal only in the strong product
    Graph strong = strong_product(g, h);
    CHECK(strong.has_edge(0, 3));
    CHECK(strong.has_edge(1, 2));
}

TEST_CASE("sierpinski constructions agree") {
    for (int p = 1; p <= 4; ++p) {
        for (int n = 1; n <= 3; ++n) {
            Graph direct = sierpinski(p, n);
            Graph recursive = sierpinski_recursive(p, n);
            CHECK_EQ(serialize_graph(direct), serialize_graph(recursive));
        }
    }
    CHECK_EQ(serialize_graph(sierpinski(2, 5)), serialize_graph(sierpinski_recursive(2, 5)));
}

TEST_CASE("sierpinski shape") {
    // edge recurrence: E(p, n) = p E(p, n-1) + C(p, 2), E(p, 1) = C(p, 2)
    for (int p = 2; p <= 4; ++p) {
        long long expected = choose2(p);
        for (int n = 1; n <= 3; ++n) {
            Graph s = sierpinski(p, n);
            CHECK_EQ(s.vertex_count(), static_cast<int>(std::pow(p, n) + 0.5));
            CHECK_EQ(s.edge_count(), expected);
            CHECK(s.is_connected());
            expected = p * expected + choose2(p);
        }
    }

    // the p = 2 family is a path on 2^n vertices
    for (int n = 1; n <= 5; ++n) {
        Graph s = sierpinski(2, n);
        CHECK_EQ(s.edge_count(), s.vertex_count() - 1);
        CHECK_EQ(s.max_degree(), s.vertex_count() > 2 ? 2 : 1);
        CHECK(s.is_connected());
    }

    CHECK_EQ(sierpinski(1, 3).vertex_count(), 1);
    CHECK_EQ(sierpinski(3, 1).edge_count(), 3);  // S_p^1 = K_p
}

TEST_CASE("glued cliques") {
    for (int n = 2; n <= 5; ++n) {
        Graph g = glued_cliques(n);
        CHECK_EQ(g.vertex_count(), 2 * n - 1);
        CHECK_EQ(g.edge_count(), 2 * choose2(n));
        CHECK_EQ(g.degree(0), 2 * (n - 1));  // shared vertex
        CHECK_EQ(g.min_degree(), n - 1);
        CHECK(g.is_connected());
    }
    CHECK_THROWS_AS(glued_cliques(1), std::invalid_argument);
}
