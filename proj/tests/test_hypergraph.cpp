#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "domseq/generators.hpp"
#include "domseq/graph_io.hpp"
#include "domseq/hypergraph.hpp"
#include "domseq/random_gen.hpp"
#include "domseq/sequence.hpp"
#include "oracles.hpp"

using namespace domseq;

namespace {

Hypergraph from_masks(int ground_n, const std::vector<std::uint64_t>& masks) {
    Hypergraph h;
    h.ground_n = ground_n;
    for (std::uint64_t m : masks) {
        VertexSet e;
        for (int v = 0; v < ground_n; ++v) {
            if (m >> v & 1) e.set(v);
        }
        h.edges.push_back(e);
    }
    return h;
}

std::vector<std::uint64_t> to_masks(const Hypergraph& h) {
    std::vector<std::uint64_t> out;
    for (const VertexSet& e : h.edges) {
        std::uint64_t m = 0;
        e.for_each([&](int v) { m |= std::uint64_t{1} << v; });
        out.push_back(m);
    }
    return out;
}

}  // namespace

TEST_CASE("nested and disjoint edges") {
    // nested chain: one edge covers everything, but the sequence can take 3
    Hypergraph nested = from_masks(3, {0b001, 0b011, 0b111});
    CHECK_EQ(edge_cover_number(nested), 1);
    GrundyCoverResult r = grundy_cover_number(nested);
    CHECK_EQ(r.value, 3);
    CHECK_EQ(r.order, std::vector<int>{0, 1, 2});

    Hypergraph disjoint = from_masks(4, {0b0001, 0b0010, 0b0100, 0b1000});
    CHECK_EQ(edge_cover_number(disjoint), 4);
    CHECK_EQ(grundy_cover_number(disjoint).value, 4);
}

TEST_CASE("duplicate edges are distinct but useless twice") {
    Hypergraph h = from_masks(2, {0b11, 0b11});
    CHECK_EQ(edge_cover_number(h), 1);
    CHECK_EQ(grundy_cover_number(h).value, 1);
}

TEST_CASE("coverage preconditions") {
    Hypergraph uncoverable = from_masks(3, {0b011});
    CHECK_THROWS_AS(edge_cover_number(uncoverable), std::domain_error);
    CHECK_THROWS_AS(grundy_cover_number(uncoverable), std::domain_error);

    Hypergraph empty_edge;
    empty_edge.ground_n = 2;
    empty_edge.edges.push_back(VertexSet{});
    CHECK_THROWS_AS(validate_hypergraph(empty_edge), std::invalid_argument);

    Hypergraph stray;
    stray.ground_n = 2;
    stray.edges.push_back(VertexSet::single(5));
    CHECK_THROWS_AS(validate_hypergraph(stray), std::invalid_argument);

    Hypergraph empty;
    CHECK_EQ(edge_cover_number(empty), 0);
    CHECK_EQ(grundy_cover_number(empty).value, 0);
}

TEST_CASE("random hypergraphs match the oracle") {
    RandomGen gen(2024);
    int done = 0;
    while (done < 60) {
        int ground = 1 + gen.below(5);
        int m = 1 + gen.below(5);
        std::vector<std::uint64_t> masks;
        std::uint64_t covered = 0;
        for (int e = 0; e < m; ++e) {
            std::uint64_t mask = 0;
            for (int v = 0; v < ground; ++v) {
                if (gen.unit() < 0.45) mask |= std::uint64_t{1} << v;
            }
            if (!mask) mask = std::uint64_t{1} << gen.below(ground);
            masks.push_back(mask);
            covered |= mask;
        }
        if (covered != (std::uint64_t{1} << ground) - 1) continue;
        ++done;
        Hypergraph h = from_masks(ground, masks);
        CHECK_EQ(edge_cover_number(h), oracle::min_edge_cover(ground, masks));
        CHECK_EQ(grundy_cover_number(h).value, oracle::longest_cover_sequence(masks));
    }
}

TEST_CASE("hypergraph text round-trip") {
    Hypergraph h = from_masks(4, {0b0111, 0b1100});
    std::string text = serialize_hypergraph(h);
    Hypergraph back = parse_hypergraph(text);
    CHECK_EQ(back.ground_n, 4);
    REQUIRE_EQ(back.edges.size(), 2);
    CHECK_EQ(to_masks(back), to_masks(h));

    CHECK_EQ(parse_hypergraph("# c\n2 1\n0 1\n").edges.size(), 1);
    CHECK_THROWS_AS(parse_hypergraph(""), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("2 1\n0 7\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("2 1\n0 1\n0\n"), ParseError);
}

TEST_CASE("bipartite scaffolding") {
    Graph c = cycle(6);
    VertexSet a;
    VertexSet b;
    for (int v : {0, 2, 4}) a.set(v);
    for (int v : {1, 3, 5}) b.set(v);
    BipartiteGraph bg = make_bipartite(c, a, b);
    CHECK_EQ(bg.part_a.count(), 3);

    Hypergraph h = neighborhood_hypergraph(bg);
    CHECK_EQ(h.ground_n, 3);
    REQUIRE_EQ(h.edges.size(), 3);
    // N(1) = {0,2} -> ground {0,1}, N(3) = {2,4} -> {1,2}, N(5) = {4,0} -> {2,0}
    CHECK_EQ(to_masks(h), std::vector<std::uint64_t>{0b011, 0b110, 0b101});
    CHECK_EQ(edge_cover_number(h), 2);
    // any two edges already cover the whole ground set, so no third pick is legal
    CHECK_EQ(grundy_cover_number(h).value, 2);

    BipartiteGraph aug = star_augment(bg);
    CHECK_EQ(aug.graph.vertex_count(), 9);
    CHECK_EQ(aug.part_a.count(), 6);
    for (int v = 6; v < 9; ++v) {
        CHECK_EQ(aug.graph.neighbors(v).elements(), std::vector<int>{1, 3, 5});
    }
}

TEST_CASE("bipartite validation") {
    Graph t = path(3);  // 0-1-2 with parts {0,2} and {1}
    VertexSet a = VertexSet::single(0) | VertexSet::single(2);
    VertexSet b = VertexSet::single(1);
    CHECK_NOTHROW(make_bipartite(t, a, b));

    CHECK_THROWS_AS(make_bipartite(t, a, a), std::invalid_argument);           // overlap/cover
    CHECK_THROWS_AS(make_bipartite(t, VertexSet::single(0), b), std::invalid_argument);

    Graph tri = cycle(3);  // no bipartition puts every edge across
    VertexSet ta = VertexSet::single(0) | VertexSet::single(1);
    CHECK_THROWS_AS(make_bipartite(tri, ta, VertexSet::single(2)), std::invalid_argument);

    // isolated b-vertex has no neighborhood edge
    Graph iso(3);
    iso.add_edge(0, 1);
    BipartiteGraph bg = make_bipartite(iso, VertexSet::single(0),
                                       VertexSet::single(1) | VertexSet::single(2));
    CHECK_THROWS_AS(neighborhood_hypergraph(bg), std::domain_error);
}

TEST_CASE("covering reduction on fixtures") {
    // single edge: the augmented graph is a path on 3 vertices
    Graph e2(2);
    e2.add_edge(0, 1);
    BipartiteGraph bg = make_bipartite(e2, VertexSet::single(0), VertexSet::single(1));
    ReductionCheck r = verify_reduction_claim(bg);
    CHECK(r.equal);
    CHECK_EQ(r.lhs, 3);

    Graph c6 = cycle(6);
    VertexSet a;
    VertexSet b;
    for (int v : {0, 2, 4}) a.set(v);
    for (int v : {1, 3, 5}) b.set(v);
    ReductionCheck rc = verify_reduction_claim(make_bipartite(c6, a, b));
    CHECK(rc.equal);
    CHECK_EQ(rc.rhs, 3 + 3 + 2);

    // star with the center on the b side: one hyperedge covering everything
    Graph s = star(3);
    VertexSet leaves;
    for (int v : {1, 2, 3}) leaves.set(v);
    ReductionCheck rs = verify_reduction_claim(make_bipartite(s, leaves, VertexSet::single(0)));
    CHECK(rs.equal);
    CHECK_EQ(rs.rhs, 3 + 1 + 1);
}

TEST_CASE("covering reduction on random bipartite graphs") {
    RandomGen gen(3131);
    for (int i = 0; i < 25; ++i) {
        BipartiteGraph bg = gen.bipartite_no_isolated(1 + gen.below(4), 1 + gen.below(4),
                                                      0.4 + 0.4 * gen.unit());
        ReductionCheck r = verify_reduction_claim(bg);
        CAPTURE(i);
        CHECK(r.equal);
    }
}
