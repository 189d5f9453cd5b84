#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "domseq/family.hpp"
#include "domseq/formulas.hpp"
#include "domseq/generators.hpp"
#include "domseq/graph_io.hpp"

using namespace domseq;

namespace {

long long predicted_or_throw(const std::string& family, const std::string& invariant,
                             const Bindings& b = {}) {
    auto p = predicted_value(parse_family(family), invariant, b);
    REQUIRE(p.has_value());
    return p->value;
}

bool no_prediction(const std::string& family, const std::string& invariant,
                   const Bindings& b = {}) {
    return !predicted_value(parse_family(family), invariant, b).has_value();
}

}  // namespace

TEST_CASE("family expressions parse and instantiate") {
    CHECK_EQ(serialize_graph(instantiate_family(parse_family("path:5"))),
             serialize_graph(path(5)));
    CHECK_EQ(serialize_graph(instantiate_family(parse_family("K:4"))),
             serialize_graph(complete(4)));
    CHECK_EQ(serialize_graph(instantiate_family(parse_family("sier:3,2"))),
             serialize_graph(sierpinski(3, 2)));
    CHECK_EQ(serialize_graph(instantiate_family(parse_family("cart(cyc:4,path:3)"))),
             serialize_graph(cartesian_product(cycle(4), path(3))));
    CHECK_EQ(serialize_graph(instantiate_family(parse_family("strong(path:2,path:2)"))),
             serialize_graph(strong_product(path(2), path(2))));
    CHECK_EQ(serialize_graph(instantiate_family(parse_family("lex(path:2,cyc:3)"))),
             serialize_graph(lexicographic_product(path(2), cycle(3))));
    CHECK_EQ(instantiate_family(parse_family(" cart( Q:2 , glued:3 ) ")).vertex_count(), 20);
}

TEST_CASE("family parse errors") {
    CHECK_THROWS_AS(parse_family("bogus:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("path"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("path:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("sier:3"), std::invalid_argument);      // needs two args
    CHECK_THROWS_AS(parse_family("cart(path:2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("cart(path:2,path:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("path:3 junk"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
}

TEST_CASE("variables bind at instantiation") {
    FamilySpec fam = parse_family("cart(cyc:s,path:t)");
    CHECK_EQ(family_variables(fam), std::vector<std::string>{"s", "t"});
    Graph g = instantiate_family(fam, {{"s", 4}, {"t", 3}});
    CHECK_EQ(g.vertex_count(), 12);
    CHECK_THROWS_AS(instantiate_family(fam, {{"s", 4}}), std::invalid_argument);

    FamilySpec same = parse_family("cart(path:s,path:s)");
    CHECK_EQ(family_variables(same), std::vector<std::string>{"s"});
    CHECK_EQ(instantiate_family(same, {{"s", 3}}).vertex_count(), 9);

    CHECK_EQ(family_to_string(fam, {{"s", 4}, {"t", 3}}), "cart(cyc:4,path:3)");
    CHECK_EQ(family_to_string(parse_family("sier:p,m"), {{"p", 3}, {"m", 2}}), "sier:3,2");
}

TEST_CASE("size guards at instantiation") {
    CHECK_THROWS_AS(instantiate_family(parse_family("path:0")), std::invalid_argument);
    CHECK_THROWS_AS(instantiate_family(parse_family("path:200")), std::invalid_argument);
    CHECK_THROWS_AS(instantiate_family(parse_family("cart(K:12,K:12)")), std::invalid_argument);
    CHECK_THROWS_AS(instantiate_family(parse_family("cyc:2")), std::invalid_argument);
}

TEST_CASE("closed forms for simple families") {
    CHECK_EQ(predicted_or_throw("path:6", "gr"), 5);
    CHECK_EQ(predicted_or_throw("path:6", "grz"), 5);
    CHECK_EQ(predicted_or_throw("path:6", "zf"), 1);
    CHECK_EQ(predicted_or_throw("path:6", "ptime"), 5);
    CHECK_EQ(predicted_or_throw("cyc:7", "grz"), 5);
    CHECK_EQ(predicted_or_throw("cyc:7", "zf"), 2);
    CHECK_EQ(predicted_or_throw("K:5", "gr"), 1);
    CHECK_EQ(predicted_or_throw("K:5", "grt"), 2);
    CHECK_EQ(predicted_or_throw("K:5", "grl"), 2);
    CHECK_EQ(predicted_or_throw("K:5", "zf"), 4);
    CHECK_EQ(predicted_or_throw("star:6", "gr"), 6);
    CHECK_EQ(predicted_or_throw("star:6", "grz"), 2);
    CHECK_EQ(predicted_or_throw("star:6", "grl"), 7);
    CHECK_EQ(predicted_or_throw("star:6", "zf"), 5);
    CHECK_EQ(predicted_or_throw("glued:4", "grt"), 4);
    CHECK_EQ(predicted_or_throw("glued:4", "grz"), 2);
    CHECK_EQ(predicted_or_throw("Q:4", "grz"), 8);
    CHECK_EQ(predicted_or_throw("Q:4", "zf"), 8);
    CHECK_EQ(predicted_or_throw("sier:3,3", "zf"), 6);
    CHECK_EQ(predicted_or_throw("sier:3,3", "grz"), 9 + 3 * (9 - 1) / 2);
    CHECK_EQ(predicted_or_throw("sier:2,4", "zf"), 1);

    CHECK(no_prediction("path:6", "grl"));
    CHECK(no_prediction("path:6", "alpha"));
    CHECK(no_prediction("K:1", "grt"));  // formula starts at n = 2
}

TEST_CASE("closed forms for products") {
    CHECK_EQ(predicted_or_throw("cart(K:3,path:4)", "grz"), 9);
    CHECK_EQ(predicted_or_throw("cart(path:4,K:3)", "grz"), 9);  // orientation-free
    CHECK_EQ(predicted_or_throw("cart(path:3,path:5)", "grz"), 12);
    CHECK_EQ(predicted_or_throw("cart(cyc:4,path:3)", "grz"), 12 - 4);
    CHECK_EQ(predicted_or_throw("cart(cyc:7,path:3)", "grz"), 21 - 6);
    CHECK_EQ(predicted_or_throw("cart(cyc:5,K:3)", "grz"), 9);
    CHECK_EQ(predicted_or_throw("cart(cyc:3,cyc:4)", "grz"), 12 - 6);
    CHECK_EQ(predicted_or_throw("cart(cyc:5,cyc:5)", "grz"), 16);
    CHECK_EQ(predicted_or_throw("strong(path:4,path:5)", "grz"), 12);
    CHECK_EQ(predicted_or_throw("strong(cyc:4,path:3)", "zf"), 6 + 4 - 2);
    CHECK_EQ(predicted_or_throw("lex(path:4,path:3)", "zf"), 2 * 4 - 1);
    CHECK_EQ(predicted_or_throw("lex(path:3,path:4)", "zf"), 12 - 2 * 3);
    CHECK_EQ(predicted_or_throw("lex(path:4,cyc:5)", "zf"), 2 * 7 - 1);
    CHECK_EQ(predicted_or_throw("lex(cyc:4,cyc:4)", "zf"), 12);

    CHECK_EQ(predicted_value(parse_family("cart(cyc:s,path:t)"), "grz", {{"s", 5}, {"t", 2}})
                 ->value,
             10 - 4);

    CHECK(no_prediction("cart(path:3,path:4)", "gr"));
    CHECK(no_prediction("lex(path:2,path:4)", "zf"));  // outside the stated range
    CHECK(no_prediction("cart(cyc:3,cyc:3)", "zf"));
    CHECK(no_prediction("strong(path:3,cyc:4)", "grz"));
}

TEST_CASE("validity ranges guard predictions") {
    CHECK(no_prediction("cyc:7", "gr"));              // no closed form registered
    CHECK(no_prediction("cart(cyc:3,K:3)", "grz"));   // formula needs s >= 4
    CHECK_EQ(predicted_or_throw("cart(cyc:4,K:3)", "grz"), 3 * (4 - 2));
    CHECK(no_prediction("cart(K:3,path:4)", "gr"));
    CHECK(predicted_value(parse_family("path:n"), "grz", {}) == std::nullopt);  // unbound
}

TEST_CASE("odd-by-odd torus diagonal") {
    // equal odd cycles fall outside the generic two-cycle product formula
    CHECK_EQ(predicted_or_throw("cart(cyc:3,cyc:3)", "grz"), 4);
    CHECK_EQ(predicted_or_throw("cart(cyc:7,cyc:7)", "grz"), 49 - 14 + 1);
    CHECK_EQ(predicted_or_throw("cart(cyc:4,cyc:4)", "grz"), 16 - 8);
    CHECK_EQ(predicted_or_throw("cart(cyc:3,cyc:5)", "grz"), 15 - 6);
}
