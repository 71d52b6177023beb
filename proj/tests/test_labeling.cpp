#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "tidom/digraph.hpp"
#include "tidom/error.hpp"
#include "tidom/labeling.hpp"

using namespace tidom;

TEST_CASE("labeling values are restricted to {0,1,2}") {
    CHECK_THROWS_AS(Labeling({0, 3}), InvalidArgument);
    CHECK_THROWS_AS(Labeling({-1}), InvalidArgument);
    Labeling f{0, 1, 2};
    CHECK(weight(f) == 3);
    f.set(0, 2);
    CHECK(f.at(0) == 2);
    CHECK_THROWS_AS(f.set(0, 5), InvalidArgument);
    CHECK_THROWS_AS(f.at(3), InvalidArgument);
    CHECK(Labeling::constant(4, 1) == Labeling{1, 1, 1, 1});
    CHECK(Labeling{0, 2} < Labeling{1, 0});
}

TEST_CASE("level sets and restricted weight") {
    const Labeling f{2, 0, 1, 2};
    CHECK(level_set(f, 2).members() == std::vector<Vertex>{0, 3});
    CHECK(level_set(f, 0).members() == std::vector<Vertex>{1});
    CHECK_THROWS_AS(level_set(f, 3), InvalidArgument);
    CHECK(restricted_weight(f, VertexSet(4, {0, 1, 2})) == 3);
    CHECK_THROWS_AS(restricted_weight(f, VertexSet(3)), InvalidArgument);
}

TEST_CASE("Italian condition counts in-neighbors only") {
    // 0 -> 2 <- 1 and 2 -> 3.
    const Digraph d(4, {{0, 2}, {1, 2}, {2, 3}});
    CHECK(validate(d, Labeling{1, 1, 0, 0}, Variant::italian) == false);  // 3 has only in-neighbor 2 labeled 0
    CHECK(validate(d, Labeling{1, 1, 0, 1}, Variant::italian));           // 2 has two in-neighbors labeled 1
    CHECK(validate(d, Labeling{2, 1, 0, 1}, Variant::italian));           // a 2 and a 1 also defend
    CHECK_FALSE(validate(make_dipath(2), Labeling{1, 0}, Variant::italian));  // one in-neighbor labeled 1
    CHECK(validate(d, Labeling{1, 1, 2, 0}, Variant::italian));
    // Roman needs an in-neighbor labeled 2 for every 0.
    CHECK_FALSE(validate(d, Labeling{1, 1, 0, 1}, Variant::roman));
    CHECK(validate(d, Labeling{2, 1, 0, 1}, Variant::roman));
}

TEST_CASE("total variants forbid isolated positive vertices in either direction") {
    const Digraph p3 = make_dipath(3);
    CHECK(validate(p3, Labeling{1, 1, 1}, Variant::total_italian));
    CHECK_FALSE(validate(p3, Labeling{2, 0, 1}, Variant::total_italian));  // 0 and 2 isolated in D[V1 u V2]
    CHECK(validate(p3, Labeling{2, 0, 1}, Variant::italian));
    CHECK(validate(p3, Labeling{1, 2, 0}, Variant::total_roman));
    CHECK(validate(p3, Labeling{1, 2, 0}, Variant::total_italian));
    CHECK(induces_isolated_vertex(p3, VertexSet(3, {0, 2})));
    CHECK_FALSE(induces_isolated_vertex(p3, VertexSet(3, {1, 2})));
}

TEST_CASE("set variants") {
    const Digraph star = make_out_star(4);
    CHECK(validate(star, VertexSet(4, {0}), Variant::dominating_set));
    CHECK_FALSE(validate(star, VertexSet(4, {1}), Variant::dominating_set));  // the root has no in-neighbor
    // Total domination: dominating and D[S] has no isolated vertex.
    CHECK_FALSE(validate(star, VertexSet(4, {0}), Variant::total_dominating_set));
    CHECK(validate(star, VertexSet(4, {0, 1}), Variant::total_dominating_set));
    // Total 2-domination: every vertex outside S has two in-neighbors in S.
    const Digraph d(3, {{0, 2}, {1, 2}, {0, 1}});
    CHECK(validate(d, VertexSet(3, {0, 1}), Variant::total_2_dominating_set));
    CHECK_FALSE(validate(d, VertexSet(3, {0, 2}), Variant::total_2_dominating_set));
}

TEST_CASE("argument errors") {
    const Digraph p3 = make_dipath(3);
    CHECK_THROWS_AS(validate(p3, Labeling{1, 1}, Variant::italian), InvalidArgument);
    CHECK_THROWS_AS(validate(p3, Labeling{1, 1, 1}, Variant::dominating_set), InvalidArgument);
    CHECK_THROWS_AS(validate(p3, VertexSet(3, {0}), Variant::roman), InvalidArgument);
    const Digraph isolated(3, {{0, 1}});
    CHECK_THROWS_AS(validate(isolated, Labeling{1, 1, 1}, Variant::total_italian), InfeasibleStructure);
    CHECK_THROWS_AS(validate(isolated, VertexSet(3, {0, 1, 2}), Variant::total_2_dominating_set), InfeasibleStructure);
    CHECK(validate(isolated, Labeling{1, 1, 1}, Variant::italian));
}
