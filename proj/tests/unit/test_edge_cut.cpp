#include <doctest.h>

#include "tckit/census.hpp"
#include "tckit/edge_cut.hpp"

using namespace tckit;

TEST_CASE("edge cut orders on the basic shapes") {
    MultiGraph single(2, {{0, 1}});
    CHECK(edge_cut_order(single, vbit(0), vbit(1)).order() == 1);

    MultiGraph loops(1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}});
    CHECK(edge_cut_order(loops, 0, vbit(0)).order() == 0);  // loops never cross

    MultiGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(edge_cut_order(triangle, vbit(0), vbit(1) | vbit(2)).order() == 2);

    CHECK_THROWS_AS(edge_cut_order(triangle, vbit(0), vbit(0) | vbit(1) | vbit(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(edge_cut_order(triangle, vbit(0), vbit(1)), std::invalid_argument);
    CHECK(edge_cut_order(triangle, vbit(0), vbit(1) | vbit(2)).order() ==
          edge_cut_order(triangle, vbit(1) | vbit(2), vbit(0)).order());
}

TEST_CASE("cut enumeration in binary-counter order") {
    MultiGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    auto trivial = enumerate_edge_cuts(triangle, 1);
    REQUIRE(trivial.size() == 2);
    CHECK(trivial[0].side_a == 0);  // [empty, V] first
    CHECK(trivial[1].side_a == triangle.all_vertices());

    CHECK(enumerate_edge_cuts(triangle, 2).size() == 8);

    MultiGraph edgeless(2);
    CHECK(enumerate_edge_cuts(edgeless, 0).size() == 4);
}

TEST_CASE("minimum cut between edge sets") {
    MultiGraph path(3, {{0, 1}, {1, 2}});
    auto cut = min_cut_between_edge_sets(path, {0}, {1}, 5);
    REQUIRE(cut.has_value());
    CHECK(cut->order() == 1);

    MultiGraph disjoint(4, {{0, 1}, {2, 3}});
    auto zero = min_cut_between_edge_sets(disjoint, {0}, {1}, 1);
    REQUIRE(zero.has_value());
    CHECK(zero->order() == 0);
    CHECK(disjoint.edge_incident_with(0, zero->side_a));
    CHECK(disjoint.edge_incident_with(1, zero->side_b));

    MultiGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(!min_cut_between_edge_sets(triangle, {0}, {1}, 2).has_value());

    CHECK_THROWS_AS(min_cut_between_edge_sets(path, {}, {1}, 3), std::invalid_argument);

    // A shared loop can never sit on both sides.
    MultiGraph loop(2, {{0, 0}, {0, 1}});
    CHECK(!min_cut_between_edge_sets(loop, {0}, {0}, 99).has_value());
}

TEST_CASE("submodularity of the cut order on census cut pairs") {
    for (const auto& g : census_up_to(3, 4)) {
        auto cuts = enumerate_edge_cuts(g, g.edge_count());
        for (size_t i = 0; i < cuts.size(); i += 3)
            for (size_t j = i; j < cuts.size(); j += 2) {
                const EdgeCut& ab = cuts[i];
                const EdgeCut& cd = cuts[j];
                int lhs = cut_union(g, ab, cd).order() + cut_intersection(g, ab, cd).order();
                CHECK(lhs <= ab.order() + cd.order());
            }
    }
}
