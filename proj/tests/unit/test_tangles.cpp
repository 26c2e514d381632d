#include <doctest.h>

#include <algorithm>

#include "tckit/census.hpp"
#include "tckit/tangles.hpp"

using namespace tckit;

namespace {

MultiGraph triangle() { return MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

MultiGraph k4() { return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// Two loop hubs joined through a middle vertex: 0 and 2 carry two loops
// each, path 0-1-2. Three tangles of order 2.
MultiGraph three_hub() {
    return MultiGraph(3, {{0, 0}, {0, 0}, {2, 2}, {2, 2}, {0, 1}, {1, 2}});
}

ExplicitTangle tangle_of(int order, std::vector<VertexSet> members) {
    ExplicitTangle t;
    t.order = order;
    t.members = std::move(members);
    std::sort(t.members.begin(), t.members.end());
    return t;
}

}  // namespace

TEST_CASE("axiom checks on the loop vertex") {
    MultiGraph loops(1, {{0, 0}, {0, 0}, {0, 0}});
    CHECK(check_axioms(loops, tangle_of(3, {0})).valid());
    auto e3 = check_axioms(loops, tangle_of(4, {0}));
    CHECK(!e3.valid());
    CHECK(e3.violations.front().find("E3") == 0);
}

TEST_CASE("three singleton orientations of the triangle violate E2") {
    auto report = check_axioms(triangle(), tangle_of(3, {vbit(0), vbit(1), vbit(2)}));
    bool found_e2 = false;
    for (const auto& v : report.violations)
        if (v.find("E2") == 0) found_e2 = true;
    CHECK(found_e2);
}

TEST_CASE("tangle enumeration on the triangle") {
    auto order2 = enumerate_tangles(triangle(), 2);
    REQUIRE(order2.size() == 1);
    CHECK(order2[0].members == std::vector<VertexSet>{0});

    CHECK(enumerate_tangles(triangle(), 3).empty());

    MultiGraph single(2, {{0, 1}});
    CHECK(enumerate_tangles(single, 2).empty());  // fewer than theta edges
    CHECK(max_tangle_order(single) == 1);
    CHECK(max_tangle_order(triangle()) == 2);
    CHECK(max_tangle_order(k4()) == 4);
}

TEST_CASE("every enumerated tangle passes the axioms") {
    for (const auto& g : census_up_to(3, 5))
        for (int theta = 1; theta <= 3; ++theta)
            for (const auto& t : enumerate_tangles(g, theta)) CHECK(check_axioms(g, t).valid());
}

TEST_CASE("fat cell tangles") {
    TreeCutDecomposition d = TreeCutDecomposition::single_bag(k4());
    auto cs = cells(d, 2);
    REQUIRE(cs.size() == 1);
    REQUIRE(cs[0].is_fat);
    ExplicitTangle t = tangle_from_fat_cell(d, cs[0], 2);
    CHECK(check_axioms(k4(), t).valid());
    auto all = enumerate_tangles(k4(), 2);
    CHECK(std::find(all.begin(), all.end(), t) != all.end());

    // 6 < 3*3-2: not 3-fat.
    auto c3 = cells(d, 3);
    REQUIRE(c3.size() == 1);
    CHECK(!c3[0].is_fat);
    CHECK_THROWS_AS(tangle_from_fat_cell(d, c3[0], 3), std::invalid_argument);
}

TEST_CASE("cell localization points at the dense node") {
    MultiGraph g = k4();
    ExplicitTangle t = enumerate_tangles(g, 2).front();

    TreeCutDecomposition single = TreeCutDecomposition::single_bag(g);
    CHECK(locate_cell(g, t, single).nodes == std::vector<int>{0});

    // Pendant empty-bag node: the orientation points at the K4 node.
    TreeCutDecomposition pendant = single;
    pendant.node_count = 2;
    pendant.tree_edges = {{0, 1}};
    pendant.bags = {g.all_vertices(), 0};
    Cell where = locate_cell(g, t, pendant);
    CHECK(where.nodes == std::vector<int>{0});

    // Membership for every qualifying tree edge.
    for (const auto& d : sample_decompositions(g, 6, 29)) {
        Cell cell = locate_cell(g, t, d);
        std::vector<bool> in(d.node_count, false);
        for (int x : cell.nodes) in[x] = true;
        for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e) {
            auto [a, b] = d.tree_edges[e];
            if (in[a] && in[b]) continue;
            if (static_cast<int>(adhesion_set(d, e).size()) >= 2) continue;
            CHECK(t.contains(side_of(d, e, cell.nodes).side_a));
        }
    }
}

TEST_CASE("three tangles of the two-hub path and their separators") {
    MultiGraph g = three_hub();
    auto tangles = enumerate_tangles(g, 2);
    REQUIRE(tangles.size() == 3);

    ExplicitTangle t_u = tangle_of(2, {0, vbit(1) | vbit(2), vbit(2)});
    ExplicitTangle t_x = tangle_of(2, {0, vbit(0), vbit(2)});
    ExplicitTangle t_w = tangle_of(2, {0, vbit(0), vbit(0) | vbit(1)});
    CHECK(std::find(tangles.begin(), tangles.end(), t_u) != tangles.end());
    CHECK(std::find(tangles.begin(), tangles.end(), t_x) != tangles.end());
    CHECK(std::find(tangles.begin(), tangles.end(), t_w) != tangles.end());

    // No separator from a tangle to itself.
    CHECK(!min_separator(g, {t_u}, t_u).has_value());

    // Exactly two minimum separators from {t_u} to t_w: nested A-sides.
    auto seps = all_min_separators(g, {t_u}, t_w);
    REQUIRE(seps.size() == 2);
    CHECK(seps[0].side_a == vbit(2));
    CHECK(seps[1].side_a == (vbit(1) | vbit(2)));
    CHECK(seps[0].order() == 1);

    // The canonical minimum separator nests inside
    // per-tangle minimum separators.
    auto canonical = min_separator(g, {t_u, t_x}, t_w);
    REQUIRE(canonical.has_value());
    bool nested = false;
    for (const EdgeCut& m : all_min_separators(g, {t_u}, t_w))
        if ((canonical->side_a & ~m.side_a) == 0 && (m.side_b & ~canonical->side_b) == 0)
            nested = true;
    CHECK(nested);
}

TEST_CASE("bridge between two dense blocks is the minimum separator") {
    // Two K4 blocks joined by one edge.
    MultiGraph g(8);
    auto clique = [&](int base) {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) g.add_edge(base + i, base + j);
    };
    clique(0);
    clique(4);
    g.add_edge(3, 4);
    auto tangles = enumerate_tangles(g, 2);
    REQUIRE(tangles.size() == 2);
    auto sep = min_separator(g, {tangles[0]}, tangles[1]);
    REQUIRE(sep.has_value());
    CHECK(sep->order() == 1);
    CHECK(sep->crossing == std::vector<EdgeId>{12});
}

TEST_CASE("uncrossing drops a nested member and keeps the union") {
    MultiGraph g = three_hub();
    ExplicitTangle t_u = tangle_of(2, {0, vbit(1) | vbit(2), vbit(2)});
    ExplicitTangle t_w = tangle_of(2, {0, vbit(0), vbit(0) | vbit(1)});

    std::vector<EdgeCut> nested = {cut_from_mask(g, vbit(2)), cut_from_mask(g, vbit(1) | vbit(2))};
    REQUIRE(!is_cross_free(nested));
    CrossFreeFamily out = uncross_segregator(g, {t_u}, {t_w}, nested);
    CHECK(is_cross_free(out.cuts));
    REQUIRE(out.cuts.size() == 1);
    CHECK(out.cuts[0].side_a == (vbit(1) | vbit(2)));  // union of A-sides preserved

    // Cross-free input comes back intact.
    std::vector<EdgeCut> fine = {cut_from_mask(g, vbit(1) | vbit(2))};
    CrossFreeFamily same = uncross_segregator(g, {t_u}, {t_w}, fine);
    CHECK(same.cuts.size() == 1);
    CHECK(same.cuts[0].side_a == (vbit(1) | vbit(2)));

    // A non-segregator input is rejected with the failing tangle.
    std::vector<EdgeCut> wrong = {cut_from_mask(g, vbit(0))};
    CHECK_THROWS_AS(uncross_segregator(g, {t_u}, {t_w}, wrong), std::invalid_argument);
}

TEST_CASE("a crossing exchange keeps the union and shrinks the total") {
    // Pure set algebra of the exchange step, over arbitrary crossing pairs.
    for (const auto& g : census_up_to(4, 5)) {
        auto cuts = enumerate_edge_cuts(g, g.edge_count());
        int tried = 0;
        for (size_t i = 0; i < cuts.size() && tried < 25; ++i)
            for (size_t j = i + 1; j < cuts.size() && tried < 25; ++j) {
                VertexSet a = cuts[i].side_a, c = cuts[j].side_a;
                if (!(a & c) || (a & ~c) == 0 || (c & ~a) == 0) continue;
                ++tried;
                std::vector<EdgeCut> fam = {cuts[i], cuts[j]};
                auto next = exchange_crossing_pair(g, fam, 0, 1);
                VertexSet un = 0;
                long long size = 0;
                for (const EdgeCut& cut : next) {
                    un |= cut.side_a;
                    size += vcount(cut.side_a);
                }
                CHECK(un == (a | c));
                CHECK(size < vcount(a) + vcount(c));
            }
    }

    MultiGraph g2(2, {{0, 1}});
    std::vector<EdgeCut> disjoint = {cut_from_mask(g2, vbit(0)), cut_from_mask(g2, vbit(1))};
    CHECK_THROWS_AS(exchange_crossing_pair(g2, disjoint, 0, 1), std::invalid_argument);
}

TEST_CASE("family restriction and its flagged subset") {
    MultiGraph g(3, {{0, 1}, {1, 2}});  // path a-b-c
    CrossFreeFamily family;
    family.cuts.push_back(cut_from_mask(g, vbit(0)));

    // The trivial cut leaves everything alone.
    RestrictedFamily trivial = restrict_family(g, family, cut_from_mask(g, 0));
    CHECK(trivial.flagged.empty());
    CHECK(trivial.family.cuts[1].side_a == vbit(0));

    RestrictedFamily r = restrict_family(g, family, cut_from_mask(g, vbit(2)));
    // f([{a}, rest]) keeps the cut: {a} n {a,b} = {a}.
    CHECK(r.family.cuts[1].side_a == vbit(0));
    CHECK(r.family.cuts[1].order() <= family.cuts[0].order());
    CHECK(static_cast<int>(r.flagged.size()) <= 2 * 1);
}

TEST_CASE("guard predicate") {
    MultiGraph g = three_hub();
    auto tangles = enumerate_tangles(g, 2);
    REQUIRE(tangles.size() == 3);
    ExplicitTangle t_x = tangle_of(2, {0, vbit(0), vbit(2)});

    CrossFreeFamily empty_family;
    CHECK(is_guard(g, CrossFreeFamily{}, empty_family, {t_x}));

    // [{u}, {x,w}] is the minimum ({t_x}, t_u)-separator and t_u does not
    // contain d, so it guards.
    CrossFreeFamily d;
    d.cuts.push_back(cut_from_mask(g, vbit(0)));
    CrossFreeFamily s;
    s.cuts.push_back(cut_from_mask(g, vbit(0)));
    CHECK(is_guard(g, s, d, {t_x}));

    // A member inside every candidate tangle cannot be guarded.
    CrossFreeFamily bad;
    bad.cuts.push_back(cut_from_mask(g, 0));
    CHECK(!is_guard(g, bad, d, {t_x}));
}

TEST_CASE("separator and guard preconditions are enforced") {
    MultiGraph g = three_hub();
    ExplicitTangle t2 = tangle_of(2, {0, vbit(0), vbit(2)});
    ExplicitTangle t3 = tangle_of(3, {0});
    CHECK_THROWS_AS(min_separator(g, {t3}, t2), std::invalid_argument);

    // d must sit inside every tangle of the collection.
    CrossFreeFamily d;
    d.cuts.push_back(cut_from_mask(g, vbit(1) | vbit(2)));  // not in t_x
    CHECK_THROWS_AS(is_guard(g, CrossFreeFamily{}, d, {t2}), std::invalid_argument);
    CHECK_THROWS_AS(is_guard(g, CrossFreeFamily{}, CrossFreeFamily{}, {}), std::invalid_argument);
}

TEST_CASE("tangle dump lists sorted A-sides with cut orders") {
    MultiGraph g = three_hub();
    ExplicitTangle t_w = tangle_of(2, {0, vbit(0), vbit(0) | vbit(1)});
    CHECK(dump_tangle(g, t_w) == " : 0\n0 : 1\n0 1 : 1\n");
}

TEST_CASE("deleting edges shrinks a tangle's order") {
    MultiGraph loops(1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}});
    ExplicitTangle t = tangle_of(4, {0});
    auto reduced = tangle_minus_edges(loops, t, {0});
    CHECK(reduced.tangle.order == 3);
    CHECK(reduced.graph.edge_count() == 3);
    CHECK(check_axioms(reduced.graph, reduced.tangle).valid());

    auto same = tangle_minus_edges(loops, t, {});
    CHECK(same.tangle.order == 4);
    CHECK(same.tangle.members == t.members);

    CHECK_THROWS_AS(tangle_minus_edges(loops, t, {0, 1, 2, 3}), std::invalid_argument);

    // Validity is preserved across the census.
    for (const auto& g : census_up_to(3, 4)) {
        for (int theta = 2; theta <= 3; ++theta)
            for (const auto& tt : enumerate_tangles(g, theta))
                for (EdgeId e = 0; e < g.edge_count() && e < 2; ++e) {
                    auto cut_down = tangle_minus_edges(g, tt, {e});
                    CHECK(check_axioms(cut_down.graph, cut_down.tangle).valid());
                }
    }
}
