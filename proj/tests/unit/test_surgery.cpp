#include <doctest.h>

#include "tckit/census.hpp"
#include "tckit/surgery.hpp"

using namespace tckit;

namespace {

MultiGraph c4() { return MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

}  // namespace

TEST_CASE("splitting along an order-2 cut") {
    // Two triangles tied by two crossing edges.
    MultiGraph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {2, 4}});
    EdgeCut cut = cut_from_mask(g, vbit(0) | vbit(1) | vbit(2));
    REQUIRE(cut.order() == 2);
    TwoCutSplit split = split_two_cut(g, cut);
    CHECK(split.side_a.vertex_count() == 3);
    CHECK(split.side_a.edge_count() == 4);  // triangle plus the fresh edge
    CHECK(split.side_b.edge_count() == 4);
    CHECK(split.side_a.edge_count() + split.side_b.edge_count() == g.edge_count());

    // C4 split 2+2: both sides become 2-cycles.
    EdgeCut half = cut_from_mask(c4(), vbit(0) | vbit(1));
    TwoCutSplit pair = split_two_cut(c4(), half);
    CHECK(pair.side_a.parallel_count(0, 1) == 2);
    CHECK(pair.side_b.parallel_count(0, 1) == 2);

    // Crossing edges sharing an endpoint produce a loop.
    MultiGraph shared(3, {{0, 1}, {0, 2}, {1, 2}});
    EdgeCut corner = cut_from_mask(shared, vbit(0));
    REQUIRE(corner.order() == 2);
    TwoCutSplit looped = split_two_cut(shared, corner);
    CHECK(looped.side_a.loop_count_at(0) == 1);

    CHECK_THROWS_AS(split_two_cut(c4(), cut_from_mask(c4(), 0)), std::invalid_argument);
}

TEST_CASE("1- and 3-cut freeness survives an order-2 split") {
    for (const auto& g : census_up_to(4, 6)) {
        bool clean = true;
        VertexSet full = g.all_vertices();
        for (VertexSet mask = 0;; ++mask) {
            int order = cut_from_mask(g, mask).order();
            if (order == 1 || order == 3) clean = false;
            if (mask == full) break;
        }
        if (!clean) continue;
        for (VertexSet mask = 1; mask < full; ++mask) {
            EdgeCut cut = cut_from_mask(g, mask);
            if (cut.order() != 2) continue;
            TwoCutSplit split = split_two_cut(g, cut);
            for (const MultiGraph* side : {&split.side_a, &split.side_b}) {
                VertexSet f = side->all_vertices();
                for (VertexSet m2 = 0;; ++m2) {
                    int order = cut_from_mask(*side, m2).order();
                    CHECK(order != 1);
                    CHECK(order != 3);
                    if (m2 == f) break;
                }
            }
        }
    }
}

TEST_CASE("refinement along the trivial cut collapses back to the input") {
    TreeCutDecomposition d = TreeCutDecomposition::single_bag(c4());
    TreeCutDecomposition out = refine_along_cut(d, {0}, cut_from_mask(c4(), 0));
    CHECK(validate(out).valid());
    CHECK(out.node_count == 1);
    CHECK(out.bags[0] == c4().all_vertices());
}

TEST_CASE("refinement separates the bridged triangles and refines bags") {
    MultiGraph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    TreeCutDecomposition d = TreeCutDecomposition::single_bag(g);
    VertexSet left = vbit(0) | vbit(1) | vbit(2);
    TreeCutDecomposition out = refine_along_cut(d, {0}, cut_from_mask(g, left));
    CHECK(validate(out).valid());
    for (VertexSet bag : out.bags) CHECK(((bag & left) == 0 || (bag & ~left) == 0));

    // Every new bag refines an old bag.
    TreeCutDecomposition two;
    two.graph = g;
    two.node_count = 2;
    two.tree_edges = {{0, 1}};
    two.bags = {left | vbit(3), vbit(4) | vbit(5)};
    TreeCutDecomposition refined = refine_along_cut(two, {0}, cut_from_mask(g, left));
    CHECK(validate(refined).valid());
    for (VertexSet bag : refined.bags) {
        bool inside_old = false;
        for (VertexSet old : two.bags)
            if ((bag & ~old) == 0) inside_old = true;
        CHECK(inside_old);
    }
    // New adhesion sets are old ones restricted or the cut's crossing set.
    CHECK(adhesion(refined) <= std::max(adhesion(two), cut_from_mask(g, left).order()));
}

TEST_CASE("misaligned cuts are rejected with the offending edge") {
    // Path graph, two nodes; the cut separates the far bag's interior.
    MultiGraph g(4, {{0, 1}, {1, 2}, {2, 3}});
    TreeCutDecomposition d;
    d.graph = g;
    d.node_count = 2;
    d.tree_edges = {{0, 1}};
    d.bags = {vbit(0) | vbit(1), vbit(2) | vbit(3)};
    // Anchor at node 0; the far side {2,3} straddles the cut {2} | rest.
    CHECK_THROWS_AS(refine_along_cut(d, {0}, cut_from_mask(g, vbit(2))), AlignmentFailure);
}

TEST_CASE("leaf splitting") {
    MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    TreeCutDecomposition d = TreeCutDecomposition::single_bag(star);
    TreeCutDecomposition same = attach_leaf_split(d, 0, 0);
    CHECK(same.node_count == 1);

    TreeCutDecomposition out = attach_leaf_split(d, 0, vbit(1) | vbit(2) | vbit(3));
    CHECK(validate(out).valid());
    CHECK(out.node_count == 4);
    for (int e = 0; e < 3; ++e) CHECK(adhesion_set(out, e).size() == 1);

    CHECK_THROWS_AS(attach_leaf_split(out, 0, vbit(1)), std::invalid_argument);
}

TEST_CASE("global conclusion certificates") {
    MultiGraph h(3, {{0, 1}, {1, 2}, {0, 2}});
    MultiGraph g(2, {{0, 1}});

    GlobalConclusionCertificate cert;
    cert.decomposition = TreeCutDecomposition::single_bag(g);
    cert.z_sets = {{0}};
    cert.k_thresholds = {1};
    cert.u_sets = {std::nullopt};
    cert.eta = 3;
    cert.xi = 2;
    // Deleting every edge leaves no degree-1 vertex; the triangle has 3.
    CHECK(check_global_conclusion(g, h, cert).pass());

    // |V(G)| < |V(H')| with k = 0.
    GlobalConclusionCertificate small;
    small.decomposition = TreeCutDecomposition::single_bag(g);
    small.z_sets = {{}};
    small.k_thresholds = {0};
    small.u_sets = {std::nullopt};
    small.eta = 1;
    small.xi = 1;
    CHECK(check_global_conclusion(g, h, small).pass());

    // Oversized Z is reported with the node named.
    GlobalConclusionCertificate fat = cert;
    fat.xi = 0;
    auto report = check_global_conclusion(g, h, fat);
    CHECK(!report.pass());
    CHECK(report.violations.front().find("node 0") != std::string::npos);
}

TEST_CASE("certificates with exceptional-vertex data get the extended checks") {
    // Star host: center of degree 3, pattern requiring degree-2 vertices.
    MultiGraph g(4, {{0, 1}, {0, 2}, {0, 3}});
    MultiGraph h(3, {{0, 1}, {1, 2}, {0, 2}});

    TreeCutDecomposition d;
    d.graph = g;
    d.node_count = 4;
    d.tree_edges = {{0, 1}, {0, 2}, {0, 3}};
    d.bags = {vbit(0), vbit(1), vbit(2), vbit(3)};

    GlobalConclusionCertificate cert;
    cert.decomposition = d;
    cert.z_sets = {{}, {}, {}, {}};
    cert.k_thresholds = {2, 2, 2, 2};
    cert.u_sets = {vbit(0), std::nullopt, std::nullopt, std::nullopt};
    cert.eta = 3;
    cert.xi = 1;
    // Center torso: degree-3 bag vertex above threshold 2, peripheral
    // leaves of degree 1 below it; leaf bags are singletons.
    CHECK(check_global_conclusion(g, h, cert).pass());

    // A leaf bag with two vertices breaks statement 4.
    GlobalConclusionCertificate wide = cert;
    wide.decomposition.node_count = 3;
    wide.decomposition.tree_edges = {{0, 1}, {0, 2}};
    wide.decomposition.bags = {vbit(0), vbit(1), vbit(2) | vbit(3)};
    wide.z_sets = {{}, {}, {}};
    wide.k_thresholds = {2, 2, 3};
    wide.u_sets = {vbit(0), std::nullopt, std::nullopt};
    auto report = check_global_conclusion(g, h, wide);
    bool leaf_violation = false;
    for (const auto& v : report.violations)
        if (v.find("more than one vertex") != std::string::npos) leaf_violation = true;
    CHECK(leaf_violation);

    // A peripheral vertex reaching the threshold breaks statement 2.
    GlobalConclusionCertificate low = cert;
    low.k_thresholds = {1, 1, 1, 1};  // the center leaves have degree 1
    auto report2 = check_global_conclusion(g, h, low);
    bool peripheral_violation = false;
    for (const auto& v : report2.violations)
        if (v.find("peripheral vertex") != std::string::npos) peripheral_violation = true;
    CHECK(peripheral_violation);
}

TEST_CASE("certificate files round-trip") {
    MultiGraph g(3, {{0, 1}, {1, 2}});
    GlobalConclusionCertificate cert;
    cert.decomposition = TreeCutDecomposition::single_bag(g);
    cert.z_sets = {{0, 1}};
    cert.k_thresholds = {2};
    cert.u_sets = {vbit(1)};
    cert.eta = 4;
    cert.xi = 2;
    GlobalConclusionCertificate back = parse_certificate_string(format_certificate(cert), g);
    CHECK(back.z_sets == cert.z_sets);
    CHECK(back.k_thresholds == cert.k_thresholds);
    CHECK(back.u_sets[0] == cert.u_sets[0]);
    CHECK(back.eta == 4);
    CHECK(back.xi == 2);
}

TEST_CASE("bounded-degree conclusion checks") {
    MultiGraph p3(3, {{0, 1}, {1, 2}});
    TreeCutDecomposition d;
    d.graph = p3;
    d.node_count = 3;
    d.tree_edges = {{0, 1}, {1, 2}};
    d.bags = {vbit(0), vbit(1), vbit(2)};
    CHECK(check_mw_conclusion(p3, d, 2).pass());

    MultiGraph k5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
    auto fail = check_mw_conclusion(k5, TreeCutDecomposition::single_bag(k5), 4);
    CHECK(!fail.pass());

    CHECK(!check_mw_conclusion(p3, d, 0).pass());  // adhesion exceeds xi
}

TEST_CASE("k-simplicity and xi-niceness") {
    MultiGraph simple(3, {{0, 1}, {1, 2}});
    CHECK(is_k_simple(simple, 1));
    MultiGraph doubled(2, {{0, 1}, {0, 1}});
    CHECK(!is_k_simple(doubled, 1));
    CHECK(is_k_simple(doubled, 2));

    MultiGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    auto nice = is_xi_nice(triangle, 3);
    REQUIRE(nice.has_value());
    CHECK(is_decomposition_xi_nice(*nice, 3));

    MultiGraph k5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
    CHECK(!is_xi_nice(k5, 3).has_value());
}

TEST_CASE("balanced split rejects decompositions that are not xi-nice") {
    MultiGraph k5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
    CHECK_THROWS_AS(balanced_split(TreeCutDecomposition::single_bag(k5), 3),
                    std::invalid_argument);
}

TEST_CASE("balanced split on two blocks and on a star") {
    // Two triangles joined by a single light edge, one bag per triangle.
    MultiGraph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    TreeCutDecomposition d;
    d.graph = g;
    d.node_count = 2;
    d.tree_edges = {{0, 1}};
    d.bags = {vbit(0) | vbit(1) | vbit(2), vbit(3) | vbit(4) | vbit(5)};
    REQUIRE(is_decomposition_xi_nice(d, 3));
    BalancedSplit split = balanced_split(d, 3);
    CHECK(split.kind == BalancedSplit::TreeEdge);
    CHECK(3 * split.incident_one >= g.edge_count());
    CHECK(3 * split.incident_two >= g.edge_count());

    // A star of single-edge branches around an empty hub: the hub is the
    // sink and its branches split by the minimal-prefix rule.
    MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    TreeCutDecomposition sd;
    sd.graph = star;
    sd.node_count = 4;
    sd.tree_edges = {{0, 1}, {0, 2}, {0, 3}};
    sd.bags = {vbit(0), vbit(1), vbit(2), vbit(3)};
    REQUIRE(is_decomposition_xi_nice(sd, 2));
    BalancedSplit s2 = balanced_split(sd, 2);
    long long m = star.edge_count();
    if (s2.kind == BalancedSplit::CoreNode) {
        CHECK(9 * s2.core_edges >= m);
    } else if (s2.kind == BalancedSplit::BranchSplit) {
        CHECK(3 * s2.incident_one >= m);
        CHECK(9 * s2.incident_two >= 2 * m);
    }
}
