#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "tckit/census.hpp"
#include "tckit/multigraph.hpp"

using namespace tckit;

TEST_CASE("degrees count loops twice, incidence counts edges once") {
    MultiGraph g(2);
    g.add_edge(0, 0);
    g.add_edge(0, 0);
    g.add_edge(0, 1);
    CHECK(g.degree(0) == 5);
    CHECK(g.degree(1) == 1);
    CHECK(g.edges_incident_with(vbit(0)) == 3);
    CHECK(g.edges_incident_with(vbit(1)) == 1);
    CHECK(g.loop_count_at(0) == 2);
}

TEST_CASE("degree profile is non-increasing and starts at |V|") {
    MultiGraph g(3, {{0, 1}, {1, 2}, {1, 1}});
    DegreeProfile p = degree_profile(g);
    CHECK(p.counts[0] == 3);
    CHECK(p.at_least(4) == 1);  // vertex 1 has degree 4
    CHECK(p.at_least(9) == 0);
    for (size_t k = 1; k < p.counts.size(); ++k) CHECK(p.counts[k] <= p.counts[k - 1]);
}

TEST_CASE("graph text format round-trips and rejects bad input") {
    MultiGraph g = parse_graph_string("# a triangle\n3 3\n0 1\n1 2\n0 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    MultiGraph again = parse_graph_string(format_graph(g));
    CHECK(again.edge_count() == 3);

    CHECK_THROWS_AS(parse_graph_string("2 1\n0 2\n"), parse_error);  // index >= n
    CHECK_THROWS_AS(parse_graph_string("2 2\n0 1\n"), parse_error);  // missing edge
    CHECK_THROWS_AS(parse_graph_string("nonsense\n"), parse_error);
    try {
        parse_graph_string("2 1\n0 5\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("edge-disjoint path counts match the examples") {
    MultiGraph parallel(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(edge_disjoint_path_count(parallel, 0, 1) == 3);

    MultiGraph path(3, {{0, 1}, {1, 2}});
    CHECK(edge_disjoint_path_count(path, 0, 2) == 1);

    MultiGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = u + 1; v < 4; ++v) CHECK(edge_disjoint_path_count(k4, u, v) == 3);

    CHECK_THROWS_AS(edge_disjoint_path_count(path, 1, 1), std::invalid_argument);
}

TEST_CASE("Menger value equals the minimum separating cut order") {
    auto graphs = census_up_to(4, 5, false);
    graphs.push_back(MultiGraph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}));
    for (const auto& g : graphs)
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (VertexId v = u + 1; v < g.vertex_count(); ++v)
                CHECK(edge_disjoint_path_count(g, u, v) ==
                      oracles::brute_min_cut_separating(g, u, v));
}

TEST_CASE("bridges and 2-edge-connected components") {
    MultiGraph path(3, {{0, 1}, {1, 2}});
    auto b = bridges_and_2ec_components(path);
    CHECK(b.bridges == std::vector<EdgeId>{0, 1});
    CHECK(b.components.size() == 3);

    MultiGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    auto t = bridges_and_2ec_components(triangle);
    CHECK(t.bridges.empty());
    CHECK(t.components.size() == 1);
    CHECK(t.components[0] == triangle.all_vertices());

    // Two triangles joined by one edge.
    MultiGraph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    auto r = bridges_and_2ec_components(two);
    CHECK(r.bridges == std::vector<EdgeId>{6});
    CHECK(r.components.size() == 2);
    CHECK(r.bridges == oracles::brute_bridges(two));

    // Loops are never bridges.
    MultiGraph loopy(2, {{0, 1}, {0, 0}});
    CHECK(bridges_and_2ec_components(loopy).bridges == std::vector<EdgeId>{0});
    CHECK(oracles::brute_bridges(loopy) == std::vector<EdgeId>{0});
}

TEST_CASE("bridge finder agrees with the deletion oracle on small graphs") {
    std::vector<MultiGraph> samples = {
        MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {1, 2}}),
        MultiGraph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}}),
        MultiGraph(4, {{0, 0}, {0, 1}, {2, 3}}),
    };
    for (const auto& g : samples) CHECK(bridges_and_2ec_components(g).bridges == oracles::brute_bridges(g));
}
