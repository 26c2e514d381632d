#include "tckit/carving.hpp"

#include <algorithm>
#include <sstream>

#include "tckit/census.hpp"
#include "tckit/tangles.hpp"

namespace tckit {

bool is_weak_carving(const TreeCutDecomposition& d) {
    if (!validate(d).valid()) return false;
    std::vector<int> deg(d.node_count, 0);
    for (auto [a, b] : d.tree_edges) {
        ++deg[a];
        ++deg[b];
    }
    for (int t = 0; t < d.node_count; ++t) {
        bool leaf = d.node_count == 1 ? false : deg[t] == 1;
        if (leaf && vcount(d.bags[t]) != 1) return false;
        if (!leaf && d.bags[t] != 0) return false;
    }
    return true;
}

bool is_carving(const TreeCutDecomposition& d) {
    if (!is_weak_carving(d)) return false;
    std::vector<int> deg(d.node_count, 0);
    for (auto [a, b] : d.tree_edges) {
        ++deg[a];
        ++deg[b];
    }
    for (int t = 0; t < d.node_count; ++t)
        if (deg[t] != 1 && deg[t] != 3) return false;
    return true;
}

namespace {

// Cubic trees over n labeled leaves via recursive insertion: leaf i is
// spliced into every edge of the tree on leaves 0..i-1. Each unordered
// cubic tree arises exactly once.
struct CarvingSearch {
    const MultiGraph& g;
    int n;
    int best;
    // Tree stored as parent-free edge list over node ids; leaves are 0..n-1,
    // internal nodes n, n+1, ...
    std::vector<std::pair<int, int>> edges;
    int next_internal;

    explicit CarvingSearch(const MultiGraph& graph)
        : g(graph), n(graph.vertex_count()), best(graph.edge_count() + 1), next_internal(n) {}

    int cut_order(VertexSet side) const {
        int order = 0;
        for (const Edge& e : g.edges())
            if (!e.is_loop() && vcontains(side, e.u) != vcontains(side, e.v)) ++order;
        return order;
    }

    int width_of_current() {
        // Leaf sets per edge by peeling from an adjacency map.
        int width = 0;
        for (size_t cut = 0; cut < edges.size() && width < best; ++cut) {
            VertexSet side = 0;
            // Collect leaves reachable from edges[cut].first avoiding the edge.
            std::vector<int> stack{edges[cut].first};
            std::vector<bool> seen(next_internal, false);
            seen[edges[cut].first] = true;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                if (x < n) side |= vbit(x);
                for (size_t i = 0; i < edges.size(); ++i) {
                    if (i == cut) continue;
                    auto [a, b] = edges[i];
                    if (a == x && !seen[b]) {
                        seen[b] = true;
                        stack.push_back(b);
                    }
                    if (b == x && !seen[a]) {
                        seen[a] = true;
                        stack.push_back(a);
                    }
                }
            }
            width = std::max(width, cut_order(side));
        }
        return width;
    }

    void rec(int leaf) {
        if (leaf == n) {
            best = std::min(best, width_of_current());
            return;
        }
        size_t count = edges.size();
        for (size_t i = 0; i < count; ++i) {
            auto [a, b] = edges[i];
            int mid = next_internal++;
            edges[i] = {a, mid};
            edges.push_back({mid, b});
            edges.push_back({mid, leaf});
            rec(leaf + 1);
            edges.pop_back();
            edges.pop_back();
            edges[i] = {a, b};
            --next_internal;
        }
    }
};

}  // namespace

int carving_width(const MultiGraph& g) {
    int n = g.vertex_count();
    if (n > kCarvingMaxLeaves)
        throw capacity_error("carving search is capped at " + std::to_string(kCarvingMaxLeaves) +
                             " leaves");
    if (n <= 1) return 0;
    if (n == 2) return cut_from_mask(g, vbit(0)).order();
    CarvingSearch search(g);
    search.edges.push_back({0, 1});
    search.rec(2);
    return search.best;
}

Carving torso_to_carving(const TreeCutDecomposition& d) {
    const MultiGraph& g = d.graph;
    Carving out;
    if (g.vertex_count() <= 1) {
        out.decomposition = TreeCutDecomposition::single_bag(g);
        out.weak = true;
        return out;
    }

    // Step 1: move every bag vertex to its own pendant leaf.
    TreeCutDecomposition work;
    work.graph = g;
    work.node_count = d.node_count;
    work.tree_edges = d.tree_edges;
    work.bags.assign(d.node_count, 0);
    for (int t = 0; t < d.node_count; ++t)
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (vcontains(d.bags[t], v)) {
                work.tree_edges.push_back({t, work.node_count});
                work.bags.push_back(vbit(v));
                ++work.node_count;
            }

    // Original nodes that stayed leaves carry empty bags; drop them.
    work = prune_empty_nodes(work);

    // Step 2: split nodes of degree >= 4 with fresh empty nodes.
    for (;;) {
        std::vector<std::vector<int>> adj(work.node_count);
        for (auto [a, b] : work.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        int t = -1;
        for (int x = 0; x < work.node_count; ++x)
            if (static_cast<int>(adj[x].size()) >= 4) t = x;
        if (t < 0) break;
        std::sort(adj[t].begin(), adj[t].end());
        int x = adj[t][0], y = adj[t][1];
        int mid = work.node_count++;
        work.bags.push_back(0);
        auto drop = [&](int u, int v) {
            for (size_t i = 0; i < work.tree_edges.size(); ++i) {
                auto [a, b] = work.tree_edges[i];
                if ((a == u && b == v) || (a == v && b == u)) {
                    work.tree_edges.erase(work.tree_edges.begin() + i);
                    return;
                }
            }
        };
        drop(t, x);
        drop(t, y);
        work.tree_edges.push_back({mid, x});
        work.tree_edges.push_back({mid, y});
        work.tree_edges.push_back({mid, t});
    }

    // Step 3: contract the remaining empty degree-2 nodes.
    work = prune_empty_nodes(work);

    out.decomposition = std::move(work);
    out.weak = !is_carving(out.decomposition);
    return out;
}

BoundCheck carving_torso_bound_check(const MultiGraph& g) {
    if (!g.loopless()) throw std::invalid_argument("the 3w/2 bound is stated for loopless graphs");
    BoundCheck check;
    check.carving_width = carving_width(g);
    check.tree_cut_torso_width = tree_cut_torso_width(g);
    check.pass = check.tree_cut_torso_width <= (3 * check.carving_width) / 2;
    return check;
}

DualityReport verify_duality(const MultiGraph& g) {
    DualityReport r;
    r.tctw = tree_cut_torso_width(g);
    r.cw = carving_width(g);
    r.mu = max_tangle_order(g);
    r.loopless = g.loopless();
    r.pass1 = r.cw <= r.tctw && r.mu <= r.tctw;
    r.pass2 = !r.loopless || r.tctw <= (3 * r.cw) / 2;
    r.pass3 = r.tctw <= 3 * r.mu;
    return r;
}

std::string duality_report_line(const MultiGraph& g, const DualityReport& r) {
    std::ostringstream out;
    out << canonical_form(g) << ' ' << r.tctw << ' ' << r.cw << ' ' << r.mu << ' ' << (r.pass1 ? '1' : '0')
        << ' ' << (r.loopless ? (r.pass2 ? '1' : '0') : '-') << ' ' << (r.pass3 ? '1' : '0');
    return out.str();
}

}  // namespace tckit
