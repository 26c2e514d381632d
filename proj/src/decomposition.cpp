#include "tckit/decomposition.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace tckit {

TreeCutDecomposition TreeCutDecomposition::single_bag(const MultiGraph& g) {
    TreeCutDecomposition d;
    d.graph = g;
    d.node_count = 1;
    d.bags.assign(1, g.all_vertices());
    return d;
}

namespace {

std::vector<std::vector<int>> tree_adjacency(const TreeCutDecomposition& d) {
    std::vector<std::vector<int>> adj(d.node_count);
    for (auto [a, b] : d.tree_edges) {
        adj.at(a).push_back(b);
        adj.at(b).push_back(a);
    }
    return adj;
}

// Components of T - removed, as a node -> component id map (-1 inside
// `removed`). Component ids follow smallest contained node.
std::vector<int> components_without(const TreeCutDecomposition& d, const std::vector<bool>& removed,
                                    int* count_out = nullptr) {
    auto adj = tree_adjacency(d);
    std::vector<int> comp(d.node_count, -1);
    int count = 0;
    for (int s = 0; s < d.node_count; ++s) {
        if (removed[s] || comp[s] != -1) continue;
        int id = count++;
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[x])
                if (!removed[y] && comp[y] == -1) {
                    comp[y] = id;
                    q.push(y);
                }
        }
    }
    if (count_out) *count_out = count;
    return comp;
}

std::vector<bool> node_set_flags(const TreeCutDecomposition& d, const std::vector<int>& nodes) {
    std::vector<bool> in(d.node_count, false);
    for (int t : nodes) {
        if (t < 0 || t >= d.node_count) throw std::invalid_argument("tree node out of range");
        in[t] = true;
    }
    return in;
}

bool nodes_connected(const TreeCutDecomposition& d, const std::vector<bool>& in) {
    int first = -1, total = 0;
    for (int t = 0; t < d.node_count; ++t)
        if (in[t]) {
            if (first < 0) first = t;
            ++total;
        }
    if (total == 0) return false;
    auto adj = tree_adjacency(d);
    std::queue<int> q;
    q.push(first);
    std::vector<bool> seen(d.node_count, false);
    seen[first] = true;
    int reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (in[y] && !seen[y]) {
                seen[y] = true;
                ++reached;
                q.push(y);
            }
    }
    return reached == total;
}

}  // namespace

ValidationReport validate(const TreeCutDecomposition& d) {
    ValidationReport report;
    auto bad = [&](const std::string& s) { report.violations.push_back(s); };
    if (d.node_count <= 0) {
        bad("tree has no nodes");
        return report;
    }
    if (static_cast<int>(d.bags.size()) != d.node_count) {
        bad("bag list does not match node count");
        return report;
    }
    for (auto [a, b] : d.tree_edges)
        if (a < 0 || a >= d.node_count || b < 0 || b >= d.node_count || a == b) {
            bad("tree edge out of range");
            return report;
        }
    if (static_cast<int>(d.tree_edges.size()) != d.node_count - 1)
        bad("tree has " + std::to_string(d.tree_edges.size()) + " edges, expected " +
            std::to_string(d.node_count - 1));
    std::vector<bool> removed(d.node_count, false);
    int comps = 0;
    components_without(d, removed, &comps);
    if (comps != 1) bad("tree is not connected");
    VertexSet seen = 0;
    for (int t = 0; t < d.node_count; ++t) {
        if (d.bags[t] & ~d.graph.all_vertices()) bad("bag of node " + std::to_string(t) + " has unknown vertices");
        VertexSet overlap = seen & d.bags[t];
        if (overlap)
            for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
                if (vcontains(overlap, v))
                    bad("vertex " + std::to_string(v) + " appears in more than one bag");
        seen |= d.bags[t];
    }
    VertexSet missing = d.graph.all_vertices() & ~seen;
    for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
        if (vcontains(missing, v)) bad("vertex " + std::to_string(v) + " is in no bag");
    return report;
}

std::pair<std::vector<int>, std::vector<int>> tree_split(const TreeCutDecomposition& d, int e) {
    if (e < 0 || e >= static_cast<int>(d.tree_edges.size()))
        throw std::invalid_argument("unknown tree edge");
    auto adj = tree_adjacency(d);
    auto [a, b] = d.tree_edges[e];
    auto grow = [&](int start, int avoid_a, int avoid_b) {
        std::vector<int> side{start};
        std::vector<bool> seen(d.node_count, false);
        seen[start] = true;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[x]) {
                if ((x == avoid_a && y == avoid_b) || (x == avoid_b && y == avoid_a)) continue;
                if (!seen[y]) {
                    seen[y] = true;
                    side.push_back(y);
                    q.push(y);
                }
            }
        }
        std::sort(side.begin(), side.end());
        return side;
    };
    return {grow(a, a, b), grow(b, a, b)};
}

VertexSet bag_union(const TreeCutDecomposition& d, const std::vector<int>& nodes) {
    VertexSet s = 0;
    for (int t : nodes) s |= d.bags.at(t);
    return s;
}

std::vector<EdgeId> adhesion_set(const TreeCutDecomposition& d, int e) {
    auto [left, right] = tree_split(d, e);
    VertexSet a = bag_union(d, left);
    std::vector<EdgeId> out;
    for (EdgeId i = 0; i < d.graph.edge_count(); ++i) {
        const Edge& ed = d.graph.edge(i);
        if (ed.is_loop()) continue;
        if (vcontains(a, ed.u) != vcontains(a, ed.v)) out.push_back(i);
    }
    return out;
}

int adhesion(const TreeCutDecomposition& d) {
    int best = 0;
    for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e)
        best = std::max(best, static_cast<int>(adhesion_set(d, e).size()));
    return best;
}

EdgeCut side_of(const TreeCutDecomposition& d, int e, const std::vector<int>& t) {
    auto [left, right] = tree_split(d, e);
    auto in = node_set_flags(d, t);
    bool in_left = false, in_right = false;
    for (int x : left)
        if (in[x]) in_left = true;
    for (int x : right)
        if (in[x]) in_right = true;
    if (in_left && in_right) throw std::invalid_argument("tree edge has both ends in t");
    const std::vector<int>& b_side = in_left ? left : right;
    VertexSet b = bag_union(d, b_side);
    return cut_from_mask(d.graph, d.graph.all_vertices() & ~b);
}

EdgeCut side_of(const TreeCutDecomposition& d, int e, int t) {
    return side_of(d, e, std::vector<int>{t});
}

Torso torso_at(const TreeCutDecomposition& d, const std::vector<int>& t) {
    auto in = node_set_flags(d, t);
    if (!nodes_connected(d, in)) throw std::invalid_argument("torso anchor must be a connected subtree");
    int comp_count = 0;
    auto comp = components_without(d, in, &comp_count);

    Torso torso;
    // Bag vertices keep G order, then one peripheral vertex per component.
    std::vector<int> torso_vertex_of(d.graph.vertex_count(), -1);
    VertexSet bag = 0;
    for (int x = 0; x < d.node_count; ++x)
        if (in[x]) bag |= d.bags[x];
    int next = 0;
    for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
        if (vcontains(bag, v)) {
            torso_vertex_of[v] = next++;
            torso.bag_vertex_origin.push_back(v);
            torso.vertex_origin.push_back({});
        }
    std::vector<int> peripheral_vertex(comp_count, -1);
    for (int c = 0; c < comp_count; ++c) {
        peripheral_vertex[c] = next++;
        torso.peripheral |= vbit(peripheral_vertex[c]);
        torso.bag_vertex_origin.push_back(-1);
        std::vector<int> nodes;
        for (int x = 0; x < d.node_count; ++x)
            if (comp[x] == c) nodes.push_back(x);
        torso.vertex_origin.push_back(std::move(nodes));
    }
    std::vector<int> node_of(d.graph.vertex_count(), -1);
    for (int x = 0; x < d.node_count; ++x)
        for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
            if (vcontains(d.bags[x], v)) node_of[v] = x;
    for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
        if (!vcontains(bag, v)) torso_vertex_of[v] = peripheral_vertex[comp[node_of[v]]];

    torso.graph.resize(next);
    for (EdgeId i = 0; i < d.graph.edge_count(); ++i) {
        const Edge& e = d.graph.edge(i);
        int a = torso_vertex_of[e.u], b = torso_vertex_of[e.v];
        if (a == b && vcontains(torso.peripheral, a)) continue;  // loop at a peripheral vertex
        torso.graph.add_edge(a, b);
        torso.edge_origin.push_back(i);
    }
    torso.torso_vertex_of = std::move(torso_vertex_of);
    return torso;
}

Torso torso_at(const TreeCutDecomposition& d, int t) { return torso_at(d, std::vector<int>{t}); }

int torso_edge_count(const TreeCutDecomposition& d, const std::vector<int>& t) {
    auto in = node_set_flags(d, t);
    int comp_count = 0;
    auto comp = components_without(d, in, &comp_count);
    std::vector<int> node_of(d.graph.vertex_count(), -1);
    for (int x = 0; x < d.node_count; ++x)
        for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
            if (vcontains(d.bags[x], v)) node_of[v] = x;
    int count = 0;
    for (const Edge& e : d.graph.edges()) {
        int cu = in[node_of[e.u]] ? -1 : comp[node_of[e.u]];
        int cv = in[node_of[e.v]] ? -1 : comp[node_of[e.v]];
        if (cu == cv && cu != -1) continue;  // absorbed into one component
        ++count;
    }
    return count;
}

int torso_edge_count(const TreeCutDecomposition& d, int t) {
    return torso_edge_count(d, std::vector<int>{t});
}

MultiGraph three_center(const Torso& torso) {
    int n = torso.graph.vertex_count();
    std::vector<bool> alive(n, true);
    struct E {
        int u, v;
        bool alive;
    };
    std::vector<E> edges;
    for (const Edge& e : torso.graph.edges()) edges.push_back({e.u, e.v, true});
    auto degree = [&](int v) {
        int deg = 0;
        for (const E& e : edges)
            if (e.alive) {
                if (e.u == v) ++deg;
                if (e.v == v) ++deg;
            }
        return deg;
    };
    for (;;) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && vcontains(torso.peripheral, v) && degree(v) <= 2) {
                pick = v;
                break;
            }
        if (pick < 0) break;
        std::vector<int> inc;
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            if (edges[i].alive && (edges[i].u == pick || edges[i].v == pick)) inc.push_back(i);
        alive[pick] = false;
        if (inc.size() == 2 && !(edges[inc[0]].u == edges[inc[0]].v)) {
            // Two non-loop edges: join the far endpoints (possibly a loop).
            int x = edges[inc[0]].u == pick ? edges[inc[0]].v : edges[inc[0]].u;
            int y = edges[inc[1]].u == pick ? edges[inc[1]].v : edges[inc[1]].u;
            edges[inc[0]].alive = edges[inc[1]].alive = false;
            edges.push_back({x, y, true});
        } else {
            // Degree 0, degree 1, or a single free loop: drop everything.
            for (int i : inc) edges[i].alive = false;
        }
    }
    std::vector<int> newid(n, -1);
    MultiGraph out;
    int count = 0;
    for (int v = 0; v < n; ++v)
        if (alive[v]) newid[v] = count++;
    out.resize(count);
    for (const E& e : edges)
        if (e.alive) out.add_edge(newid[e.u], newid[e.v]);
    return out;
}

int torso_width(const TreeCutDecomposition& d) {
    int best = 0;
    for (int t = 0; t < d.node_count; ++t) best = std::max(best, torso_edge_count(d, t));
    return best;
}

int tree_cut_width(const TreeCutDecomposition& d) {
    int best = adhesion(d);
    for (int t = 0; t < d.node_count; ++t)
        best = std::max(best, three_center(torso_at(d, t)).vertex_count());
    return best;
}

namespace {

// Unlabeled tree shapes per node count, as edge lists; generated from
// Pruefer sequences and deduplicated by an AHU canonical string.
std::string ahu_rooted(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v])
        if (w != parent) kids.push_back(ahu_rooted(adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
}

std::string ahu_canonical(int p, const std::vector<std::pair<int, int>>& edges) {
    if (p == 1) return "()";
    std::vector<std::vector<int>> adj(p);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // Trim leaves to find the 1- or 2-node center.
    std::vector<int> deg(p);
    for (int v = 0; v < p; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<int> layer;
    std::vector<bool> gone(p, false);
    for (int v = 0; v < p; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int remaining = p;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            gone[v] = true;
            --remaining;
            for (int w : adj[v])
                if (!gone[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::string best;
    for (int v : layer) {
        std::string s = ahu_rooted(adj, v, -1);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

constexpr int kMaxShapeNodes = 8;

std::vector<std::vector<std::pair<int, int>>> shapes_on(int q) {
    std::vector<std::vector<std::pair<int, int>>> shapes;
    if (q <= 0) return shapes;
    if (q == 1) {
        shapes.push_back({});
        return shapes;
    }
    if (q == 2) {
        shapes.push_back({{0, 1}});
        return shapes;
    }
    std::set<std::string> seen;
    std::vector<int> pruefer(q - 2, 0);
    for (;;) {
        // Decode the Pruefer sequence.
        std::vector<int> deg(q, 1);
        for (int x : pruefer) ++deg[x];
        std::vector<std::pair<int, int>> edges;
        std::vector<bool> used(q, false);
        for (int x : pruefer) {
            for (int leaf = 0; leaf < q; ++leaf)
                if (deg[leaf] == 1 && !used[leaf]) {
                    edges.push_back({leaf, x});
                    used[leaf] = true;
                    --deg[x];
                    break;
                }
        }
        std::vector<int> last;
        for (int v = 0; v < q; ++v)
            if (!used[v] && deg[v] == 1) last.push_back(v);
        edges.push_back({last[0], last[1]});
        if (seen.insert(ahu_canonical(q, edges)).second) shapes.push_back(edges);
        // Next sequence.
        int i = q - 3;
        while (i >= 0 && pruefer[i] == q - 1) pruefer[i--] = 0;
        if (i < 0) break;
        ++pruefer[i];
    }
    return shapes;
}

const std::vector<std::vector<std::pair<int, int>>>& tree_shapes(int p) {
    // Function-local static: built once, safe for concurrent callers.
    static const auto cache = [] {
        std::vector<std::vector<std::vector<std::pair<int, int>>>> all(kMaxShapeNodes + 1);
        for (int q = 1; q <= kMaxShapeNodes; ++q) all[q] = shapes_on(q);
        return all;
    }();
    if (p < 1 || p > kMaxShapeNodes) throw capacity_error("tree shapes are capped at 8 nodes");
    return cache[p];
}

int node_budget(int n) { return std::max(1, n + std::max(0, n - 2)); }

// Per-shape torso classifier: comp[t][s] = component id of s in T-t, and
// side[e] = bitmask of the nodes on the first endpoint's side of edge e.
struct ShapeInfo {
    int p;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> comp;  // comp[t][s], -1 when s == t
    std::vector<std::uint32_t> side;

    ShapeInfo(int p_, std::vector<std::pair<int, int>> e) : p(p_), edges(std::move(e)) {
        std::vector<std::vector<int>> adj(p);
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        comp.assign(p, std::vector<int>(p, -1));
        for (int t = 0; t < p; ++t) {
            int id = 0;
            for (int nb : adj[t]) {
                std::queue<int> q;
                q.push(nb);
                comp[t][nb] = id;
                while (!q.empty()) {
                    int x = q.front();
                    q.pop();
                    for (int y : adj[x])
                        if (y != t && comp[t][y] == -1) {
                            comp[t][y] = id;
                            q.push(y);
                        }
                }
                ++id;
            }
        }
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            auto [a, b] = edges[i];
            std::uint32_t mask = 0;
            for (int s = 0; s < p; ++s)
                if (s != b && comp[b][s] == comp[b][a]) mask |= 1u << s;
            side.push_back(mask);
        }
    }
};

}  // namespace

void enumerate_decompositions(const MultiGraph& g,
                              const std::function<void(const TreeCutDecomposition&)>& fn) {
    int n = g.vertex_count();
    if (n > kWidthSearchMaxVertices)
        throw capacity_error("decomposition search is capped at " +
                             std::to_string(kWidthSearchMaxVertices) + " vertices");
    int budget = node_budget(n);
    for (int p = 1; p <= budget; ++p) {
        for (const auto& shape : tree_shapes(p)) {
            TreeCutDecomposition d;
            d.graph = g;
            d.node_count = p;
            d.tree_edges = shape;
            d.bags.assign(p, 0);
            std::vector<int> assign(std::max(n, 1), 0);
            for (;;) {
                for (int t = 0; t < p; ++t) d.bags[t] = 0;
                for (VertexId v = 0; v < n; ++v) d.bags[assign[v]] |= vbit(v);
                fn(d);
                int i = n - 1;
                while (i >= 0 && assign[i] == p - 1) assign[i--] = 0;
                if (i < 0) break;
                ++assign[i];
            }
            if (n == 0) break;  // a single empty assignment per shape
        }
    }
}

namespace {

// Max node-torso edge count, aborting early once it reaches `cap`.
int eval_torso_width(const TreeCutDecomposition& d, const ShapeInfo& shape,
                     const std::vector<int>& node_of, int cap) {
    int width = 0;
    for (int t = 0; t < shape.p && width < cap; ++t) {
        int count = 0;
        for (const Edge& e : d.graph.edges()) {
            int nu = node_of[e.u], nv = node_of[e.v];
            if (nu == t || nv == t) {
                ++count;
                continue;
            }
            if (shape.comp[t][nu] != shape.comp[t][nv]) ++count;
        }
        width = std::max(width, count);
    }
    return width;
}

// Adhesion plus 3-center sizes; a node is only expanded when its cheap
// upper bound |bag| + 2/3 * torso edges can still raise the maximum.
int eval_tree_cut_width(const TreeCutDecomposition& d, const ShapeInfo& shape,
                        const std::vector<int>& node_of, int cap) {
    int width = 0;
    for (int i = 0; i < static_cast<int>(shape.edges.size()); ++i) {
        int adh = 0;
        for (const Edge& e : d.graph.edges()) {
            if (e.is_loop()) continue;
            if (((shape.side[i] >> node_of[e.u]) & 1) != ((shape.side[i] >> node_of[e.v]) & 1))
                ++adh;
        }
        width = std::max(width, adh);
        if (width >= cap) return width;
    }
    for (int t = 0; t < shape.p && width < cap; ++t) {
        int count = 0;
        for (const Edge& e : d.graph.edges()) {
            int nu = node_of[e.u], nv = node_of[e.v];
            if (nu == t || nv == t || shape.comp[t][nu] != shape.comp[t][nv]) ++count;
        }
        if (vcount(d.bags[t]) + (2 * count) / 3 <= width) continue;
        width = std::max(width, three_center(torso_at(d, t)).vertex_count());
    }
    return width;
}

template <typename Eval>
int width_search(const MultiGraph& g, Eval eval, TreeCutDecomposition* best_out) {
    int n = g.vertex_count();
    if (n > kWidthSearchMaxVertices)
        throw capacity_error("width search is capped at " + std::to_string(kWidthSearchMaxVertices) +
                             " vertices");
    TreeCutDecomposition d = TreeCutDecomposition::single_bag(g);
    int best = eval(d, ShapeInfo(1, {}), std::vector<int>(std::max(n, 1), 0),
                    g.edge_count() + g.vertex_count() + 1);
    if (best_out) *best_out = d;
    int budget = node_budget(n);
    for (int p = 2; p <= budget; ++p) {
        for (const auto& edges : tree_shapes(p)) {
            ShapeInfo shape(p, edges);
            d.node_count = p;
            d.tree_edges = edges;
            d.bags.assign(p, 0);
            d.bags[0] = g.all_vertices();
            std::vector<int> assign(std::max(n, 1), 0);
            for (;;) {
                int w = eval(d, shape, assign, best);
                if (w < best) {
                    best = w;
                    if (best_out) *best_out = d;
                }
                int i = n - 1;
                while (i >= 0 && assign[i] == p - 1) {
                    d.bags[assign[i]] &= ~vbit(i);
                    d.bags[0] |= vbit(i);
                    assign[i--] = 0;
                }
                if (i < 0) break;
                d.bags[assign[i]] &= ~vbit(i);
                ++assign[i];
                d.bags[assign[i]] |= vbit(i);
            }
            if (n == 0) break;
        }
    }
    return best;
}

}  // namespace

int tree_cut_torso_width(const MultiGraph& g) {
    return width_search(g, eval_torso_width, nullptr);
}

TreeCutDecomposition optimal_torso_decomposition(const MultiGraph& g) {
    TreeCutDecomposition best;
    width_search(g, eval_torso_width, &best);
    return best;
}

int tree_cut_width_of_graph(const MultiGraph& g) {
    return width_search(g, eval_tree_cut_width, nullptr);
}

std::vector<TreeCutDecomposition> sample_decompositions(const MultiGraph& g, int count,
                                                        std::uint64_t seed) {
    int n = g.vertex_count();
    std::vector<TreeCutDecomposition> out;
    std::set<std::string> seen;
    auto push = [&](TreeCutDecomposition d) {
        if (!validate(d).valid()) return;
        std::ostringstream key;
        key << d.node_count << ';';
        for (auto [a, b] : d.tree_edges) key << a << '-' << b << ',';
        key << ';';
        for (VertexSet bag : d.bags) key << bag << ',';
        if (seen.insert(key.str()).second) out.push_back(std::move(d));
    };
    push(TreeCutDecomposition::single_bag(g));
    if (n >= 1) {
        TreeCutDecomposition path;  // singleton bags along a path
        path.graph = g;
        path.node_count = n;
        for (int i = 0; i + 1 < n; ++i) path.tree_edges.push_back({i, i + 1});
        for (VertexId v = 0; v < n; ++v) path.bags.push_back(vbit(v));
        push(std::move(path));
        TreeCutDecomposition star;  // empty hub, singleton leaves
        star.graph = g;
        star.node_count = n + 1;
        star.bags.assign(n + 1, 0);
        for (VertexId v = 0; v < n; ++v) {
            star.tree_edges.push_back({0, v + 1});
            star.bags[v + 1] = vbit(v);
        }
        push(std::move(star));
    }
    std::mt19937_64 rng(seed);
    int budget = node_budget(n);
    int guard = count * 40;
    while (static_cast<int>(out.size()) < count && guard-- > 0) {
        int p = 1 + static_cast<int>(rng() % budget);
        TreeCutDecomposition d;
        d.graph = g;
        d.node_count = p;
        d.bags.assign(p, 0);
        for (int t = 1; t < p; ++t) d.tree_edges.push_back({static_cast<int>(rng() % t), t});
        for (VertexId v = 0; v < n; ++v) d.bags[rng() % p] |= vbit(v);
        push(std::move(d));
    }
    return out;
}

EdgeSumResult edge_sum(const MultiGraph& g1, VertexId v1, const MultiGraph& g2, VertexId v2,
                       const std::vector<std::pair<EdgeId, EdgeId>>& matching) {
    auto dangling = [](const MultiGraph& g, VertexId v) {
        std::vector<EdgeId> out;
        for (EdgeId i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            if (!e.is_loop() && (e.u == v || e.v == v)) out.push_back(i);
        }
        return out;
    };
    auto d1 = dangling(g1, v1), d2 = dangling(g2, v2);
    if (d1.size() != d2.size())
        throw std::invalid_argument("invalid k-edge-sum: non-loop degrees differ");
    if (matching.size() != d1.size())
        throw std::invalid_argument("matching does not cover the dangling edges");
    std::set<EdgeId> m1, m2;
    for (auto [e, f] : matching) {
        m1.insert(e);
        m2.insert(f);
    }
    if (m1 != std::set<EdgeId>(d1.begin(), d1.end()) || m2 != std::set<EdgeId>(d2.begin(), d2.end()))
        throw std::invalid_argument("matching is not a bijection between the dangling edge sets");

    EdgeSumResult res;
    res.from_g1.assign(g1.vertex_count(), -1);
    res.from_g2.assign(g2.vertex_count(), -1);
    int next = 0;
    for (VertexId v = 0; v < g1.vertex_count(); ++v)
        if (v != v1) res.from_g1[v] = next++;
    for (VertexId v = 0; v < g2.vertex_count(); ++v)
        if (v != v2) res.from_g2[v] = next++;
    res.graph.resize(next);
    for (EdgeId i = 0; i < g1.edge_count(); ++i) {
        const Edge& e = g1.edge(i);
        if (e.u == v1 || e.v == v1) continue;
        res.graph.add_edge(res.from_g1[e.u], res.from_g1[e.v]);
    }
    for (EdgeId i = 0; i < g2.edge_count(); ++i) {
        const Edge& e = g2.edge(i);
        if (e.u == v2 || e.v == v2) continue;
        res.graph.add_edge(res.from_g2[e.u], res.from_g2[e.v]);
    }
    for (auto [e, f] : matching) {
        const Edge& e1 = g1.edge(e);
        const Edge& e2 = g2.edge(f);
        VertexId x = e1.u == v1 ? e1.v : e1.u;
        VertexId y = e2.u == v2 ? e2.v : e2.u;
        res.new_edges.push_back(res.graph.add_edge(res.from_g1[x], res.from_g2[y]));
    }
    return res;
}

namespace {

// Torso carrying G labels: bag vertices name G vertices, peripheral
// vertices name the original tree node they point toward.
struct LabeledTorso {
    struct V {
        VertexId g_vertex;  // -1 for peripheral
        int toward;         // original tree node behind this peripheral
    };
    std::vector<V> vertices;
    struct E {
        int a, b;
        EdgeId g_edge;
    };
    std::vector<E> edges;
};

}  // namespace

MultiGraph reconstruct_from_torsos(const TreeCutDecomposition& d) {
    auto report = validate(d);
    if (!report.valid()) throw std::invalid_argument("reconstruct requires a valid decomposition");
    auto adj = tree_adjacency(d);

    // Union-find over tree nodes as they merge.
    std::vector<int> parent(d.node_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

    std::vector<LabeledTorso> part(d.node_count);
    for (int t = 0; t < d.node_count; ++t) {
        Torso torso = torso_at(d, t);
        LabeledTorso& lt = part[t];
        for (int v = 0; v < torso.graph.vertex_count(); ++v) {
            if (vcontains(torso.peripheral, v)) {
                int toward = -1;  // the component node adjacent to t
                for (int node : torso.vertex_origin[v])
                    for (int nb : adj[node])
                        if (nb == t) toward = node;
                lt.vertices.push_back({-1, toward});
            } else {
                lt.vertices.push_back({torso.bag_vertex_origin[v], -1});
            }
        }
        for (EdgeId i = 0; i < torso.graph.edge_count(); ++i)
            lt.edges.push_back({torso.graph.edge(i).u, torso.graph.edge(i).v, torso.edge_origin[i]});
    }

    // Fold leaves one at a time.
    std::vector<std::pair<int, int>> remaining = d.tree_edges;
    while (!remaining.empty()) {
        // Pick a leaf of the remaining tree.
        std::map<int, int> deg;
        for (auto [a, b] : remaining) {
            ++deg[find(a)];
            ++deg[find(b)];
        }
        int leaf = -1, host = -1, edge_index = -1;
        for (int i = 0; i < static_cast<int>(remaining.size()); ++i) {
            int a = find(remaining[i].first), b = find(remaining[i].second);
            if (deg[a] == 1) {
                leaf = a;
                host = b;
                edge_index = i;
                break;
            }
            if (deg[b] == 1) {
                leaf = b;
                host = a;
                edge_index = i;
                break;
            }
        }
        remaining.erase(remaining.begin() + edge_index);

        LabeledTorso& hl = part[host];
        LabeledTorso& ll = part[leaf];
        auto peripheral_toward = [&](LabeledTorso& lt, int target) {
            for (int v = 0; v < static_cast<int>(lt.vertices.size()); ++v)
                if (lt.vertices[v].g_vertex == -1 && find(lt.vertices[v].toward) == target) return v;
            throw std::logic_error("missing peripheral vertex during reconstruction");
        };
        int w_host = peripheral_toward(hl, leaf);
        int w_leaf = peripheral_toward(ll, host);

        // Match dangling edges by shared G edge id (the adhesion set).
        std::map<EdgeId, std::pair<int, int>> ends;  // g_edge -> (host far end, leaf far end)
        LabeledTorso merged;
        std::vector<int> hid(hl.vertices.size(), -1), lid(ll.vertices.size(), -1);
        for (int v = 0; v < static_cast<int>(hl.vertices.size()); ++v)
            if (v != w_host) {
                hid[v] = static_cast<int>(merged.vertices.size());
                merged.vertices.push_back(hl.vertices[v]);
            }
        for (int v = 0; v < static_cast<int>(ll.vertices.size()); ++v)
            if (v != w_leaf) {
                lid[v] = static_cast<int>(merged.vertices.size());
                merged.vertices.push_back(ll.vertices[v]);
            }
        for (const auto& e : hl.edges) {
            if (e.a == w_host || e.b == w_host) {
                ends[e.g_edge].first = e.a == w_host ? e.b : e.a;
                continue;
            }
            merged.edges.push_back({hid[e.a], hid[e.b], e.g_edge});
        }
        for (const auto& e : ll.edges) {
            if (e.a == w_leaf || e.b == w_leaf) {
                auto it = ends.find(e.g_edge);
                if (it == ends.end()) throw std::logic_error("adhesion mismatch during reconstruction");
                it->second.second = e.a == w_leaf ? e.b : e.a;
                continue;
            }
            merged.edges.push_back({lid[e.a], lid[e.b], e.g_edge});
        }
        for (auto& [g_edge, pair] : ends)
            merged.edges.push_back({hid[pair.first], lid[pair.second], g_edge});

        parent[find(leaf)] = host;
        part[host] = std::move(merged);
    }

    const LabeledTorso& final_part = part[find(0)];
    std::vector<bool> seen_edge(d.graph.edge_count(), false);
    for (const auto& e : final_part.edges) {
        VertexId u = final_part.vertices[e.a].g_vertex;
        VertexId v = final_part.vertices[e.b].g_vertex;
        if (u < 0 || v < 0) throw std::logic_error("peripheral vertex survived reconstruction");
        if (e.g_edge < 0 || e.g_edge >= d.graph.edge_count() || seen_edge[e.g_edge])
            throw std::logic_error("edge id mismatch during reconstruction");
        const Edge& orig = d.graph.edge(e.g_edge);
        if (!((orig.u == u && orig.v == v) || (orig.u == v && orig.v == u)))
            throw std::logic_error("edge endpoints changed during reconstruction");
        seen_edge[e.g_edge] = true;
    }
    MultiGraph out(d.graph.vertex_count());
    for (EdgeId i = 0; i < d.graph.edge_count(); ++i) {
        if (!seen_edge[i]) throw std::logic_error("missing edge after reconstruction");
        out.add_edge(d.graph.edge(i).u, d.graph.edge(i).v);
    }
    return out;
}

std::string format_decomposition(const TreeCutDecomposition& d) {
    std::ostringstream out;
    out << "tree " << d.node_count << '\n';
    for (int t = 0; t < d.node_count; ++t) {
        out << "node " << t << " bag";
        for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
            if (vcontains(d.bags[t], v)) out << ' ' << v;
        out << '\n';
    }
    for (auto [a, b] : d.tree_edges) out << "tedge " << a << ' ' << b << '\n';
    return out.str();
}

TreeCutDecomposition parse_decomposition(std::istream& in, const MultiGraph& g) {
    TreeCutDecomposition d;
    d.graph = g;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::vector<bool> seen_node;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::string kind;
        if (!(row >> kind)) continue;
        if (kind == "tree") {
            int p = -1;
            if (!(row >> p) || p <= 0) throw parse_error(lineno, "bad node count");
            d.node_count = p;
            d.bags.assign(p, 0);
            seen_node.assign(p, false);
            have_header = true;
        } else if (kind == "node") {
            if (!have_header) throw parse_error(lineno, "node before tree header");
            int id = -1;
            std::string bagword;
            if (!(row >> id >> bagword) || bagword != "bag" || id < 0 || id >= d.node_count)
                throw parse_error(lineno, "expected `node <id> bag v...`");
            if (seen_node[id]) throw parse_error(lineno, "duplicate node " + std::to_string(id));
            seen_node[id] = true;
            int v;
            while (row >> v) {
                if (v < 0 || v >= g.vertex_count()) throw parse_error(lineno, "bag vertex out of range");
                d.bags[id] |= vbit(v);
            }
        } else if (kind == "tedge") {
            if (!have_header) throw parse_error(lineno, "tedge before tree header");
            int a = -1, b = -1;
            if (!(row >> a >> b) || a < 0 || b < 0 || a >= d.node_count || b >= d.node_count)
                throw parse_error(lineno, "bad tree edge");
            d.tree_edges.push_back({a, b});
        } else {
            throw parse_error(lineno, "unknown directive `" + kind + "`");
        }
    }
    if (!have_header) throw parse_error(lineno, "missing tree header");
    for (int t = 0; t < d.node_count; ++t)
        if (!seen_node[t]) throw parse_error(lineno, "node " + std::to_string(t) + " missing");
    auto report = validate(d);
    if (!report.valid()) throw parse_error(lineno, "invalid decomposition: " + report.violations.front());
    return d;
}

TreeCutDecomposition parse_decomposition_string(const std::string& text, const MultiGraph& g) {
    std::istringstream in(text);
    return parse_decomposition(in, g);
}

TreeCutDecomposition double_split(const TreeCutDecomposition& d, const std::vector<int>& anchor,
                                  VertexSet side_a) {
    auto in = node_set_flags(d, anchor);
    if (!nodes_connected(d, in)) throw std::invalid_argument("anchor must be a connected subtree");
    // Contract the anchor into node 0 of the working tree.
    std::vector<int> map(d.node_count, -1);
    int p0 = 1;
    std::vector<VertexSet> y{0};
    for (int t = 0; t < d.node_count; ++t) {
        if (in[t]) {
            map[t] = 0;
            y[0] |= d.bags[t];
        } else {
            map[t] = p0++;
            y.push_back(d.bags[t]);
        }
    }
    std::vector<std::pair<int, int>> contracted;
    for (auto [a, b] : d.tree_edges)
        if (map[a] != map[b]) contracted.push_back({map[a], map[b]});

    TreeCutDecomposition out;
    out.graph = d.graph;
    out.node_count = 2 * p0;
    for (auto [a, b] : contracted) {
        out.tree_edges.push_back({a, b});
        out.tree_edges.push_back({a + p0, b + p0});
    }
    out.tree_edges.push_back({0, p0});
    out.bags.assign(2 * p0, 0);
    for (int t = 0; t < p0; ++t) {
        out.bags[t] = y[t] & side_a;
        out.bags[t + p0] = y[t] & ~side_a & d.graph.all_vertices();
    }
    return out;
}

TreeCutDecomposition prune_empty_nodes(const TreeCutDecomposition& d) {
    TreeCutDecomposition cur = d;
    for (;;) {
        if (cur.node_count <= 1) break;
        auto adj = tree_adjacency(cur);
        int target = -1;
        bool suppress = false;
        for (int t = 0; t < cur.node_count && target < 0; ++t) {
            if (cur.bags[t]) continue;
            if (adj[t].size() <= 1) target = t;
            if (adj[t].size() == 2) {
                target = t;
                suppress = true;
            }
        }
        if (target < 0) break;
        TreeCutDecomposition next;
        next.graph = cur.graph;
        std::vector<int> newid(cur.node_count, -1);
        for (int t = 0; t < cur.node_count; ++t)
            if (t != target) {
                newid[t] = next.node_count++;
                next.bags.push_back(cur.bags[t]);
            }
        for (auto [a, b] : cur.tree_edges)
            if (a != target && b != target) next.tree_edges.push_back({newid[a], newid[b]});
        if (suppress) next.tree_edges.push_back({newid[adj[target][0]], newid[adj[target][1]]});
        cur = std::move(next);
    }
    return cur;
}

}  // namespace tckit
