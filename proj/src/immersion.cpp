#include "tckit/immersion.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tckit {

namespace {

using EdgeMask = std::uint64_t;

struct Router {
    const MultiGraph& g;
    const MultiGraph& h;
    const std::vector<VertexId>& vmap;
    const std::vector<int>& order;  // H-edge routing order
    std::vector<std::vector<EdgeId>> routes;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj;

    Router(const MultiGraph& graph, const MultiGraph& pattern, const std::vector<VertexId>& vm,
           const std::vector<int>& ord)
        : g(graph), h(pattern), vmap(vm), order(ord) {
        routes.resize(h.edge_count());
        adj.resize(g.vertex_count());
        for (EdgeId i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            adj[e.u].push_back({e.v, i});
            if (!e.is_loop()) adj[e.v].push_back({e.u, i});
        }
    }

    // Simple paths from cur to target over unused edges.
    bool paths(VertexId cur, VertexId target, EdgeMask used, VertexSet visited,
               std::vector<EdgeId>& walk, const std::function<bool(EdgeMask)>& done) {
        if (cur == target) return done(used);
        for (auto [next, e] : adj[cur]) {
            if (used & (EdgeMask{1} << e)) continue;
            if (g.edge(e).is_loop()) continue;
            if (vcontains(visited, next)) continue;
            walk.push_back(e);
            if (paths(next, target, used | (EdgeMask{1} << e), visited | vbit(next), walk, done))
                return true;
            walk.pop_back();
        }
        return false;
    }

    // Cycles through start: closed walks with distinct interior vertices.
    bool cycles(VertexId start, VertexId cur, EdgeMask used, VertexSet visited,
                std::vector<EdgeId>& walk, const std::function<bool(EdgeMask)>& done) {
        for (auto [next, e] : adj[cur]) {
            if (used & (EdgeMask{1} << e)) continue;
            if (g.edge(e).is_loop()) {
                // A loop closes a cycle only as the sole edge at the start.
                if (cur == start && walk.empty()) {
                    walk.push_back(e);
                    if (done(used | (EdgeMask{1} << e))) return true;
                    walk.pop_back();
                }
                continue;
            }
            if (next == start) {
                if (walk.empty()) continue;  // reuse direction: id order breaks the symmetry
                if (walk.front() > e) continue;
                walk.push_back(e);
                if (done(used | (EdgeMask{1} << e))) return true;
                walk.pop_back();
                continue;
            }
            if (vcontains(visited, next)) continue;
            walk.push_back(e);
            if (cycles(start, next, used | (EdgeMask{1} << e), visited | vbit(next), walk, done))
                return true;
            walk.pop_back();
        }
        return false;
    }

    bool route(size_t i, EdgeMask used) {
        if (i == order.size()) return true;
        int he = order[i];
        const Edge& e = h.edge(he);
        auto done = [&](EdgeMask next_used) { return route(i + 1, next_used); };
        if (e.is_loop()) {
            return cycles(vmap[e.u], vmap[e.u], used, vbit(vmap[e.u]), routes[he], done) ||
                   (routes[he].clear(), false);
        }
        return paths(vmap[e.u], vmap[e.v], used, vbit(vmap[e.u]), routes[he], done) ||
               (routes[he].clear(), false);
    }
};

}  // namespace

std::optional<ImmersionWitness> find_immersion(const MultiGraph& g, const MultiGraph& h) {
    if (h.edge_count() > kImmersionMaxPatternEdges)
        throw capacity_error("pattern graphs are capped at " +
                             std::to_string(kImmersionMaxPatternEdges) + " edges");
    if (g.edge_count() > 62) throw capacity_error("host graphs are capped at 62 edges");
    if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count()) return std::nullopt;

    std::vector<int> order(h.edge_count());
    for (int i = 0; i < h.edge_count(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = h.degree(h.edge(a).u) + h.degree(h.edge(a).v);
        int db = h.degree(h.edge(b).u) + h.degree(h.edge(b).v);
        return da != db ? da > db : a < b;
    });

    std::vector<VertexId> vmap(h.vertex_count(), -1);
    VertexSet taken = 0;
    std::optional<ImmersionWitness> result;
    std::function<bool(int)> assign = [&](int hv) {
        if (hv == h.vertex_count()) {
            Router router(g, h, vmap, order);
            if (!router.route(0, 0)) return false;
            ImmersionWitness w;
            w.vmap = vmap;
            w.emap = std::move(router.routes);
            result = std::move(w);
            return true;
        }
        for (VertexId gv = 0; gv < g.vertex_count(); ++gv) {
            if (vcontains(taken, gv)) continue;
            if (g.degree(gv) < h.degree(hv)) continue;  // path ends and cycles need spare degree
            vmap[hv] = gv;
            taken |= vbit(gv);
            if (assign(hv + 1)) return true;
            taken &= ~vbit(gv);
            vmap[hv] = -1;
        }
        return false;
    };
    assign(0);
    return result;
}

namespace {

bool check_walk(const MultiGraph& g, const std::vector<EdgeId>& seq, VertexId start, VertexId target,
                bool cycle) {
    if (seq.empty()) return false;
    for (EdgeId e : seq)
        if (e < 0 || e >= g.edge_count()) return false;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] == seq[j]) return false;
    VertexId cur = start;
    VertexSet visited = vbit(start);
    for (size_t i = 0; i < seq.size(); ++i) {
        const Edge& e = g.edge(seq[i]);
        VertexId next;
        if (e.u == cur) next = e.v;
        else if (e.v == cur) next = e.u;
        else return false;
        bool last = i + 1 == seq.size();
        if (cycle && last) return next == target;
        if (vcontains(visited, next)) return false;
        visited |= vbit(next);
        cur = next;
    }
    return cur == target;
}

}  // namespace

bool verify_witness(const MultiGraph& g, const MultiGraph& h, const ImmersionWitness& w) {
    if (static_cast<int>(w.vmap.size()) != h.vertex_count()) return false;
    if (static_cast<int>(w.emap.size()) != h.edge_count()) return false;
    VertexSet seen = 0;
    for (VertexId gv : w.vmap) {
        if (gv < 0 || gv >= g.vertex_count()) return false;
        if (vcontains(seen, gv)) return false;  // injection
        seen |= vbit(gv);
    }
    std::vector<bool> used(g.edge_count(), false);
    for (int he = 0; he < h.edge_count(); ++he) {
        const Edge& e = h.edge(he);
        const auto& seq = w.emap[he];
        if (e.is_loop()) {
            if (!check_walk(g, seq, w.vmap[e.u], w.vmap[e.u], true)) return false;
        } else {
            if (!check_walk(g, seq, w.vmap[e.u], w.vmap[e.v], false)) return false;
        }
        for (EdgeId id : seq) {
            if (used[id]) return false;  // edge-disjointness across H-edges
            used[id] = true;
        }
    }
    return true;
}

std::optional<int> degree_condition_violation(const MultiGraph& g, const MultiGraph& h) {
    DegreeProfile pg = degree_profile(g), ph = degree_profile(h);
    int top = std::max(g.max_degree(), h.max_degree());
    for (int k = 0; k <= top; ++k)
        if (pg.at_least(k) < ph.at_least(k)) return k;
    return std::nullopt;
}

bool degree_condition(const MultiGraph& g, const MultiGraph& h) {
    return !degree_condition_violation(g, h).has_value();
}

bool is_exceptional(const MultiGraph& h) {
    int big = 0;
    VertexId which = -1;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) >= 2) {
            ++big;
            which = v;
        }
    return big == 1 && h.loop_count_at(which) > 0;
}

MultiGraph make_h_prime(const MultiGraph& h) {
    if (!is_exceptional(h)) return h;
    MultiGraph out(h.vertex_count() + 1);
    VertexId mid = h.vertex_count();
    for (EdgeId i = 1; i < h.edge_count(); ++i) out.add_edge(h.edge(i).u, h.edge(i).v);
    out.add_edge(h.edge(0).u, mid);
    out.add_edge(mid, h.edge(0).v);
    if (is_exceptional(out)) throw std::logic_error("subdivision left the graph exceptional");
    return out;
}

std::string format_witness(const ImmersionWitness& w) {
    std::ostringstream out;
    for (size_t v = 0; v < w.vmap.size(); ++v) out << "v " << v << "->" << w.vmap[v] << '\n';
    for (size_t e = 0; e < w.emap.size(); ++e) {
        out << "e " << e << ":";
        for (EdgeId id : w.emap[e]) out << ' ' << id;
        out << '\n';
    }
    return out.str();
}

}  // namespace tckit
