#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "tckit/edge_cut.hpp"
#include "tckit/smoothing.hpp"

namespace tckit::oracles {

namespace {

using EdgeMask = std::uint64_t;

// All simple paths between a and b as edge-id masks.
std::vector<EdgeMask> all_paths(const MultiGraph& g, VertexId a, VertexId b) {
    std::vector<EdgeMask> out;
    std::function<void(VertexId, VertexSet, EdgeMask)> walk = [&](VertexId cur, VertexSet visited,
                                                                  EdgeMask used) {
        if (cur == b) {
            out.push_back(used);
            return;
        }
        for (EdgeId i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            if (e.is_loop() || (used & (EdgeMask{1} << i))) continue;
            VertexId next;
            if (e.u == cur) next = e.v;
            else if (e.v == cur) next = e.u;
            else continue;
            if (vcontains(visited, next)) continue;
            walk(next, visited | vbit(next), used | (EdgeMask{1} << i));
        }
    };
    walk(a, vbit(a), 0);
    return out;
}

// All cycles through a (distinct vertices) as edge-id masks.
std::vector<EdgeMask> all_cycles(const MultiGraph& g, VertexId a) {
    std::vector<EdgeMask> out;
    for (EdgeId i = 0; i < g.edge_count(); ++i)
        if (g.edge(i).is_loop() && g.edge(i).u == a) out.push_back(EdgeMask{1} << i);
    std::function<void(VertexId, VertexSet, EdgeMask, EdgeId)> walk =
        [&](VertexId cur, VertexSet visited, EdgeMask used, EdgeId first) {
            for (EdgeId i = 0; i < g.edge_count(); ++i) {
                const Edge& e = g.edge(i);
                if (e.is_loop() || (used & (EdgeMask{1} << i))) continue;
                VertexId next;
                if (e.u == cur) next = e.v;
                else if (e.v == cur) next = e.u;
                else continue;
                if (next == a) {
                    if (used != 0 && i > first) out.push_back(used | (EdgeMask{1} << i));
                    continue;
                }
                if (vcontains(visited, next)) continue;
                walk(next, visited | vbit(next), used | (EdgeMask{1} << i),
                     used == 0 ? i : first);
            }
        };
    walk(a, vbit(a), 0, -1);
    return out;
}

}  // namespace

bool immersion_oracle(const MultiGraph& g, const MultiGraph& h) {
    int hv = h.vertex_count(), gv = g.vertex_count();
    if (hv > gv || h.edge_count() > g.edge_count()) return false;
    // The degree statistic is necessary: path ends and cycles consume as
    // much host degree as the pattern degree.
    {
        std::vector<int> dg, dh;
        for (VertexId v = 0; v < gv; ++v) dg.push_back(g.degree(v));
        for (VertexId v = 0; v < hv; ++v) dh.push_back(h.degree(v));
        std::sort(dg.rbegin(), dg.rend());
        std::sort(dh.rbegin(), dh.rend());
        for (size_t i = 0; i < dh.size(); ++i)
            if (dh[i] > dg[i]) return false;
    }
    if (h.edge_count() == 0) return true;

    std::vector<VertexId> pick(hv, -1);
    std::vector<bool> taken(gv, false);

    std::function<bool()> routed = [&]() {
        // Candidate edge sets per pattern edge under this injection.
        std::vector<std::vector<EdgeMask>> candidates(h.edge_count());
        for (EdgeId i = 0; i < h.edge_count(); ++i) {
            const Edge& e = h.edge(i);
            candidates[i] = e.is_loop() ? all_cycles(g, pick[e.u])
                                        : all_paths(g, pick[e.u], pick[e.v]);
            if (candidates[i].empty()) return false;
        }
        std::map<std::pair<int, EdgeMask>, bool> memo;
        std::function<bool(int, EdgeMask)> assign = [&](int i, EdgeMask used) {
            if (i == h.edge_count()) return true;
            auto key = std::make_pair(i, used);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            bool ok = false;
            for (EdgeMask mask : candidates[i])
                if (!(mask & used) && assign(i + 1, used | mask)) {
                    ok = true;
                    break;
                }
            memo[key] = ok;
            return ok;
        };
        return assign(0, 0);
    };

    std::function<bool(int)> inject = [&](int i) {
        if (i == hv) return routed();
        for (VertexId v = 0; v < gv; ++v) {
            if (taken[v]) continue;
            taken[v] = true;
            pick[i] = v;
            if (inject(i + 1)) return true;
            taken[v] = false;
        }
        return false;
    };
    return inject(0);
}

bool brute_isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    int n = a.vertex_count();
    auto pairs = [](const MultiGraph& g, const std::vector<int>& perm) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : g.edges()) {
            int x = perm[e.u], y = perm[e.v];
            out.push_back({std::min(x, y), std::max(x, y)});
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    auto target = pairs(a, id);
    std::vector<int> perm = id;
    do {
        if (pairs(b, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool direct_smooth(const TreeCutDecomposition& d, int theta) {
    std::vector<std::vector<EdgeId>> anchors;
    for (const Cell& c : cells(d, theta))
        if (c.is_cell) anchors.push_back(torso_at(d, c.nodes).edge_origin);
    for (int t = 0; t < d.node_count; ++t) anchors.push_back(torso_at(d, t).edge_origin);
    for (const auto& torso_edges : anchors) {
        int m = static_cast<int>(torso_edges.size());
        for (int size = 1; size <= std::min(theta, m); ++size) {
            // All (Y, Z) pairs of torso edge subsets of this size.
            std::vector<std::vector<EdgeId>> subsets;
            std::function<void(int, std::vector<EdgeId>&)> gen = [&](int from,
                                                                     std::vector<EdgeId>& cur) {
                if (static_cast<int>(cur.size()) == size) {
                    subsets.push_back(cur);
                    return;
                }
                for (int i = from; i < m; ++i) {
                    cur.push_back(torso_edges[i]);
                    gen(i + 1, cur);
                    cur.pop_back();
                }
            };
            std::vector<EdgeId> cur;
            gen(0, cur);
            for (const auto& y : subsets)
                for (const auto& z : subsets)
                    if (min_cut_between_edge_sets(d.graph, y, z, size)) return false;
        }
    }
    return true;
}

int brute_min_cut_separating(const MultiGraph& g, VertexId u, VertexId v) {
    int best = g.edge_count() + 1;
    VertexSet full = g.all_vertices();
    for (VertexSet mask = 0;; ++mask) {
        if (vcontains(mask, u) && !vcontains(mask, v))
            best = std::min(best, cut_from_mask(g, mask).order());
        if (mask == full) break;
    }
    return best;
}

std::vector<EdgeId> brute_bridges(const MultiGraph& g) {
    std::vector<EdgeId> out;
    size_t before = g.components().size();
    for (EdgeId i = 0; i < g.edge_count(); ++i)
        if (g.without_edges({i}).components().size() > before) out.push_back(i);
    return out;
}

}  // namespace tckit::oracles
