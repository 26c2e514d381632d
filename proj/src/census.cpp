#include "tckit/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tckit {

namespace {

std::string edge_multiset_string(int n, std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    std::ostringstream out;
    out << n << ':';
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) out << ',';
        out << pairs[i].first << '-' << pairs[i].second;
    }
    return out.str();
}

}  // namespace

std::string canonical_form(const MultiGraph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(g.edge_count());
        for (const Edge& e : g.edges()) {
            int a = perm[e.u], b = perm[e.v];
            pairs.push_back({std::min(a, b), std::max(a, b)});
        }
        std::string s = edge_multiset_string(n, std::move(pairs));
        if (best.empty() || s < best) best = std::move(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best.empty()) best = edge_multiset_string(n, {});
    return best;
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

struct SlotGen {
    const CensusOptions& opts;
    std::vector<std::pair<int, int>> slots;  // (u,v) with u <= v; u==v is a loop slot
    std::vector<int> mult;
    std::map<std::string, MultiGraph> classes;

    explicit SlotGen(const CensusOptions& o) : opts(o) {
        for (int u = 0; u < opts.vertices; ++u)
            for (int v = u; v < opts.vertices; ++v) {
                if (u == v && (opts.loopless || opts.simple)) continue;
                slots.push_back({u, v});
            }
        mult.assign(slots.size(), 0);
    }

    int cap(size_t slot) const {
        auto [u, v] = slots[slot];
        if (u == v) return opts.loop_cap;
        return opts.simple ? 1 : opts.parallel_cap;
    }

    void emit() {
        MultiGraph g(opts.vertices);
        for (size_t i = 0; i < slots.size(); ++i)
            for (int k = 0; k < mult[i]; ++k) g.add_edge(slots[i].first, slots[i].second);
        if (opts.connected_only && !g.connected()) return;
        std::string canon = canonical_form(g);
        classes.emplace(std::move(canon), std::move(g));
    }

    void rec(size_t slot, int budget) {
        if (slot == slots.size()) {
            emit();
            return;
        }
        int top = std::min(cap(slot), budget);
        for (int k = 0; k <= top; ++k) {
            mult[slot] = k;
            rec(slot + 1, budget - k);
        }
        mult[slot] = 0;
    }
};

}  // namespace

std::vector<MultiGraph> census(const CensusOptions& opts) {
    if (opts.vertices < 0 || opts.vertices > kCensusMaxVertices)
        throw capacity_error("census is capped at " + std::to_string(kCensusMaxVertices) + " vertices");
    if (opts.max_edges < 0 || opts.max_edges > 12)
        throw capacity_error("census is capped at 12 edges");
    SlotGen gen(opts);
    gen.rec(0, opts.max_edges);
    std::vector<MultiGraph> out;
    out.reserve(gen.classes.size());
    for (auto& [canon, g] : gen.classes) out.push_back(std::move(g));
    return out;
}

std::vector<MultiGraph> census_up_to(int max_vertices, int max_edges, bool connected_only,
                                     int loop_cap, int parallel_cap) {
    std::vector<MultiGraph> out;
    for (int n = 1; n <= max_vertices; ++n) {
        CensusOptions opts;
        opts.vertices = n;
        opts.max_edges = max_edges;
        opts.loop_cap = loop_cap;
        opts.parallel_cap = parallel_cap;
        opts.connected_only = connected_only;
        for (auto& g : census(opts)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace tckit
