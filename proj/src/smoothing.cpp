#include "tckit/smoothing.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tckit {

std::vector<Cell> cells(const TreeCutDecomposition& d, int k) {
    if (k < 1) throw std::invalid_argument("cell threshold must be positive");
    // Delete tree edges whose adhesion set has size < k, take components.
    std::vector<std::vector<int>> adj(d.node_count);
    for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e) {
        if (static_cast<int>(adhesion_set(d, e).size()) < k) continue;
        auto [a, b] = d.tree_edges[e];
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<Cell> out;
    std::vector<bool> seen(d.node_count, false);
    for (int s = 0; s < d.node_count; ++s) {
        if (seen[s]) continue;
        Cell cell;
        cell.k = k;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            cell.nodes.push_back(x);
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        std::sort(cell.nodes.begin(), cell.nodes.end());
        cell.torso_edge_count = torso_edge_count(d, cell.nodes);
        cell.is_cell = cell.torso_edge_count >= k;
        cell.is_fat = cell.is_cell && cell.torso_edge_count >= 3 * k - 2;
        out.push_back(std::move(cell));
    }
    return out;
}

int Signature::compare(const Signature& o) const {
    size_t rows_n = std::max(rows.size(), o.rows.size());
    for (size_t i = 0; i < rows_n; ++i) {
        size_t cols = 0;
        if (i < rows.size()) cols = std::max(cols, rows[i].size());
        if (i < o.rows.size()) cols = std::max(cols, o.rows[i].size());
        for (size_t j = 0; j < cols; ++j) {
            int a = (i < rows.size() && j < rows[i].size()) ? rows[i][j] : 0;
            int b = (i < o.rows.size() && j < o.rows[i].size()) ? o.rows[i][j] : 0;
            if (a != b) return a < b ? -1 : 1;
        }
    }
    return 0;
}

std::string Signature::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) out << ' ';
        out << 'a' << (theta - static_cast<int>(i)) << "=(";
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j) out << ',';
            out << rows[i][j];
        }
        out << ')';
    }
    return out.str();
}

Signature signature(const TreeCutDecomposition& d, int theta) {
    if (theta < 1) throw std::invalid_argument("theta must be positive");
    Signature sig;
    sig.theta = theta;
    sig.edge_count = d.graph.edge_count();
    int m = sig.edge_count;
    for (int i = theta; i >= 1; --i) {
        std::vector<int> row(m, 0);  // row[idx] = a_{i, m - idx}
        if (i <= m)
            for (const Cell& c : cells(d, i)) {
                if (!c.is_cell) continue;
                for (int j = 1; j <= std::min(c.torso_edge_count, m); ++j) ++row[m - j];
            }
        sig.rows.push_back(std::move(row));
    }
    return sig;
}

namespace {

struct CutInfo {
    VertexSet mask;
    int order;
};

std::vector<CutInfo> small_cuts(const MultiGraph& g, int theta) {
    if (g.vertex_count() > kCutEnumMaxVertices)
        throw capacity_error("smoothness scan is capped at " + std::to_string(kCutEnumMaxVertices) +
                             " vertices");
    std::vector<CutInfo> out;
    VertexSet full = g.all_vertices();
    for (VertexSet mask = 0;; ++mask) {
        int order = 0;
        for (const Edge& e : g.edges())
            if (!e.is_loop() && vcontains(mask, e.u) != vcontains(mask, e.v)) ++order;
        if (order < theta) out.push_back({mask, order});
        if (mask == full) break;
    }
    return out;
}

struct Candidate {
    std::vector<int> nodes;
    bool theta_cell;
    std::vector<EdgeId> torso_edges;
};

std::vector<Candidate> smoothness_candidates(const TreeCutDecomposition& d, int theta) {
    std::vector<Candidate> out;
    for (const Cell& c : cells(d, theta))
        if (c.is_cell) {
            Candidate cand;
            cand.nodes = c.nodes;
            cand.theta_cell = true;
            Torso torso = torso_at(d, c.nodes);
            cand.torso_edges = torso.edge_origin;
            out.push_back(std::move(cand));
        }
    for (int t = 0; t < d.node_count; ++t) {
        Candidate cand;
        cand.nodes = {t};
        cand.theta_cell = false;
        Torso torso = torso_at(d, t);
        cand.torso_edges = torso.edge_origin;
        out.push_back(std::move(cand));
    }
    return out;
}

bool violates(const MultiGraph& g, const Candidate& cand, const CutInfo& cut) {
    int need = cut.order + 1;
    int count_a = 0, count_b = 0;
    VertexSet b_mask = g.all_vertices() & ~cut.mask;
    for (EdgeId e : cand.torso_edges) {
        if (g.edge_incident_with(e, cut.mask)) ++count_a;
        if (g.edge_incident_with(e, b_mask)) ++count_b;
        if (count_a >= need && count_b >= need) return true;
    }
    return false;
}

}  // namespace

std::optional<SmoothnessViolation> is_theta_smooth(const TreeCutDecomposition& d, int theta) {
    if (theta < 1) throw std::invalid_argument("theta must be positive");
    auto cuts = small_cuts(d.graph, theta);
    for (const Candidate& cand : smoothness_candidates(d, theta))
        for (const CutInfo& cut : cuts)
            if (violates(d.graph, cand, cut)) {
                SmoothnessViolation v;
                v.cell_nodes = cand.nodes;
                v.cell_is_theta_cell = cand.theta_cell;
                v.cut = cut_from_mask(d.graph, cut.mask);
                return v;
            }
    return std::nullopt;
}

namespace {

// Number of tree edges e with at most one end in the anchor whose far side
// A_{e,anchor} lies wholly inside A or wholly inside B.
int aligned_edges(const TreeCutDecomposition& d, const std::vector<int>& anchor, VertexSet side_a) {
    std::vector<bool> in(d.node_count, false);
    for (int t : anchor) in[t] = true;
    int count = 0;
    for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e) {
        auto [a, b] = d.tree_edges[e];
        if (in[a] && in[b]) continue;
        auto [left, right] = tree_split(d, e);
        bool anchor_left = false;
        for (int t : left)
            if (in[t]) anchor_left = true;
        VertexSet far = bag_union(d, anchor_left ? right : left);
        VertexSet side_b = d.graph.all_vertices() & ~side_a;
        if ((far & ~side_a) == 0 || (far & ~side_b) == 0) ++count;
    }
    return count;
}

}  // namespace

RefineResult smooth_refine(const TreeCutDecomposition& d, int theta) {
    if (theta < 1) throw std::invalid_argument("theta must be positive");
    RefineResult res;
    res.decomposition = d;
    Signature sig = signature(d, theta);
    for (;;) {
        const TreeCutDecomposition& cur = res.decomposition;
        auto cuts = small_cuts(cur.graph, theta);
        auto cands = smoothness_candidates(cur, theta);

        // Violating theta-cells take precedence over violating nodes; among
        // the scanned group, maximize the number of aligned tree edges.
        const Candidate* best_cand = nullptr;
        const CutInfo* best_cut = nullptr;
        int best_aligned = -1;
        bool restrict_to_cells = false;
        for (const Candidate& cand : cands) {
            if (restrict_to_cells && !cand.theta_cell) continue;
            for (const CutInfo& cut : cuts) {
                if (!violates(cur.graph, cand, cut)) continue;
                if (cand.theta_cell && !restrict_to_cells) {
                    restrict_to_cells = true;
                    best_cand = nullptr;
                    best_aligned = -1;
                }
                int aligned = aligned_edges(cur, cand.nodes, cut.mask);
                if (aligned > best_aligned) {
                    best_aligned = aligned;
                    best_cand = &cand;
                    best_cut = &cut;
                }
            }
        }
        if (!best_cand) break;

        TreeCutDecomposition next =
            prune_empty_nodes(double_split(cur, best_cand->nodes, best_cut->mask));
        Signature next_sig = signature(next, theta);
        if (!(next_sig < sig) && cur.graph.edge_count() > 0)
            throw std::logic_error("smoothing surgery failed to decrease the signature");
        res.decomposition = std::move(next);
        sig = std::move(next_sig);
        ++res.iterations;
    }
    res.final_signature = std::move(sig);
    return res;
}

TreeCutDecomposition contract_theta_cells(const TreeCutDecomposition& d, int theta) {
    auto all = cells(d, theta);
    std::vector<int> group(d.node_count, -1);
    int groups = 0;
    for (const Cell& c : all) {
        if (!c.is_cell) continue;
        for (int t : c.nodes) group[t] = groups;
        ++groups;
    }
    for (int t = 0; t < d.node_count; ++t)
        if (group[t] < 0) group[t] = groups++;
    // Renumber groups by first occurrence for stable node ids.
    std::vector<int> order(groups, -1);
    int next = 0;
    for (int t = 0; t < d.node_count; ++t)
        if (order[group[t]] < 0) order[group[t]] = next++;
    TreeCutDecomposition out;
    out.graph = d.graph;
    out.node_count = groups;
    out.bags.assign(groups, 0);
    for (int t = 0; t < d.node_count; ++t) out.bags[order[group[t]]] |= d.bags[t];
    for (auto [a, b] : d.tree_edges)
        if (group[a] != group[b]) out.tree_edges.push_back({order[group[a]], order[group[b]]});
    return out;
}

}  // namespace tckit
