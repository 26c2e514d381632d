#include "tckit/edge_cut.hpp"

namespace tckit {

EdgeCut cut_from_mask(const MultiGraph& g, VertexSet side_a) {
    EdgeCut cut;
    cut.side_a = side_a;
    cut.side_b = g.all_vertices() & ~side_a;
    for (EdgeId i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (e.is_loop()) continue;
        if (vcontains(side_a, e.u) != vcontains(side_a, e.v)) cut.crossing.push_back(i);
    }
    return cut;
}

EdgeCut edge_cut_order(const MultiGraph& g, VertexSet side_a, VertexSet side_b) {
    if (side_a & side_b) throw std::invalid_argument("cut sides overlap");
    if ((side_a | side_b) != g.all_vertices()) throw std::invalid_argument("cut sides do not cover V(G)");
    return cut_from_mask(g, side_a);
}

std::vector<EdgeCut> enumerate_edge_cuts(const MultiGraph& g, int max_order) {
    if (g.vertex_count() > kCutEnumMaxVertices)
        throw capacity_error("cut enumeration is capped at " + std::to_string(kCutEnumMaxVertices) +
                             " vertices");
    std::vector<EdgeCut> out;
    VertexSet full = g.all_vertices();
    for (VertexSet mask = 0;; ++mask) {
        EdgeCut cut = cut_from_mask(g, mask);
        if (cut.order() <= max_order) out.push_back(std::move(cut));
        if (mask == full) break;
    }
    return out;
}

std::optional<EdgeCut> min_cut_between_edge_sets(const MultiGraph& g, const std::vector<EdgeId>& y,
                                                 const std::vector<EdgeId>& z, int bound) {
    if (y.empty() || z.empty()) throw std::invalid_argument("edge sets must be nonempty");
    if (g.vertex_count() > kCutEnumMaxVertices)
        throw capacity_error("min cut search is capped at " + std::to_string(kCutEnumMaxVertices) +
                             " vertices");
    std::optional<EdgeCut> best;
    VertexSet full = g.all_vertices();
    for (VertexSet mask = 0;; ++mask) {
        VertexSet a = mask, b = full & ~mask;
        bool ok = true;
        for (EdgeId e : y)
            if (!g.edge_incident_with(e, a)) { ok = false; break; }
        if (ok)
            for (EdgeId e : z)
                if (!g.edge_incident_with(e, b)) { ok = false; break; }
        if (ok) {
            EdgeCut cut = cut_from_mask(g, mask);
            if (!best || cut.order() < best->order()) best = std::move(cut);
        }
        if (mask == full) break;
    }
    if (best && best->order() < bound) return best;
    return std::nullopt;
}

EdgeCut cut_union(const MultiGraph& g, const EdgeCut& ab, const EdgeCut& cd) {
    return cut_from_mask(g, ab.side_a | cd.side_a);
}

EdgeCut cut_intersection(const MultiGraph& g, const EdgeCut& ab, const EdgeCut& cd) {
    return cut_from_mask(g, ab.side_a & cd.side_a);
}

}  // namespace tckit
