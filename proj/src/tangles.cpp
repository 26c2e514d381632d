#include "tckit/tangles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tckit {

bool ExplicitTangle::contains(VertexSet side_a) const {
    return std::binary_search(members.begin(), members.end(), side_a);
}

namespace {

int cut_order_of_mask(const MultiGraph& g, VertexSet mask) {
    int order = 0;
    for (const Edge& e : g.edges())
        if (!e.is_loop() && vcontains(mask, e.u) != vcontains(mask, e.v)) ++order;
    return order;
}

std::string mask_to_list(const MultiGraph& g, VertexSet mask) {
    std::ostringstream out;
    bool first = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (vcontains(mask, v)) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
    return out.str();
}

void require_tangle_capacity(const MultiGraph& g) {
    if (g.vertex_count() > kTangleMaxVertices)
        throw capacity_error("tangle operations are capped at " +
                             std::to_string(kTangleMaxVertices) + " vertices");
}

}  // namespace

AxiomReport check_axioms(const MultiGraph& g, const ExplicitTangle& t) {
    require_tangle_capacity(g);
    AxiomReport report;
    VertexSet full = g.all_vertices();
    for (VertexSet a : t.members)
        if (cut_order_of_mask(g, a) >= t.order)
            report.violations.push_back("member [" + mask_to_list(g, a) + "| ...] has order >= " +
                                        std::to_string(t.order));
    // E1 over unordered bipartitions of order < theta.
    for (VertexSet mask = 0;; ++mask) {
        VertexSet comp = full & ~mask;
        if (mask <= comp && cut_order_of_mask(g, mask) < t.order) {
            bool fwd = t.contains(mask), bwd = t.contains(comp);
            if (!fwd && !bwd)
                report.violations.push_back("E1: neither orientation of {" + mask_to_list(g, mask) +
                                            " | " + mask_to_list(g, comp) + "} present");
        }
        if (mask == full) break;
    }
    // E2 over triples with repetition.
    size_t k = t.members.size();
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j)
            for (size_t l = j; l < k; ++l)
                if ((t.members[i] | t.members[j] | t.members[l]) == full) {
                    report.violations.push_back("E2: B-sides of members " + std::to_string(i) + "," +
                                                std::to_string(j) + "," + std::to_string(l) +
                                                " have empty intersection");
                }
    for (VertexSet a : t.members) {
        VertexSet b = full & ~a;
        if (g.edges_incident_with(b) < t.order)
            report.violations.push_back("E3: only " + std::to_string(g.edges_incident_with(b)) +
                                        " edges incident with the B-side of [" + mask_to_list(g, a) +
                                        "| ...]");
    }
    return report;
}

namespace {

struct TangleSearch {
    const MultiGraph& g;
    int theta;
    VertexSet full;
    std::vector<VertexSet> reps;       // one per unordered pair of order < theta
    std::vector<bool> e3ok;            // per mask: >= theta edges incident
    std::vector<VertexSet> chosen;
    std::vector<ExplicitTangle>* out;  // null for existence checks
    bool found = false;

    TangleSearch(const MultiGraph& graph, int order, std::vector<ExplicitTangle>* sink)
        : g(graph), theta(order), full(graph.all_vertices()), out(sink) {
        require_tangle_capacity(g);
        size_t masks = static_cast<size_t>(full) + 1;
        e3ok.resize(masks);
        for (VertexSet mask = 0; mask < masks; ++mask)
            e3ok[mask] = g.edges_incident_with(mask) >= theta;
        for (VertexSet mask = 0; mask < masks; ++mask) {
            VertexSet comp = full & ~mask;
            if (mask > comp) continue;
            if (cut_order_of_mask(g, mask) < theta) reps.push_back(mask);
        }
    }

    bool e2_fine(VertexSet a) const {
        if (a == full) return false;
        for (VertexSet x : chosen) {
            if ((x | a) == full) return false;
            for (VertexSet y : chosen)
                if ((x | y | a) == full) return false;
        }
        return true;
    }

    void rec(size_t i) {
        if (found && !out) return;
        if (i == reps.size()) {
            found = true;
            if (out) {
                ExplicitTangle t;
                t.order = theta;
                t.members = chosen;
                std::sort(t.members.begin(), t.members.end());
                out->push_back(std::move(t));
            }
            return;
        }
        VertexSet rep = reps[i], comp = full & ~rep;
        for (VertexSet a : {rep, comp}) {
            VertexSet b = full & ~a;
            if (!e3ok[b]) continue;
            if (!e2_fine(a)) continue;
            chosen.push_back(a);
            rec(i + 1);
            chosen.pop_back();
            if (found && !out) return;
            if (rep == comp) break;
        }
    }
};

}  // namespace

std::vector<ExplicitTangle> enumerate_tangles(const MultiGraph& g, int theta) {
    if (theta < 1) throw std::invalid_argument("tangle order must be positive");
    std::vector<ExplicitTangle> out;
    TangleSearch search(g, theta, &out);
    search.rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

int max_tangle_order(const MultiGraph& g) {
    int mu = 0;
    for (int theta = 1; theta <= g.edge_count(); ++theta) {
        TangleSearch search(g, theta, nullptr);
        search.rec(0);
        if (!search.found) break;
        mu = theta;
    }
    return mu;
}

std::string dump_tangle(const MultiGraph& g, const ExplicitTangle& t) {
    std::ostringstream out;
    for (VertexSet a : t.members)
        out << mask_to_list(g, a) << " : " << cut_order_of_mask(g, a) << '\n';
    return out.str();
}

ExplicitTangle tangle_from_fat_cell(const TreeCutDecomposition& d, const Cell& cell, int theta) {
    if (theta < 1) throw std::invalid_argument("theta must be positive");
    if (!cell.is_cell || cell.k != theta)
        throw std::invalid_argument("fat-cell tangle needs a theta-cell");
    if (cell.torso_edge_count < 3 * theta - 2)
        throw std::invalid_argument("cell torso has fewer than 3*theta-2 edges");
    if (is_theta_smooth(d, theta))
        throw std::invalid_argument("fat-cell tangle needs a theta-smooth decomposition");
    Torso torso = torso_at(d, cell.nodes);
    ExplicitTangle t;
    t.order = theta;
    VertexSet full = d.graph.all_vertices();
    for (VertexSet mask = 0;; ++mask) {
        int order = cut_order_of_mask(d.graph, mask);
        if (order < theta) {
            int incident = 0;
            for (EdgeId e : torso.edge_origin)
                if (d.graph.edge_incident_with(e, mask)) ++incident;
            if (incident <= order) t.members.push_back(mask);
        }
        if (mask == full) break;
    }
    return t;
}

Cell locate_cell(const MultiGraph& g, const ExplicitTangle& t, const TreeCutDecomposition& d) {
    int theta = t.order;
    auto pseudo = cells(d, theta);
    std::vector<int> cell_of(d.node_count, -1);
    for (int c = 0; c < static_cast<int>(pseudo.size()); ++c)
        for (int node : pseudo[c].nodes) cell_of[node] = c;
    std::vector<int> outdeg(pseudo.size(), 0);
    for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e) {
        auto [a, b] = d.tree_edges[e];
        if (cell_of[a] == cell_of[b]) continue;
        auto [left, right] = tree_split(d, e);
        VertexSet left_x = bag_union(d, left);
        VertexSet right_x = g.all_vertices() & ~left_x;
        bool a_left = std::binary_search(left.begin(), left.end(), a);
        VertexSet a_side = a_left ? left_x : right_x;   // X on a's side
        VertexSet b_side = g.all_vertices() & ~a_side;
        bool toward_b = t.contains(a_side);
        bool toward_a = t.contains(b_side);
        if (toward_b == toward_a)
            throw std::logic_error("tangle orients a tree edge inconsistently");
        if (toward_b)
            ++outdeg[cell_of[a]];
        else
            ++outdeg[cell_of[b]];
    }
    int sink = -1;
    for (int c = 0; c < static_cast<int>(pseudo.size()); ++c)
        if (outdeg[c] == 0) {
            if (sink >= 0) throw std::logic_error("tangle orientation has two sinks");
            sink = c;
        }
    if (sink < 0) throw std::logic_error("tangle orientation has no sink");
    if (!pseudo[sink].is_cell)
        throw std::logic_error("tangle points at a pseudo-cell with too few torso edges");
    return pseudo[sink];
}

namespace {

bool is_separator(const MultiGraph& g, const std::vector<ExplicitTangle>& left,
                  const ExplicitTangle& right, VertexSet mask_a) {
    VertexSet mask_b = g.all_vertices() & ~mask_a;
    if (right.contains(mask_a) || !right.contains(mask_b)) return false;
    for (const ExplicitTangle& e : left)
        if (!e.contains(mask_a) || e.contains(mask_b)) return false;
    return true;
}

void require_same_order(const std::vector<ExplicitTangle>& left, const ExplicitTangle& right) {
    for (const ExplicitTangle& e : left)
        if (e.order != right.order) throw std::invalid_argument("tangles must share one order");
}

}  // namespace

bool is_c_e_separator(const MultiGraph& g, const std::vector<ExplicitTangle>& left,
                      const ExplicitTangle& right, VertexSet side_a) {
    return is_separator(g, left, right, side_a);
}

std::optional<EdgeCut> min_separator(const MultiGraph& g, const std::vector<ExplicitTangle>& left,
                                     const ExplicitTangle& right) {
    require_same_order(left, right);
    require_tangle_capacity(g);
    VertexSet full = g.all_vertices();
    int best_order = -1;
    VertexSet best_mask = 0;
    for (VertexSet mask = 0;; ++mask) {
        if (is_separator(g, left, right, mask)) {
            int order = cut_order_of_mask(g, mask);
            if (best_order < 0 || order < best_order) {
                best_order = order;
                best_mask = mask;
            }
        }
        if (mask == full) break;
    }
    if (best_order < 0) return std::nullopt;
    return cut_from_mask(g, best_mask);
}

std::vector<EdgeCut> all_min_separators(const MultiGraph& g,
                                        const std::vector<ExplicitTangle>& left,
                                        const ExplicitTangle& right) {
    auto best = min_separator(g, left, right);
    std::vector<EdgeCut> out;
    if (!best) return out;
    VertexSet full = g.all_vertices();
    for (VertexSet mask = 0;; ++mask) {
        if (is_separator(g, left, right, mask) && cut_order_of_mask(g, mask) == best->order())
            out.push_back(cut_from_mask(g, mask));
        if (mask == full) break;
    }
    return out;
}

bool is_cross_free(const std::vector<EdgeCut>& cuts) {
    for (size_t i = 0; i < cuts.size(); ++i)
        for (size_t j = i + 1; j < cuts.size(); ++j)
            if (cuts[i].side_a & cuts[j].side_a) return false;
    return true;
}

SegregatorCheck check_segregator(const MultiGraph& g, const std::vector<ExplicitTangle>& c_left,
                                 const std::vector<ExplicitTangle>& c_right,
                                 const std::vector<EdgeCut>& s) {
    SegregatorCheck res;
    // Minimum separator orders per right-hand tangle.
    std::vector<std::optional<EdgeCut>> mins;
    mins.reserve(c_right.size());
    for (const ExplicitTangle& e : c_right) mins.push_back(min_separator(g, c_left, e));
    for (const EdgeCut& cut : s) {
        bool served = false;
        for (size_t i = 0; i < c_right.size() && !served; ++i)
            if (mins[i] && mins[i]->order() == cut.order() &&
                is_separator(g, c_left, c_right[i], cut.side_a))
                served = true;
        if (!served) {
            res.failing_tangle = -1;
            res.reason = "a member is not a minimum separator for any tangle";
            return res;
        }
    }
    for (size_t i = 0; i < c_right.size(); ++i) {
        if (!mins[i]) {
            res.failing_tangle = static_cast<int>(i);
            res.reason = "no separator exists for a tangle";
            return res;
        }
        bool served = false;
        for (const EdgeCut& cut : s) {
            if (cut.order() == mins[i]->order() && is_separator(g, c_left, c_right[i], cut.side_a)) {
                served = true;
                break;
            }
            for (const EdgeCut& m : all_min_separators(g, c_left, c_right[i]))
                if ((m.side_a & ~cut.side_a) == 0) {
                    served = true;
                    break;
                }
            if (served) break;
        }
        if (!served) {
            res.failing_tangle = static_cast<int>(i);
            res.reason = "tangle is not served by any member";
            return res;
        }
    }
    res.ok = true;
    return res;
}

namespace {

VertexSet union_of_a_sides(const std::vector<EdgeCut>& cuts) {
    VertexSet u = 0;
    for (const EdgeCut& c : cuts) u |= c.side_a;
    return u;
}

long long total_a_size(const std::vector<EdgeCut>& cuts) {
    long long s = 0;
    for (const EdgeCut& c : cuts) s += vcount(c.side_a);
    return s;
}

std::vector<EdgeCut> dedupe_by_mask(std::vector<EdgeCut> cuts) {
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

// Exhaustive fallback: the segregator over minimum separators with the
// required union and least total A-size is cross-free.
std::vector<EdgeCut> uncross_exhaustive(const MultiGraph& g,
                                        const std::vector<ExplicitTangle>& c_left,
                                        const std::vector<ExplicitTangle>& c_right,
                                        VertexSet target) {
    std::vector<EdgeCut> pool;
    for (const ExplicitTangle& e : c_right)
        for (const EdgeCut& cut : all_min_separators(g, c_left, e))
            if ((cut.side_a & ~target) == 0) pool.push_back(cut);
    pool = dedupe_by_mask(std::move(pool));

    std::vector<EdgeCut> best, current;
    long long best_size = -1;
    std::function<void(size_t, VertexSet)> rec = [&](size_t i, VertexSet covered) {
        if (best_size >= 0 && total_a_size(current) >= best_size) return;
        if (i == pool.size()) {
            if (covered != target) return;
            if (check_segregator(g, c_left, c_right, current).ok) {
                best = current;
                best_size = total_a_size(current);
            }
            return;
        }
        current.push_back(pool[i]);
        rec(i + 1, covered | pool[i].side_a);
        current.pop_back();
        rec(i + 1, covered);
    };
    rec(0, 0);
    if (best_size < 0) throw std::logic_error("no cross-free segregator found by exhaustive search");
    return best;
}

}  // namespace

std::vector<EdgeCut> exchange_crossing_pair(const MultiGraph& g, const std::vector<EdgeCut>& fam,
                                            size_t i, size_t j) {
    const EdgeCut ab = fam.at(i), cd = fam.at(j);
    if (!(ab.side_a & cd.side_a)) throw std::invalid_argument("members do not cross");
    EdgeCut uni = cut_union(g, ab, cd);  // [A u C, B n D]
    std::vector<EdgeCut> next = fam;
    if (uni.order() <= ab.order() || uni.order() <= cd.order()) {
        next.erase(next.begin() + std::max(i, j));
        next.erase(next.begin() + std::min(i, j));
        next.push_back(uni);
    } else {
        // [B n C, A u D]
        next[j] = cut_from_mask(g, cd.side_a & ~ab.side_a);
    }
    return dedupe_by_mask(std::move(next));
}

CrossFreeFamily uncross_segregator(const MultiGraph& g, const std::vector<ExplicitTangle>& c_left,
                                   const std::vector<ExplicitTangle>& c_right,
                                   const std::vector<EdgeCut>& s) {
    require_tangle_capacity(g);
    auto pre = check_segregator(g, c_left, c_right, s);
    if (!pre.ok)
        throw std::invalid_argument("input is not a segregator (tangle " +
                                    std::to_string(pre.failing_tangle) + "): " + pre.reason);
    VertexSet target = union_of_a_sides(s);
    std::vector<EdgeCut> fam = dedupe_by_mask(s);
    long long guard = 4 * total_a_size(fam) + static_cast<long long>(fam.size()) + 8;
    bool fallback = false;
    while (!fallback && guard-- > 0) {
        // Nested members: the smaller A-side is redundant.
        bool changed = false;
        for (size_t i = 0; i < fam.size() && !changed; ++i)
            for (size_t j = 0; j < fam.size() && !changed; ++j)
                if (i != j && (fam[i].side_a & ~fam[j].side_a) == 0) {
                    fam.erase(fam.begin() + i);
                    changed = true;
                }
        if (changed) continue;

        size_t ci = 0, cj = 0;
        bool crossing = false;
        for (size_t i = 0; i < fam.size() && !crossing; ++i)
            for (size_t j = i + 1; j < fam.size() && !crossing; ++j)
                if (fam[i].side_a & fam[j].side_a) {
                    ci = i;
                    cj = j;
                    crossing = true;
                }
        if (!crossing) break;

        std::vector<EdgeCut> next = exchange_crossing_pair(g, fam, ci, cj);
        if (union_of_a_sides(next) != target || total_a_size(next) >= total_a_size(fam) ||
            !check_segregator(g, c_left, c_right, next).ok) {
            fallback = true;
            break;
        }
        fam = std::move(next);
    }
    if (fallback || guard <= 0) fam = uncross_exhaustive(g, c_left, c_right, target);
    if (!is_cross_free(fam)) throw std::logic_error("uncrossing produced a crossing family");
    CrossFreeFamily out;
    out.cuts = std::move(fam);
    return out;
}

RestrictedFamily restrict_family(const MultiGraph& g, const CrossFreeFamily& d, const EdgeCut& cut) {
    RestrictedFamily out;
    out.family.cuts.push_back(cut);
    out.image_origin.push_back(-1);
    for (int i = 0; i < static_cast<int>(d.cuts.size()); ++i) {
        const EdgeCut& ab = d.cuts[i];
        EdgeCut image = cut_from_mask(g, ab.side_a & cut.side_b);  // [A n B*, B u A*]
        bool flag = false;
        for (EdgeId e : cut.crossing) {
            const Edge& ed = g.edge(e);
            VertexSet image_a = ab.side_a & cut.side_b;
            bool touches_image = vcontains(image_a, ed.u) || vcontains(image_a, ed.v);
            bool touches_astar = vcontains(cut.side_a, ed.u) || vcontains(cut.side_a, ed.v);
            if (touches_image && touches_astar) {
                flag = true;
                break;
            }
        }
        out.image_origin.push_back(i);
        if (flag) out.flagged.push_back(static_cast<int>(out.family.cuts.size()));
        out.family.cuts.push_back(std::move(image));
    }
    return out;
}

bool is_guard(const MultiGraph& g, const CrossFreeFamily& s, const CrossFreeFamily& d,
              const std::vector<ExplicitTangle>& c) {
    if (c.empty()) throw std::invalid_argument("guard check needs a nonempty tangle collection");
    int theta = c.front().order;
    for (const ExplicitTangle& e : c) {
        if (e.order != theta) throw std::invalid_argument("tangles must share one order");
        for (const EdgeCut& cut : d.cuts)
            if (!e.contains(cut.side_a))
                throw std::invalid_argument("the family d must be contained in every tangle of c");
    }
    if (!is_cross_free(s.cuts)) return false;
    auto tangles = enumerate_tangles(g, theta);
    for (const EdgeCut& cut : s.cuts) {
        bool witnessed = false;
        for (const ExplicitTangle& e2 : tangles) {
            bool d_inside = true;
            for (const EdgeCut& dc : d.cuts)
                if (!e2.contains(dc.side_a)) {
                    d_inside = false;
                    break;
                }
            if (d_inside) continue;
            auto best = min_separator(g, c, e2);
            if (best && best->order() == cut.order() && is_separator(g, c, e2, cut.side_a)) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed) return false;
    }
    return true;
}

TangleMinusEdges tangle_minus_edges(const MultiGraph& g, const ExplicitTangle& t,
                                    const std::vector<EdgeId>& x) {
    if (static_cast<int>(x.size()) >= t.order)
        throw std::invalid_argument("must delete fewer than order-many edges");
    require_tangle_capacity(g);
    TangleMinusEdges out;
    out.graph = g.without_edges(x);
    out.tangle.order = t.order - static_cast<int>(x.size());
    VertexSet full = g.all_vertices();
    for (VertexSet mask = 0;; ++mask) {
        if (cut_order_of_mask(out.graph, mask) < out.tangle.order && t.contains(mask))
            out.tangle.members.push_back(mask);
        if (mask == full) break;
    }
    return out;
}

}  // namespace tckit
