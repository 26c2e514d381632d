#include "tckit/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "tckit/carving.hpp"
#include "tckit/census.hpp"
#include "tckit/immersion.hpp"
#include "tckit/smoothing.hpp"
#include "tckit/surgery.hpp"
#include "tckit/tangles.hpp"

namespace tckit {

namespace {

struct GraphData {
    MultiGraph g;
    std::string canon;
    int tctw = -1;
    int cw = -1;
    int mu = -1;
    TreeCutDecomposition opt;
    std::map<int, std::vector<ExplicitTangle>> tangles;
    std::map<int, TreeCutDecomposition> smoothed;  // smooth_refine of opt

    const std::vector<ExplicitTangle>& tangles_at(int theta) {
        auto it = tangles.find(theta);
        if (it == tangles.end()) it = tangles.emplace(theta, enumerate_tangles(g, theta)).first;
        return it->second;
    }
    const TreeCutDecomposition& smoothed_at(int theta) {
        auto it = smoothed.find(theta);
        if (it == smoothed.end())
            it = smoothed.emplace(theta, smooth_refine(opt, theta).decomposition).first;
        return it->second;
    }
};

struct Battery {
    const VerifyOptions& opts;
    const ImmersionOracle& oracle;
    std::vector<GraphData> data;

    Battery(const VerifyOptions& o, const ImmersionOracle& orc) : opts(o), oracle(orc) {
        if (o.max_vertices > kVerifyMaxVertices || o.max_edges > kVerifyMaxEdges ||
            o.host_max_vertices > kVerifyMaxVertices ||
            o.host_max_edges > kVerifyMaxEdges - 1)
            throw capacity_error("verification bounds exceed the documented ceilings");
        for (auto& g :
             census_up_to(o.max_vertices, o.max_edges, true, o.loop_cap, o.parallel_cap)) {
            GraphData gd;
            gd.canon = canonical_form(g);
            gd.g = std::move(g);
            data.push_back(std::move(gd));
        }
        for (auto& gd : data) {
            gd.opt = optimal_torso_decomposition(gd.g);
            gd.tctw = torso_width(gd.opt);
            gd.cw = carving_width(gd.g);
            gd.mu = max_tangle_order(gd.g);
        }
    }

    CriterionResult duality() {
        CriterionResult res;
        res.name = "duality-exhaustive (cw/mu vs tctw, 3w/2, 3mu)";
        for (auto& gd : data) {
            DualityReport r;
            r.tctw = gd.tctw;
            r.cw = gd.cw;
            r.mu = gd.mu;
            r.loopless = gd.g.loopless();
            r.pass1 = r.cw <= r.tctw && r.mu <= r.tctw;
            r.pass2 = !r.loopless || r.tctw <= (3 * r.cw) / 2;
            r.pass3 = r.tctw <= 3 * r.mu;
            ++res.checks;
            if (!r.pass()) {
                res.pass = false;
                res.detail = gd.canon + " tctw=" + std::to_string(r.tctw) +
                             " cw=" + std::to_string(r.cw) + " mu=" + std::to_string(r.mu);
                return res;
            }
        }
        return res;
    }

    CriterionResult loop_family() {
        CriterionResult res;
        res.name = "loop-family (1 vertex, L loops)";
        for (int loops = 1; loops <= 6; ++loops) {
            MultiGraph g(1);
            for (int i = 0; i < loops; ++i) g.add_edge(0, 0);
            int tctw = tree_cut_torso_width(g);
            int cw = carving_width(g);
            int mu = max_tangle_order(g);
            ++res.checks;
            if (tctw != loops || cw != 0 || mu != loops) {
                res.pass = false;
                res.detail = "L=" + std::to_string(loops) + " tctw=" + std::to_string(tctw) +
                             " cw=" + std::to_string(cw) + " mu=" + std::to_string(mu);
                return res;
            }
        }
        return res;
    }

    CriterionResult smoothing() {
        CriterionResult res;
        res.name = "smoothing (termination, smooth output, cell shape)";
        for (auto& gd : data) {
            auto starts = sample_decompositions(gd.g, 4, opts.seed);
            for (int theta = 1; theta <= opts.theta_max; ++theta) {
                for (const auto& start : starts) {
                    ++res.checks;
                    RefineResult r;
                    try {
                        r = smooth_refine(start, theta);  // throws unless the signature drops
                    } catch (const std::exception& e) {
                        res.pass = false;
                        res.detail = gd.canon + " theta=" + std::to_string(theta) + ": " + e.what();
                        return res;
                    }
                    if (is_theta_smooth(r.decomposition, theta)) {
                        res.pass = false;
                        res.detail = gd.canon + " theta=" + std::to_string(theta) +
                                     ": refined decomposition is not smooth";
                        return res;
                    }
                }
                // Minimum-torso-width shape: for theta above the width, the
                // smoothed optimum keeps its width and grows no k-cell with
                // tctw+1 <= k <= theta.
                ++res.checks;
                const TreeCutDecomposition& sm = gd.smoothed_at(theta);
                bool ok = !is_theta_smooth(sm, theta);
                if (theta > gd.tctw) {
                    ok = ok && torso_width(sm) == gd.tctw;
                    for (int k = gd.tctw + 1; ok && k <= theta; ++k)
                        for (const Cell& c : cells(sm, k))
                            if (c.is_cell) ok = false;
                }
                // Without a tangle of order theta, no smooth node torso can
                // reach 3*theta - 2 edges (a fat cell would define one).
                if (gd.mu < theta && torso_width(sm) > 3 * theta - 3) ok = false;
                if (!ok) {
                    res.pass = false;
                    res.detail = gd.canon + " theta=" + std::to_string(theta) +
                                 ": smoothed optimum lost its shape";
                    return res;
                }
            }
        }
        return res;
    }

    CriterionResult tangle_axioms() {
        CriterionResult res;
        res.name = "tangle axioms and closure, fat cells enumerated";
        for (auto& gd : data) {
            for (int theta = 1; theta <= std::max(opts.theta_max, gd.mu); ++theta) {
                const auto& tangles = gd.tangles_at(theta);
                for (const ExplicitTangle& t : tangles) {
                    ++res.checks;
                    if (!check_axioms(gd.g, t).valid()) {
                        res.pass = false;
                        res.detail = gd.canon + ": enumerated tangle fails the axioms";
                        return res;
                    }
                    for (VertexSet a : t.members)
                        for (VertexSet c : t.members) {
                            VertexSet u = a | c;
                            EdgeCut cut = cut_from_mask(gd.g, u);
                            if (cut.order() < theta && !t.contains(u)) {
                                res.pass = false;
                                res.detail = gd.canon + ": union closure fails";
                                return res;
                            }
                        }
                    for (VertexSet a : t.members)
                        for (VertexSet sub = a;; sub = (sub - 1) & a) {
                            if (cut_from_mask(gd.g, sub).order() < theta && !t.contains(sub)) {
                                res.pass = false;
                                res.detail = gd.canon + ": subset closure fails";
                                return res;
                            }
                            if (sub == 0) break;
                        }
                }
                const TreeCutDecomposition& sm = gd.smoothed_at(theta);
                for (const Cell& c : cells(sm, theta)) {
                    if (!c.is_fat) continue;
                    ++res.checks;
                    ExplicitTangle t = tangle_from_fat_cell(sm, c, theta);
                    if (std::find(tangles.begin(), tangles.end(), t) == tangles.end()) {
                        res.pass = false;
                        res.detail = gd.canon + ": fat-cell tangle missing from enumeration";
                        return res;
                    }
                }
            }
        }
        return res;
    }

    CriterionResult localization() {
        CriterionResult res;
        res.name = "cell localization (existence, uniqueness, membership)";
        for (auto& gd : data) {
            auto samples = sample_decompositions(gd.g, opts.sample_count, opts.seed);
            for (int theta = 1; theta <= opts.theta_max; ++theta) {
                for (const ExplicitTangle& t : gd.tangles_at(theta)) {
                    for (const auto& d : samples) {
                        ++res.checks;
                        Cell cell;
                        try {
                            cell = locate_cell(gd.g, t, d);  // throws unless a unique sink exists
                        } catch (const std::exception& e) {
                            res.pass = false;
                            res.detail = gd.canon + " theta=" + std::to_string(theta) + ": " + e.what();
                            return res;
                        }
                        std::vector<bool> in(d.node_count, false);
                        for (int x : cell.nodes) in[x] = true;
                        for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e) {
                            auto [a, b] = d.tree_edges[e];
                            if (in[a] && in[b]) continue;
                            if (static_cast<int>(adhesion_set(d, e).size()) >= theta) continue;
                            EdgeCut side = side_of(d, e, cell.nodes);
                            if (!t.contains(side.side_a)) {
                                res.pass = false;
                                res.detail = gd.canon + ": located cell misses a membership";
                                return res;
                            }
                        }
                    }
                }
            }
        }
        return res;
    }

    CriterionResult separators() {
        CriterionResult res;
        res.name = "separator structure and segregator uncrossing";
        long long engineered = 0;
        long long proper = 0;
        for (auto& gd : data) {
            for (int theta = 1; theta <= opts.theta_max; ++theta) {
                const auto& tangles = gd.tangles_at(theta);
                if (tangles.size() < 2) continue;
                int k = static_cast<int>(tangles.size());
                // Minimum separators project onto per-tangle minima.
                for (int ei = 0; ei < k; ++ei) {
                    for (int mask = 1; mask < (1 << k); ++mask) {
                        if (mask & (1 << ei)) continue;
                        std::vector<ExplicitTangle> coll;
                        for (int j = 0; j < k; ++j)
                            if (mask & (1 << j)) coll.push_back(tangles[j]);
                        auto sep = min_separator(gd.g, coll, tangles[ei]);
                        if (!sep) continue;
                        ++res.checks;
                        for (const ExplicitTangle& e2 : coll) {
                            bool found = false;
                            for (const EdgeCut& m : all_min_separators(gd.g, {e2}, tangles[ei]))
                                if ((sep->side_a & ~m.side_a) == 0 && (m.side_b & ~sep->side_b) == 0)
                                    found = true;
                            if (!found) {
                                res.pass = false;
                                res.detail = gd.canon + ": projection of a minimum separator missing";
                                return res;
                            }
                        }
                    }
                }
                if (!separator_geometry_on_smooth(gd, theta, res)) return res;
                // Engineered crossing instances for the uncrossing routine:
                // search the product of per-tangle minimum separators for
                // families that are not cross-free.
                for (int ci = 0; ci < k; ++ci) {
                    std::vector<ExplicitTangle> c_left{tangles[ci]};
                    std::vector<ExplicitTangle> c_right;
                    for (int j = 0; j < k; ++j)
                        if (j != ci) c_right.push_back(tangles[j]);
                    std::vector<std::vector<EdgeCut>> choices;
                    bool feasible = true;
                    for (const ExplicitTangle& e2 : c_right) {
                        auto seps = all_min_separators(gd.g, c_left, e2);
                        if (seps.empty()) {
                            feasible = false;
                            break;
                        }
                        choices.push_back(std::move(seps));
                    }
                    if (!feasible) continue;
                    auto proper_crossing = [](const std::vector<EdgeCut>& fam) {
                        for (size_t i = 0; i < fam.size(); ++i)
                            for (size_t j = i + 1; j < fam.size(); ++j) {
                                VertexSet a = fam[i].side_a, c = fam[j].side_a;
                                if ((a & c) && (a & ~c) && (c & ~a)) return true;
                            }
                        return false;
                    };
                    // The canonical family, a non-cross-free combo, and a
                    // properly crossing combo when one exists.
                    std::vector<std::vector<EdgeCut>> instances;
                    std::vector<EdgeCut> canonical;
                    for (const auto& list : choices) canonical.push_back(list.front());
                    instances.push_back(canonical);
                    long long budget = 4000;
                    std::vector<EdgeCut> combo;
                    bool found_crossing = false, found_proper = false;
                    std::function<void(size_t)> dig = [&](size_t i) {
                        if (budget-- <= 0 || (found_crossing && found_proper)) return;
                        if (i == choices.size()) {
                            if (!found_crossing && !is_cross_free(combo)) {
                                found_crossing = true;
                                instances.push_back(combo);
                            }
                            if (!found_proper && proper_crossing(combo)) {
                                found_proper = true;
                                instances.push_back(combo);
                            }
                            return;
                        }
                        for (const EdgeCut& cut : choices[i]) {
                            combo.push_back(cut);
                            dig(i + 1);
                            combo.pop_back();
                        }
                    };
                    dig(0);
                    for (const auto& s : instances) {
                        if (!check_segregator(gd.g, c_left, c_right, s).ok) continue;
                        if (!is_cross_free(s)) ++engineered;
                        if (proper_crossing(s)) ++proper;
                        ++res.checks;
                        VertexSet target = 0;
                        for (const EdgeCut& cut : s) target |= cut.side_a;
                        CrossFreeFamily out;
                        try {
                            out = uncross_segregator(gd.g, c_left, c_right, s);
                        } catch (const std::exception& e) {
                            res.pass = false;
                            res.detail = gd.canon + ": uncross failed: " + e.what();
                            return res;
                        }
                        VertexSet got = 0;
                        for (const EdgeCut& cut : out.cuts) got |= cut.side_a;
                        if (!is_cross_free(out.cuts) || got != target ||
                            !check_segregator(gd.g, c_left, c_right, out.cuts).ok) {
                            res.pass = false;
                            res.detail = gd.canon + ": uncross output broke an invariant";
                            return res;
                        }
                    }
                }
            }
        }
        res.detail = "engineered crossing instances: " + std::to_string(engineered) + " (" +
                     std::to_string(proper) + " properly crossing)";
        return res;
    }

    bool separator_geometry_on_smooth(GraphData& gd, int theta, CriterionResult& res) {
        if (!gd.g.connected()) return true;
        const TreeCutDecomposition& sm = gd.smoothed_at(theta);
        // Statement 1: membership along every located cell's boundary.
        for (const ExplicitTangle& t : gd.tangles_at(theta)) {
            ++res.checks;
            Cell cell = locate_cell(gd.g, t, sm);
            std::vector<bool> in(sm.node_count, false);
            for (int x : cell.nodes) in[x] = true;
            for (int e = 0; e < static_cast<int>(sm.tree_edges.size()); ++e) {
                auto [a, b] = sm.tree_edges[e];
                if (in[a] == in[b]) continue;
                if (!t.contains(side_of(sm, e, cell.nodes).side_a)) {
                    res.pass = false;
                    res.detail = gd.canon + ": smooth-decomposition membership fails";
                    return false;
                }
            }
        }
        // Fat cells and their tangles on the smooth decomposition.
        std::vector<Cell> fat;
        std::vector<ExplicitTangle> fat_tangles;
        for (const Cell& c : cells(sm, theta))
            if (c.is_fat) {
                fat.push_back(c);
                fat_tangles.push_back(tangle_from_fat_cell(sm, c, theta));
            }
        for (size_t i = 0; i < fat.size(); ++i) {
            ++res.checks;
            Cell located = locate_cell(gd.g, fat_tangles[i], sm);
            if (located.nodes != fat[i].nodes) {
                res.pass = false;
                res.detail = gd.canon + ": fat-cell tangle located elsewhere";
                return false;
            }
        }
        if (fat.size() < 2) return true;
        // Statement 3 over collections of fat-cell tangles.
        for (size_t ei = 0; ei < fat.size(); ++ei) {
            for (int mask = 1; mask < (1 << fat.size()); ++mask) {
                if (mask & (1 << ei)) continue;
                std::vector<ExplicitTangle> coll;
                std::vector<size_t> coll_idx;
                for (size_t j = 0; j < fat.size(); ++j)
                    if (mask & (1 << j)) {
                        coll.push_back(fat_tangles[j]);
                        coll_idx.push_back(j);
                    }
                std::vector<bool> in(sm.node_count, false);
                for (int x : fat[ei].nodes) in[x] = true;
                for (int e = 0; e < static_cast<int>(sm.tree_edges.size()); ++e) {
                    auto [a, b] = sm.tree_edges[e];
                    if (in[a] == in[b]) continue;
                    auto [left, right] = tree_split(sm, e);
                    const auto& cell_side = in[a] ? left : right;
                    bool disjoint = true;
                    for (size_t j : coll_idx)
                        for (int node : fat[j].nodes)
                            if (std::binary_search(cell_side.begin(), cell_side.end(), node))
                                disjoint = false;
                    if (!disjoint) continue;
                    ++res.checks;
                    EdgeCut side = side_of(sm, e, fat[ei].nodes);
                    // [B,A] separates the collection from the tangle.
                    if (!is_c_e_separator(gd.g, coll, fat_tangles[ei], side.side_b)) {
                        res.pass = false;
                        res.detail = gd.canon + ": expected separator missing";
                        return false;
                    }
                    for (const EdgeCut& minsep : all_min_separators(gd.g, coll, fat_tangles[ei])) {
                        if (side.side_b & ~minsep.side_a) {
                            res.pass = false;
                            res.detail = gd.canon + ": cell side escapes a minimum separator";
                            return false;
                        }
                        for (size_t j : coll_idx) {
                            int e2 = edge_toward(sm, fat[j].nodes, fat[ei].nodes);
                            if (e2 < 0) continue;
                            EdgeCut side2 = side_of(sm, e2, fat[j].nodes);
                            if (side2.side_b & ~minsep.side_b) {
                                res.pass = false;
                                res.detail = gd.canon + ": collection side escapes the B side";
                                return false;
                            }
                        }
                    }
                }
            }
        }
        return true;
    }

    // The tree edge with exactly one end in `cell` separating it from `other`.
    static int edge_toward(const TreeCutDecomposition& d, const std::vector<int>& cell,
                           const std::vector<int>& other) {
        std::vector<bool> in(d.node_count, false);
        for (int x : cell) in[x] = true;
        for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e) {
            auto [a, b] = d.tree_edges[e];
            if (in[a] == in[b]) continue;
            auto [left, right] = tree_split(d, e);
            const auto& far = in[a] ? right : left;
            bool found = false;
            for (int node : other)
                if (std::binary_search(far.begin(), far.end(), node)) found = true;
            if (found) return e;
        }
        return -1;
    }

    CriterionResult immersion_oracle_agreement() {
        CriterionResult res;
        res.name = "immersion oracle agreement and degree condition";
        std::vector<MultiGraph> patterns;
        for (int n = 1; n <= opts.pattern_max_vertices; ++n) {
            CensusOptions c;
            c.vertices = n;
            c.max_edges = opts.pattern_max_edges;
            c.loop_cap = opts.loop_cap;
            c.parallel_cap = opts.parallel_cap;
            for (auto& h : census(c)) patterns.push_back(std::move(h));
        }
        auto hosts = census_up_to(opts.host_max_vertices, opts.host_max_edges, true, opts.loop_cap,
                                  opts.parallel_cap);
        for (const auto& g : hosts) {
            for (const auto& h : patterns) {
                ++res.checks;
                auto witness = find_immersion(g, h);
                bool expected = oracle(g, h);
                if (witness.has_value() != expected) {
                    res.pass = false;
                    res.detail = "host " + canonical_form(g) + " pattern " + canonical_form(h) +
                                 ": solver=" + (witness ? "yes" : "no") +
                                 " oracle=" + (expected ? "yes" : "no");
                    return res;
                }
                if (witness) {
                    if (!verify_witness(g, h, *witness)) {
                        res.pass = false;
                        res.detail = "invalid witness for host " + canonical_form(g);
                        return res;
                    }
                    if (!degree_condition(g, h)) {
                        res.pass = false;
                        res.detail = "degree condition violated by a positive instance";
                        return res;
                    }
                }
            }
        }
        return res;
    }

    CriterionResult reconstruction() {
        CriterionResult res;
        res.name = "reconstruction identity over sampled decompositions";
        for (auto& gd : data) {
            for (const auto& d : sample_decompositions(gd.g, opts.sample_count, opts.seed)) {
                ++res.checks;
                MultiGraph back;
                try {
                    back = reconstruct_from_torsos(d);
                } catch (const std::exception& e) {
                    res.pass = false;
                    res.detail = gd.canon + ": " + e.what();
                    return res;
                }
                bool same = back.vertex_count() == gd.g.vertex_count() &&
                            back.edge_count() == gd.g.edge_count();
                for (EdgeId i = 0; same && i < gd.g.edge_count(); ++i) {
                    const Edge& a = back.edge(i);
                    const Edge& b = gd.g.edge(i);
                    same = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
                }
                if (!same) {
                    res.pass = false;
                    res.detail = gd.canon + ": reconstruction differs";
                    return res;
                }
            }
        }
        return res;
    }

    CriterionResult surgery() {
        CriterionResult res;
        res.name = "two-cut splitting and refinement surgery";
        for (auto& gd : data) {
            const MultiGraph& g = gd.g;
            bool no_13_cut = true;
            VertexSet full = g.all_vertices();
            for (VertexSet mask = 0;; ++mask) {
                int order = cut_from_mask(g, mask).order();
                if (order == 1 || order == 3) no_13_cut = false;
                if (mask == full) break;
            }
            for (VertexSet mask = 0;; ++mask) {
                EdgeCut cut = cut_from_mask(g, mask);
                if (cut.order() == 2 && cut.side_a && cut.side_b) {
                    ++res.checks;
                    TwoCutSplit split = split_two_cut(g, cut);
                    if (split.side_a.edge_count() + split.side_b.edge_count() != g.edge_count()) {
                        res.pass = false;
                        res.detail = gd.canon + ": edge conservation fails";
                        return res;
                    }
                    if (no_13_cut) {
                        for (const MultiGraph* side : {&split.side_a, &split.side_b}) {
                            VertexSet f2 = side->all_vertices();
                            for (VertexSet m2 = 0;; ++m2) {
                                int order = cut_from_mask(*side, m2).order();
                                if (order == 1 || order == 3) {
                                    res.pass = false;
                                    res.detail = gd.canon + ": split side gained a 1- or 3-cut";
                                    return res;
                                }
                                if (m2 == f2) break;
                            }
                        }
                    }
                }
                if (mask == full) break;
            }
            // Refinement and leaf splitting always validate.
            for (const auto& d : sample_decompositions(gd.g, 4, opts.seed)) {
                for (VertexSet mask : {VertexSet{0}, full, vbit(0) & full}) {
                    for (int t = 0; t < d.node_count; ++t) {
                        ++res.checks;
                        try {
                            TreeCutDecomposition refined = refine_along_cut(d, {t}, cut_from_mask(g, mask));
                            if (!validate(refined).valid()) {
                                res.pass = false;
                                res.detail = gd.canon + ": refined decomposition invalid";
                                return res;
                            }
                        } catch (const AlignmentFailure&) {
                            // Misaligned cuts are rejected by contract.
                        }
                    }
                }
                for (int t = 0; t < d.node_count; ++t) {
                    if (!d.bags[t]) continue;
                    ++res.checks;
                    TreeCutDecomposition split = attach_leaf_split(d, t, d.bags[t]);
                    if (!validate(split).valid()) {
                        res.pass = false;
                        res.detail = gd.canon + ": leaf split invalid";
                        return res;
                    }
                }
            }
        }
        return res;
    }

    CriterionResult balanced_splits() {
        CriterionResult res;
        res.name = "balanced split thresholds on xi-nice decompositions";
        for (auto& gd : data) {
            long long m = gd.g.edge_count();
            enumerate_decompositions(gd.g, [&](const TreeCutDecomposition& d) {
                if (!res.pass) return;
                if (!is_decomposition_xi_nice(d, opts.xi)) return;
                ++res.checks;
                BalancedSplit split = balanced_split(d, opts.xi);
                bool ok = true;
                switch (split.kind) {
                    case BalancedSplit::TreeEdge:
                        ok = 3 * split.incident_one >= m && 3 * split.incident_two >= m;
                        break;
                    case BalancedSplit::CoreNode:
                        ok = 9 * split.core_edges >= m;
                        break;
                    case BalancedSplit::BranchSplit:
                        ok = 3 * split.incident_one >= m && 9 * split.incident_two >= 2 * m &&
                             9 * split.incident_one >= 2 * m;
                        break;
                }
                if (!ok) {
                    res.pass = false;
                    res.detail = gd.canon + ": balanced split misses its threshold";
                }
            });
            if (!res.pass) return res;
        }
        return res;
    }

    CriterionResult restriction_bounds() {
        CriterionResult res;
        res.name = "family restriction bounds on random instances";
        std::mt19937_64 rng(opts.seed);
        int made = 0;
        int guard = opts.random_instances * 50;
        while (made < opts.random_instances && guard-- > 0) {
            GraphData& gd = data[rng() % data.size()];
            auto samples = sample_decompositions(gd.g, 6, rng());
            const TreeCutDecomposition& d = samples[rng() % samples.size()];
            int t = static_cast<int>(rng() % d.node_count);
            CrossFreeFamily family;
            std::vector<bool> in(d.node_count, false);
            in[t] = true;
            for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e) {
                auto [a, b] = d.tree_edges[e];
                if (a != t && b != t) continue;
                family.cuts.push_back(side_of(d, e, t));
            }
            if (family.cuts.empty() || !is_cross_free(family.cuts)) continue;
            EdgeCut star = cut_from_mask(gd.g, rng() & gd.g.all_vertices());
            ++made;
            ++res.checks;
            RestrictedFamily out = restrict_family(gd.g, family, star);
            if (static_cast<int>(out.flagged.size()) > 2 * star.order()) {
                res.pass = false;
                res.detail = gd.canon + ": flagged subset too large";
                return res;
            }
            std::vector<bool> flagged(out.family.cuts.size(), false);
            for (int idx : out.flagged) flagged[idx] = true;
            for (size_t i = 1; i < out.family.cuts.size(); ++i) {
                int orig = out.image_origin[i];
                int before = family.cuts[orig].order();
                int after = out.family.cuts[i].order();
                int allowance = flagged[i] ? star.order() : 0;
                if (after > before + allowance) {
                    res.pass = false;
                    res.detail = gd.canon + ": image order exceeds its bound";
                    return res;
                }
            }
        }
        return res;
    }
};

}  // namespace

std::vector<CriterionResult> run_verification(const VerifyOptions& opts,
                                              const ImmersionOracle& oracle) {
    Battery battery(opts, oracle);
    std::vector<CriterionResult> out;
    out.push_back(battery.duality());
    out.push_back(battery.loop_family());
    out.push_back(battery.smoothing());
    out.push_back(battery.tangle_axioms());
    out.push_back(battery.localization());
    out.push_back(battery.separators());
    out.push_back(battery.immersion_oracle_agreement());
    out.push_back(battery.reconstruction());
    out.push_back(battery.surgery());
    out.push_back(battery.balanced_splits());
    out.push_back(battery.restriction_bounds());
    return out;
}

}  // namespace tckit
