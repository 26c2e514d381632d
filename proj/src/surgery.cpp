#include "tckit/surgery.hpp"

#include <algorithm>
#include <istream>
#include <queue>
#include <sstream>

namespace tckit {

TwoCutSplit split_two_cut(const MultiGraph& g, const EdgeCut& cut) {
    if (cut.order() != 2) throw std::invalid_argument("split_two_cut needs a cut of order exactly 2");
    if (!cut.side_a || !cut.side_b) throw std::invalid_argument("both sides must be nonempty");
    TwoCutSplit out;
    auto build = [&](VertexSet keep, std::vector<VertexId>& vo, std::vector<EdgeId>& eo, EdgeId& fresh) {
        MultiGraph side = g.induced(keep, &vo, &eo);
        std::vector<int> newid(g.vertex_count(), -1);
        for (int i = 0; i < static_cast<int>(vo.size()); ++i) newid[vo[i]] = i;
        VertexId e1 = -1, e2 = -1;  // the crossing endpoints on this side
        const Edge& c1 = g.edge(cut.crossing[0]);
        const Edge& c2 = g.edge(cut.crossing[1]);
        e1 = vcontains(keep, c1.u) ? c1.u : c1.v;
        e2 = vcontains(keep, c2.u) ? c2.u : c2.v;
        fresh = side.add_edge(newid[e1], newid[e2]);  // a loop when e1 == e2
        return side;
    };
    out.side_a = build(cut.side_a, out.a_origin, out.a_edge_origin, out.new_edge_a);
    out.side_b = build(cut.side_b, out.b_origin, out.b_edge_origin, out.new_edge_b);
    return out;
}

TreeCutDecomposition refine_along_cut(const TreeCutDecomposition& d, const std::vector<int>& anchor,
                                      const EdgeCut& cut) {
    std::vector<bool> in(d.node_count, false);
    for (int t : anchor) {
        if (t < 0 || t >= d.node_count) throw std::invalid_argument("anchor node out of range");
        in[t] = true;
    }
    VertexSet side_a = cut.side_a;
    VertexSet full = d.graph.all_vertices();
    // Realign every subtree hanging off the anchor.
    for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e) {
        auto [a, b] = d.tree_edges[e];
        // Only edges incident with the anchor constrain the alignment.
        if (in[a] == in[b]) continue;
        auto [left, right] = tree_split(d, e);
        VertexSet far = bag_union(d, in[a] ? right : left);
        VertexSet in_a = far & side_a, in_b = far & ~side_a & full;
        if (!in_a || !in_b) continue;  // already aligned
        // Majority of the boundary picks the target side.
        long long to_a = 0, to_b = 0;
        for (const Edge& ed : d.graph.edges()) {
            bool fu = vcontains(far, ed.u), fv = vcontains(far, ed.v);
            if (fu == fv) continue;
            VertexId away = fu ? ed.v : ed.u;
            (vcontains(side_a, away) ? to_a : to_b) += 1;
        }
        VertexSet moved = to_a >= to_b ? in_b : in_a;  // the minority piece changes sides
        // Moving is only sound when the piece has no edges leaving it.
        for (const Edge& ed : d.graph.edges()) {
            bool mu = vcontains(moved, ed.u), mv = vcontains(moved, ed.v);
            if (mu != mv) throw AlignmentFailure(e);
        }
        if (to_a >= to_b)
            side_a |= moved;
        else
            side_a &= ~moved;
    }
    TreeCutDecomposition out = prune_empty_nodes(double_split(d, anchor, side_a));
    return out;
}

TreeCutDecomposition attach_leaf_split(const TreeCutDecomposition& d, int t, VertexSet s) {
    if (t < 0 || t >= d.node_count) throw std::invalid_argument("node out of range");
    if (s & ~d.bags[t]) throw std::invalid_argument("split set must lie inside the bag");
    TreeCutDecomposition out = d;
    out.bags[t] &= ~s;
    for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
        if (vcontains(s, v)) {
            out.tree_edges.push_back({t, out.node_count});
            out.bags.push_back(vbit(v));
            ++out.node_count;
        }
    return out;
}

namespace {

int degree_in_torso_minus(const Torso& torso, const std::vector<bool>& z_dropped, int torso_vertex) {
    int deg = 0;
    for (EdgeId i = 0; i < torso.graph.edge_count(); ++i) {
        if (z_dropped[i]) continue;
        const Edge& e = torso.graph.edge(i);
        if (e.u == torso_vertex) ++deg;
        if (e.v == torso_vertex) ++deg;
    }
    return deg;
}

}  // namespace

ConclusionReport check_global_conclusion(const MultiGraph& g, const MultiGraph& h,
                                         const GlobalConclusionCertificate& cert) {
    ConclusionReport report;
    auto bad = [&](const std::string& s) { report.violations.push_back(s); };
    const TreeCutDecomposition& d = cert.decomposition;
    auto valid = validate(d);
    if (!valid.valid()) {
        for (const auto& v : valid.violations) bad("decomposition: " + v);
        return report;
    }
    if (static_cast<int>(cert.z_sets.size()) != d.node_count ||
        static_cast<int>(cert.k_thresholds.size()) != d.node_count ||
        static_cast<int>(cert.u_sets.size()) != d.node_count) {
        bad("certificate per-node data does not match the tree");
        return report;
    }
    if (adhesion(d) > cert.eta)
        bad("adhesion " + std::to_string(adhesion(d)) + " exceeds eta " + std::to_string(cert.eta));

    MultiGraph h_prime = make_h_prime(h);
    DegreeProfile hp = degree_profile(h_prime);
    bool extended = cert.has_extended();
    std::vector<int> tree_deg(d.node_count, 0);
    for (auto [a, b] : d.tree_edges) {
        ++tree_deg[a];
        ++tree_deg[b];
    }

    for (int t = 0; t < d.node_count; ++t) {
        if (static_cast<int>(cert.z_sets[t].size()) > cert.xi)
            bad("node " + std::to_string(t) + ": |Z| exceeds xi");
        int kt = cert.k_thresholds[t];
        Torso torso = torso_at(d, t);
        std::vector<bool> dropped(torso.graph.edge_count(), false);
        for (EdgeId ge : cert.z_sets[t]) {
            if (ge < 0 || ge >= g.edge_count()) {
                bad("node " + std::to_string(t) + ": unknown edge in Z");
                continue;
            }
            for (EdgeId i = 0; i < torso.graph.edge_count(); ++i)
                if (torso.edge_origin[i] == ge) dropped[i] = true;
        }
        int high = 0;
        for (int v = 0; v < torso.graph.vertex_count(); ++v)
            if (degree_in_torso_minus(torso, dropped, v) >= kt) ++high;
        if (high >= hp.at_least(kt))
            bad("node " + std::to_string(t) + ": " + std::to_string(high) +
                " vertices of degree >= " + std::to_string(kt) + ", pattern has " +
                std::to_string(hp.at_least(kt)));
        if (extended) {
            for (int v = 0; v < torso.graph.vertex_count(); ++v) {
                bool peripheral = vcontains(torso.peripheral, v);
                int deg = degree_in_torso_minus(torso, dropped, v);
                if (peripheral && deg >= kt)
                    bad("node " + std::to_string(t) + ": peripheral vertex of degree >= threshold");
            }
            bool leaf = d.node_count >= 2 && tree_deg[t] == 1;
            if (!leaf) {
                for (int v = 0; v < torso.graph.vertex_count(); ++v)
                    if (!vcontains(torso.peripheral, v) &&
                        degree_in_torso_minus(torso, dropped, v) < kt)
                        bad("node " + std::to_string(t) + ": bag vertex below threshold");
            } else if (vcount(d.bags[t]) > 1) {
                bad("leaf " + std::to_string(t) + ": bag has more than one vertex");
            }
        }
    }
    return report;
}

ConclusionReport check_mw_conclusion(const MultiGraph& g, const TreeCutDecomposition& d, int xi) {
    (void)g;
    ConclusionReport report;
    auto bad = [&](const std::string& s) { report.violations.push_back(s); };
    auto valid = validate(d);
    if (!valid.valid()) {
        for (const auto& v : valid.violations) bad("decomposition: " + v);
        return report;
    }
    if (adhesion(d) > xi) bad("adhesion " + std::to_string(adhesion(d)) + " exceeds xi");
    std::vector<int> deg(d.node_count, 0);
    for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e) {
        if (static_cast<int>(adhesion_set(d, e).size()) <= 2) continue;  // edges in S are ignored
        ++deg[d.tree_edges[e].first];
        ++deg[d.tree_edges[e].second];
    }
    for (int t = 0; t < d.node_count; ++t) {
        if (deg[t] > xi) bad("node " + std::to_string(t) + ": degree in T - S exceeds xi");
        if (vcount(d.bags[t]) > xi) bad("node " + std::to_string(t) + ": bag larger than xi");
    }
    if (tree_cut_width(d) > 2 * xi)
        bad("tree-cut width " + std::to_string(tree_cut_width(d)) + " exceeds 2*xi");
    return report;
}

bool is_k_simple(const MultiGraph& g, int k) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.loop_count_at(v) > k) return false;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v = u + 1; v < g.vertex_count(); ++v)
            if (g.parallel_count(u, v) > k) return false;
    return true;
}

bool is_decomposition_xi_nice(const TreeCutDecomposition& d, int xi) {
    if (!validate(d).valid()) return false;
    if (adhesion(d) > xi) return false;
    for (int t = 0; t < d.node_count; ++t) {
        Torso torso = torso_at(d, t);
        VertexSet bag_vertices = 0;
        for (int v = 0; v < torso.graph.vertex_count(); ++v)
            if (!vcontains(torso.peripheral, v)) bag_vertices |= vbit(v);
        int core = 0;
        for (int v = 0; v < torso.graph.vertex_count(); ++v) {
            // Pendant vertices hanging on the bag may live outside the core.
            int deg = torso.graph.degree(v);
            bool pendant = false;
            if (deg == 1)
                for (const Edge& e : torso.graph.edges()) {
                    if (e.u == v && vcontains(bag_vertices, e.v)) pendant = true;
                    if (e.v == v && vcontains(bag_vertices, e.u)) pendant = true;
                }
            if (!pendant) ++core;
        }
        if (core > xi) return false;
    }
    return true;
}

std::optional<TreeCutDecomposition> is_xi_nice(const MultiGraph& g, int xi) {
    std::optional<TreeCutDecomposition> witness;
    enumerate_decompositions(g, [&](const TreeCutDecomposition& d) {
        if (witness) return;
        if (is_decomposition_xi_nice(d, xi)) witness = d;
    });
    return witness;
}

BalancedSplit balanced_split(const TreeCutDecomposition& d, int xi) {
    if (!is_decomposition_xi_nice(d, xi))
        throw std::invalid_argument("balanced split needs a xi-nice decomposition");
    const MultiGraph& g = d.graph;
    long long m = g.edge_count();
    BalancedSplit out;
    // Statement 1: a tree edge with >= |E|/3 incident edges on each far side.
    for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e) {
        auto [left, right] = tree_split(d, e);
        long long inc_left = g.edges_incident_with(bag_union(d, left));
        long long inc_right = g.edges_incident_with(bag_union(d, right));
        if (3 * inc_left >= m && 3 * inc_right >= m) {
            out.kind = BalancedSplit::TreeEdge;
            out.tree_edge = e;
            out.incident_one = inc_left;
            out.incident_two = inc_right;
            return out;
        }
    }
    // Orient each tree edge away from its light side; take a sink.
    std::vector<int> outdeg(d.node_count, 0);
    for (int e = 0; e < static_cast<int>(d.tree_edges.size()); ++e) {
        auto [left, right] = tree_split(d, e);
        long long inc_left = g.edges_incident_with(bag_union(d, left));
        auto [a, b] = d.tree_edges[e];
        bool a_left = std::binary_search(left.begin(), left.end(), a);
        long long inc_a_side = a_left ? inc_left : g.edges_incident_with(bag_union(d, right));
        // Tail = the end whose own side is light.
        if (3 * inc_a_side < m)
            ++outdeg[a];
        else
            ++outdeg[b];
    }
    int sink = -1;
    for (int t = 0; t < d.node_count && sink < 0; ++t)
        if (outdeg[t] == 0) sink = t;
    if (sink < 0) throw std::logic_error("tree orientation has no sink");

    out.node = sink;
    out.core_edges = 0;
    for (const Edge& e : g.edges())
        if (vcontains(d.bags[sink], e.u) && vcontains(d.bags[sink], e.v)) ++out.core_edges;
    if (9 * out.core_edges >= m) {
        out.kind = BalancedSplit::CoreNode;
        return out;
    }

    // Minimal prefix of the branches reaching |E|/3 incident edges.
    std::vector<bool> removed(d.node_count, false);
    removed[sink] = true;
    std::vector<std::vector<int>> branches;
    {
        std::vector<std::vector<int>> adj(d.node_count);
        for (auto [a, b] : d.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<bool> seen(d.node_count, false);
        seen[sink] = true;
        std::sort(adj[sink].begin(), adj[sink].end());
        for (int nb : adj[sink]) {
            if (seen[nb]) continue;
            std::vector<int> branch;
            std::queue<int> q;
            q.push(nb);
            seen[nb] = true;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                branch.push_back(x);
                for (int y : adj[x])
                    if (!seen[y]) {
                        seen[y] = true;
                        q.push(y);
                    }
            }
            std::sort(branch.begin(), branch.end());
            branches.push_back(std::move(branch));
        }
    }
    VertexSet prefix = 0;
    size_t split_at = branches.size();
    for (size_t i = 0; i < branches.size(); ++i) {
        prefix |= bag_union(d, branches[i]);
        if (3 * static_cast<long long>(g.edges_incident_with(prefix)) >= m) {
            split_at = i + 1;
            break;
        }
    }
    if (split_at > branches.size()) split_at = branches.size();
    VertexSet one = 0, two = 0;
    for (size_t i = 0; i < branches.size(); ++i) {
        if (i < split_at) {
            out.part_one.push_back(branches[i]);
            one |= bag_union(d, branches[i]);
        } else {
            out.part_two.push_back(branches[i]);
            two |= bag_union(d, branches[i]);
        }
    }
    out.kind = BalancedSplit::BranchSplit;
    out.incident_one = g.edges_incident_with(one);
    out.incident_two = g.edges_incident_with(two);
    return out;
}

std::string format_certificate(const GlobalConclusionCertificate& cert) {
    std::ostringstream out;
    out << format_decomposition(cert.decomposition);
    for (int t = 0; t < cert.decomposition.node_count; ++t) {
        if (!cert.z_sets[t].empty()) {
            out << "zset " << t << ":";
            for (EdgeId e : cert.z_sets[t]) out << ' ' << e;
            out << '\n';
        }
        out << "kt " << t << ": " << cert.k_thresholds[t] << '\n';
        if (cert.u_sets[t]) {
            out << "uset " << t << ":";
            for (VertexId v = 0; v < cert.decomposition.graph.vertex_count(); ++v)
                if (vcontains(*cert.u_sets[t], v)) out << ' ' << v;
            out << '\n';
        }
    }
    out << "bounds " << cert.eta << ' ' << cert.xi << '\n';
    return out.str();
}

GlobalConclusionCertificate parse_certificate(std::istream& in, const MultiGraph& g) {
    std::ostringstream decomposition_part;
    std::vector<std::string> extra;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream probe(line);
        std::string kind;
        probe >> kind;
        if (kind == "zset" || kind == "kt" || kind == "uset" || kind == "bounds")
            extra.push_back(line);
        else
            decomposition_part << line << '\n';
    }
    GlobalConclusionCertificate cert;
    cert.decomposition = parse_decomposition_string(decomposition_part.str(), g);
    int p = cert.decomposition.node_count;
    cert.z_sets.assign(p, {});
    cert.k_thresholds.assign(p, 0);
    cert.u_sets.assign(p, std::nullopt);
    int lineno = 0;
    for (const std::string& row : extra) {
        ++lineno;
        std::string data = row;
        std::replace(data.begin(), data.end(), ':', ' ');
        std::istringstream s(data);
        std::string kind;
        s >> kind;
        if (kind == "bounds") {
            if (!(s >> cert.eta >> cert.xi)) throw parse_error(lineno, "bad bounds line");
            continue;
        }
        int t = -1;
        if (!(s >> t) || t < 0 || t >= p) throw parse_error(lineno, "bad node id in certificate");
        if (kind == "zset") {
            int e;
            while (s >> e) {
                if (e < 0 || e >= g.edge_count()) throw parse_error(lineno, "edge id out of range");
                cert.z_sets[t].push_back(e);
            }
        } else if (kind == "kt") {
            if (!(s >> cert.k_thresholds[t])) throw parse_error(lineno, "bad threshold");
        } else {
            VertexSet u = 0;
            int v;
            while (s >> v) {
                if (v < 0 || v >= g.vertex_count()) throw parse_error(lineno, "vertex out of range");
                u |= vbit(v);
            }
            cert.u_sets[t] = u;
        }
    }
    return cert;
}

GlobalConclusionCertificate parse_certificate_string(const std::string& text, const MultiGraph& g) {
    std::istringstream in(text);
    return parse_certificate(in, g);
}

}  // namespace tckit
