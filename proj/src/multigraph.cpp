#include "tckit/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>

namespace tckit {

int MultiGraph::degree(VertexId v) const {
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

int MultiGraph::max_degree() const {
    int m = 0;
    for (VertexId v = 0; v < n_; ++v) m = std::max(m, degree(v));
    return m;
}

int MultiGraph::loop_count_at(VertexId v) const {
    int c = 0;
    for (const Edge& e : edges_)
        if (e.is_loop() && e.u == v) ++c;
    return c;
}

int MultiGraph::parallel_count(VertexId u, VertexId v) const {
    int c = 0;
    for (const Edge& e : edges_)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++c;
    return c;
}

int MultiGraph::edges_incident_with(VertexSet s) const {
    int c = 0;
    for (const Edge& e : edges_)
        if (vcontains(s, e.u) || vcontains(s, e.v)) ++c;
    return c;
}

std::vector<EdgeId> MultiGraph::edge_ids_incident_with(VertexSet s) const {
    std::vector<EdgeId> out;
    for (EdgeId i = 0; i < edge_count(); ++i)
        if (vcontains(s, edges_[i].u) || vcontains(s, edges_[i].v)) out.push_back(i);
    return out;
}

std::vector<VertexSet> MultiGraph::components() const {
    std::vector<VertexSet> out;
    VertexSet seen = 0;
    for (VertexId s = 0; s < n_; ++s) {
        if (vcontains(seen, s)) continue;
        VertexSet comp = vbit(s);
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop();
            for (const Edge& e : edges_) {
                VertexId other = -1;
                if (e.u == x) other = e.v;
                else if (e.v == x) other = e.u;
                if (other >= 0 && !vcontains(comp, other)) {
                    comp |= vbit(other);
                    q.push(other);
                }
            }
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool MultiGraph::connected() const { return components().size() <= 1; }

bool MultiGraph::loopless() const {
    for (const Edge& e : edges_)
        if (e.is_loop()) return false;
    return true;
}

bool MultiGraph::simple() const {
    if (!loopless()) return false;
    for (int i = 0; i < edge_count(); ++i)
        for (int j = i + 1; j < edge_count(); ++j) {
            const Edge &a = edges_[i], &b = edges_[j];
            if ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u)) return false;
        }
    return true;
}

MultiGraph MultiGraph::without_edges(const std::vector<EdgeId>& drop) const {
    std::vector<bool> dead(edge_count(), false);
    for (EdgeId e : drop) dead.at(e) = true;
    MultiGraph out(n_);
    for (EdgeId i = 0; i < edge_count(); ++i)
        if (!dead[i]) out.add_edge(edges_[i].u, edges_[i].v);
    return out;
}

MultiGraph MultiGraph::induced(VertexSet keep, std::vector<VertexId>* vertex_origin,
                               std::vector<EdgeId>* edge_origin) const {
    std::vector<int> newid(n_, -1);
    std::vector<VertexId> vo;
    for (VertexId v = 0; v < n_; ++v)
        if (vcontains(keep, v)) {
            newid[v] = static_cast<int>(vo.size());
            vo.push_back(v);
        }
    MultiGraph out(static_cast<int>(vo.size()));
    std::vector<EdgeId> eo;
    for (EdgeId i = 0; i < edge_count(); ++i) {
        const Edge& e = edges_[i];
        if (vcontains(keep, e.u) && vcontains(keep, e.v)) {
            out.add_edge(newid[e.u], newid[e.v]);
            eo.push_back(i);
        }
    }
    if (vertex_origin) *vertex_origin = std::move(vo);
    if (edge_origin) *edge_origin = std::move(eo);
    return out;
}

DegreeProfile degree_profile(const MultiGraph& g) {
    DegreeProfile p;
    p.counts.assign(g.max_degree() + 1, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        for (int k = 0; k <= d; ++k) ++p.counts[k];
    }
    if (p.counts.empty()) p.counts.push_back(0);
    return p;
}

namespace {

// Strips comments; returns false at end of input.
bool next_data_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) return true;
    }
    return false;
}

}  // namespace

MultiGraph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_data_line(in, line, lineno)) throw parse_error(lineno, "missing header line");
    std::istringstream head(line);
    long long n = -1, m = -1;
    std::string junk;
    if (!(head >> n >> m) || (head >> junk)) throw parse_error(lineno, "expected `n m` header");
    if (n < 0 || n > 63) throw parse_error(lineno, "vertex count out of range");
    if (m < 0) throw parse_error(lineno, "negative edge count");
    MultiGraph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, lineno))
            throw parse_error(lineno, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream row(line);
        long long u = -1, v = -1;
        if (!(row >> u >> v) || (row >> junk)) throw parse_error(lineno, "expected `u v` edge line");
        if (u < 0 || u >= n || v < 0 || v >= n) throw parse_error(lineno, "vertex index out of range");
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (next_data_line(in, line, lineno)) throw parse_error(lineno, "trailing data after edge list");
    return g;
}

MultiGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

MultiGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open " + path);
    return parse_graph(in);
}

std::string format_graph(const MultiGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

namespace {

struct BridgeDfs {
    const MultiGraph& g;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj;
    std::vector<int> disc, low;
    std::vector<bool> is_bridge;
    int timer = 0;

    explicit BridgeDfs(const MultiGraph& graph) : g(graph) {
        adj.resize(g.vertex_count());
        for (EdgeId i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            if (e.is_loop()) continue;
            adj[e.u].push_back({e.v, i});
            adj[e.v].push_back({e.u, i});
        }
        disc.assign(g.vertex_count(), -1);
        low.assign(g.vertex_count(), -1);
        is_bridge.assign(g.edge_count(), false);
    }

    void run(VertexId v, EdgeId entered) {
        disc[v] = low[v] = timer++;
        for (auto [w, e] : adj[v]) {
            if (e == entered) continue;  // parallel edges use distinct ids
            if (disc[w] == -1) {
                run(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) is_bridge[e] = true;
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
};

}  // namespace

BridgeDecomposition bridges_and_2ec_components(const MultiGraph& g) {
    BridgeDfs dfs(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (dfs.disc[v] == -1) dfs.run(v, -1);
    BridgeDecomposition out;
    std::vector<EdgeId> drop;
    for (EdgeId i = 0; i < g.edge_count(); ++i)
        if (dfs.is_bridge[i]) {
            out.bridges.push_back(i);
            drop.push_back(i);
        }
    out.components = g.without_edges(drop).components();
    return out;
}

int edge_disjoint_path_count(const MultiGraph& g, VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("edge_disjoint_path_count needs distinct vertices");
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex out of range");
    // Each non-loop edge becomes a pair of unit-capacity arcs.
    int m = g.edge_count();
    std::vector<int> cap(2 * m, 0);
    std::vector<std::vector<std::pair<VertexId, int>>> adj(g.vertex_count());
    for (EdgeId i = 0; i < m; ++i) {
        const Edge& e = g.edge(i);
        if (e.is_loop()) continue;
        cap[2 * i] = cap[2 * i + 1] = 1;
        adj[e.u].push_back({e.v, 2 * i});
        adj[e.v].push_back({e.u, 2 * i + 1});
    }
    int flow = 0;
    for (;;) {
        std::vector<int> via(g.vertex_count(), -1);
        via[u] = -2;
        std::queue<VertexId> q;
        q.push(u);
        while (!q.empty() && via[v] == -1) {
            VertexId x = q.front();
            q.pop();
            for (auto [y, arc] : adj[x]) {
                if (cap[arc] > 0 && via[y] == -1) {
                    via[y] = arc;
                    q.push(y);
                }
            }
        }
        if (via[v] == -1) break;
        VertexId x = v;
        while (x != u) {
            int arc = via[x];
            cap[arc] -= 1;
            cap[arc ^ 1] += 1;
            const Edge& e = g.edge(arc / 2);
            x = (arc % 2 == 0) ? e.u : e.v;
        }
        ++flow;
    }
    return flow;
}

}  // namespace tckit
