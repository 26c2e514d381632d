#ifndef TCKIT_MULTIGRAPH_HPP
#define TCKIT_MULTIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace tckit {

using VertexId = int;
using EdgeId = int;

// Vertex subsets are bitmasks; graphs are capped at 63 vertices.
using VertexSet = std::uint64_t;

inline VertexSet vbit(VertexId v) { return VertexSet{1} << v; }
inline bool vcontains(VertexSet s, VertexId v) { return (s >> v) & 1; }
inline int vcount(VertexSet s) { return __builtin_popcountll(s); }

// Thrown when an input exceeds a documented enumeration ceiling.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct Edge {
    VertexId u;
    VertexId v;
    bool is_loop() const { return u == v; }
};

// Finite multigraph with loops and parallel edges. Vertices are 0..n-1,
// edge ids are stable indices into the edge list. Nothing is ever
// simplified away.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int vertex_count) { resize(vertex_count); }
    MultiGraph(int vertex_count, std::initializer_list<std::pair<int, int>> edges) {
        resize(vertex_count);
        for (auto [u, v] : edges) add_edge(u, v);
    }

    void resize(int vertex_count) {
        if (vertex_count < 0 || vertex_count > 63)
            throw std::invalid_argument("vertex count out of range");
        n_ = vertex_count;
    }

    EdgeId add_edge(VertexId u, VertexId v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint is not a declared vertex");
        edges_.push_back({u, v});
        return static_cast<EdgeId>(edges_.size()) - 1;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }
    VertexSet all_vertices() const { return n_ == 63 ? ~VertexSet{0} >> 1 : (VertexSet{1} << n_) - 1; }

    // Loops contribute 2.
    int degree(VertexId v) const;
    int max_degree() const;
    int loop_count_at(VertexId v) const;
    int parallel_count(VertexId u, VertexId v) const;

    // Each edge counted once if at least one end lies in the set.
    int edges_incident_with(VertexSet s) const;
    std::vector<EdgeId> edge_ids_incident_with(VertexSet s) const;
    bool edge_incident_with(EdgeId e, VertexSet s) const {
        const Edge& ed = edges_[e];
        return vcontains(s, ed.u) || vcontains(s, ed.v);
    }

    std::vector<VertexSet> components() const;
    bool connected() const;  // true for the empty and one-vertex graph
    bool loopless() const;
    bool simple() const;     // loopless and no parallel edges

    MultiGraph without_edges(const std::vector<EdgeId>& drop) const;
    // Induced subgraph on `keep`; out maps give new-id -> old-id.
    MultiGraph induced(VertexSet keep, std::vector<VertexId>* vertex_origin = nullptr,
                       std::vector<EdgeId>* edge_origin = nullptr) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Number of vertices of degree >= k for every k in 0..max_degree.
struct DegreeProfile {
    std::vector<int> counts;  // counts[k], counts[0] == |V|
    int at_least(int k) const {
        if (k < 0) k = 0;
        return k < static_cast<int>(counts.size()) ? counts[k] : 0;
    }
};

DegreeProfile degree_profile(const MultiGraph& g);

// Text format: first line `n m`, then m lines `u v` (0-based; `u u` is a
// loop). Lines starting with `#` and blank lines are skipped.
MultiGraph parse_graph(std::istream& in);
MultiGraph parse_graph_string(const std::string& text);
MultiGraph load_graph_file(const std::string& path);
std::string format_graph(const MultiGraph& g);

// Bridges and maximal 2-edge-connected vertex sets (singletons allowed).
struct BridgeDecomposition {
    std::vector<EdgeId> bridges;               // sorted
    std::vector<VertexSet> components;         // sorted by lowest vertex
};
BridgeDecomposition bridges_and_2ec_components(const MultiGraph& g);

// Menger value: maximum number of pairwise edge-disjoint u-v paths.
int edge_disjoint_path_count(const MultiGraph& g, VertexId u, VertexId v);

}  // namespace tckit

#endif
