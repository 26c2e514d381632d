#ifndef TCKIT_DECOMPOSITION_HPP
#define TCKIT_DECOMPOSITION_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tckit/edge_cut.hpp"
#include "tckit/multigraph.hpp"

namespace tckit {

// Tree plus pairwise-disjoint bags covering V(G). Node ids are 0..p-1.
struct TreeCutDecomposition {
    MultiGraph graph;
    int node_count = 0;
    std::vector<std::pair<int, int>> tree_edges;  // p-1 edges when valid
    std::vector<VertexSet> bags;                  // per node, may be empty

    static TreeCutDecomposition single_bag(const MultiGraph& g);
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

ValidationReport validate(const TreeCutDecomposition& d);

// Tree nodes on each side of tree edge `e` (side containing tree_edges[e].first
// first). Requires a valid tree.
std::pair<std::vector<int>, std::vector<int>> tree_split(const TreeCutDecomposition& d, int e);

// Union of bags over a set of tree nodes.
VertexSet bag_union(const TreeCutDecomposition& d, const std::vector<int>& nodes);

// Edges of G with one end in each side of the split induced by tree edge `e`.
std::vector<EdgeId> adhesion_set(const TreeCutDecomposition& d, int e);
int adhesion(const TreeCutDecomposition& d);

// [A_{e,t}, B_{e,t}]: B is the union of bags over the component of T - e
// containing t. `t` is a node or a connected set of nodes with at most one
// end of e inside.
EdgeCut side_of(const TreeCutDecomposition& d, int e, const std::vector<int>& t);
EdgeCut side_of(const TreeCutDecomposition& d, int e, int t);

// Torso at a node or connected subtree: one peripheral vertex per component
// of T - t; loops at peripheral vertices are deleted. Torso edges keep their
// identity as edges of G via edge_origin.
struct Torso {
    MultiGraph graph;
    VertexSet peripheral = 0;                     // mask over torso vertices
    std::vector<EdgeId> edge_origin;              // torso edge -> G edge
    std::vector<VertexId> bag_vertex_origin;      // torso vertex -> G vertex, -1 if peripheral
    std::vector<std::vector<int>> vertex_origin;  // torso vertex -> tree nodes it contracts
    std::vector<int> torso_vertex_of;             // G vertex -> torso vertex
    int edge_count() const { return graph.edge_count(); }
};

Torso torso_at(const TreeCutDecomposition& d, const std::vector<int>& t);
Torso torso_at(const TreeCutDecomposition& d, int t);

// Count of torso edges without building the torso.
int torso_edge_count(const TreeCutDecomposition& d, const std::vector<int>& t);
int torso_edge_count(const TreeCutDecomposition& d, int t);

// Peripheral vertices of degree <= 2 are deleted (degree < 2 or a free loop)
// or suppressed (two incident non-loop edges replaced by one), smallest
// vertex first, until every peripheral vertex has degree >= 3.
MultiGraph three_center(const Torso& torso);

int torso_width(const TreeCutDecomposition& d);  // max node torso edge count

// max(adhesion, max over nodes of |V(3-center)|). Definitional note: the
// width takes the maximum of the 3-center sizes over the nodes.
int tree_cut_width(const TreeCutDecomposition& d);

inline constexpr int kWidthSearchMaxVertices = 5;

// Exact minimum over all tree-cut decompositions, by bounded search over
// bag partitions and tree shapes. Trees with up to n + max(0, n-2) nodes
// suffice: empty leaves and empty degree-2 nodes never help, which leaves
// at most n nonempty nodes and n-2 empty branch nodes.
int tree_cut_torso_width(const MultiGraph& g);
TreeCutDecomposition optimal_torso_decomposition(const MultiGraph& g);
int tree_cut_width_of_graph(const MultiGraph& g);

// Calls fn for every decomposition in the bounded search space.
void enumerate_decompositions(const MultiGraph& g,
                              const std::function<void(const TreeCutDecomposition&)>& fn);

// Deterministic sample: a few structured decompositions plus seeded random
// ones, deduplicated.
std::vector<TreeCutDecomposition> sample_decompositions(const MultiGraph& g, int count,
                                                        std::uint64_t seed);

// k-edge-sum at v1/v2 along `matching` (pairs of non-loop edge ids).
struct EdgeSumResult {
    MultiGraph graph;
    std::vector<VertexId> from_g1;  // g1 vertex -> result vertex, -1 for v1
    std::vector<VertexId> from_g2;
    std::vector<EdgeId> new_edges;  // in matching order
};
EdgeSumResult edge_sum(const MultiGraph& g1, VertexId v1, const MultiGraph& g2, VertexId v2,
                       const std::vector<std::pair<EdgeId, EdgeId>>& matching);

// Folds the node torsos back together by edge-sums at peripheral vertices;
// the result carries the original edge ids.
MultiGraph reconstruct_from_torsos(const TreeCutDecomposition& d);

// Interchange format: `tree p`, then `node <id> bag v...` lines and
// `tedge <a> <b>` lines.
std::string format_decomposition(const TreeCutDecomposition& d);
TreeCutDecomposition parse_decomposition(std::istream& in, const MultiGraph& g);
TreeCutDecomposition parse_decomposition_string(const std::string& text, const MultiGraph& g);

// Removes empty-bag leaves and suppresses empty-bag degree-2 nodes; node
// torsos, cells and signatures are unchanged. Keeps at least one node.
TreeCutDecomposition prune_empty_nodes(const TreeCutDecomposition& d);

// Two copies of the tree (with the connected anchor contracted to one node)
// joined by an edge between the anchor copies; bags are split by the mask:
// the first copy keeps bag & side_a, the second the rest. The doubled-tree
// surgery shared by the smoothing refinement and the U-path splitting.
TreeCutDecomposition double_split(const TreeCutDecomposition& d, const std::vector<int>& anchor,
                                  VertexSet side_a);

}  // namespace tckit

#endif
