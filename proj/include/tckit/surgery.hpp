#ifndef TCKIT_SURGERY_HPP
#define TCKIT_SURGERY_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tckit/decomposition.hpp"
#include "tckit/immersion.hpp"

namespace tckit {

// Splitting along an order-2 cut: each side induced plus one new edge (or
// loop) joining the endpoints of the two crossing edges on that side.
struct TwoCutSplit {
    MultiGraph side_a;
    MultiGraph side_b;
    std::vector<VertexId> a_origin;  // side_a vertex -> G vertex
    std::vector<VertexId> b_origin;
    std::vector<EdgeId> a_edge_origin;  // induced edges only; the new edge is last
    std::vector<EdgeId> b_edge_origin;
    EdgeId new_edge_a = -1;
    EdgeId new_edge_b = -1;
};
TwoCutSplit split_two_cut(const MultiGraph& g, const EdgeCut& cut);

// The doubled-tree refinement. The cut must be aligned with the anchor:
// every subtree hanging off the anchor lies wholly inside A or wholly
// inside B. A misaligned subtree is first moved wholesale to the side
// holding the majority of its boundary edges, but only when that leaves
// the crossing set untouched; otherwise the offending tree edge is
// reported.
struct AlignmentFailure : std::invalid_argument {
    int tree_edge;
    explicit AlignmentFailure(int e)
        : std::invalid_argument("cut cannot be aligned with the anchor at tree edge " +
                                std::to_string(e)),
          tree_edge(e) {}
};
TreeCutDecomposition refine_along_cut(const TreeCutDecomposition& d, const std::vector<int>& anchor,
                                      const EdgeCut& cut);

// Moves each vertex of `s` out of the bag at `t` into its own new leaf.
TreeCutDecomposition attach_leaf_split(const TreeCutDecomposition& d, int t, VertexSet s);

// Certificate for the global-decomposition conclusion: per-node deleted
// edge sets, degree thresholds and optional exceptional vertex sets.
struct GlobalConclusionCertificate {
    TreeCutDecomposition decomposition;
    std::vector<std::vector<EdgeId>> z_sets;  // per node
    std::vector<int> k_thresholds;            // per node
    std::vector<std::optional<VertexSet>> u_sets;
    int eta = 0;
    int xi = 0;
    bool has_extended() const {
        for (const auto& u : u_sets)
            if (u) return true;
        return false;
    }
};

struct ConclusionReport {
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

// Statement 1 is always checked: fewer vertices of degree >= k_t in the
// torso minus Z_t than in H'. Statements 2-4 (peripheral vertices below
// threshold, bag vertices above it, singleton leaf bags) are checked when
// any U_t is present.
ConclusionReport check_global_conclusion(const MultiGraph& g, const MultiGraph& h,
                                         const GlobalConclusionCertificate& cert);

// Bounded-degree conclusion: adhesion <= xi, bags <= xi, the tree minus
// its small-adhesion edges has maximum degree <= xi, and tree-cut width
// <= 2 xi.
ConclusionReport check_mw_conclusion(const MultiGraph& g, const TreeCutDecomposition& d, int xi);

bool is_k_simple(const MultiGraph& g, int k);

// Decomposition-level xi-nice predicate: adhesion <= xi and every torso is
// a graph on <= xi vertices plus pendant leaves hanging on the bag.
bool is_decomposition_xi_nice(const TreeCutDecomposition& d, int xi);

// Searches the bounded decomposition space for a xi-nice witness.
std::optional<TreeCutDecomposition> is_xi_nice(const MultiGraph& g, int xi);

// Balanced split of a xi-nice decomposition: either a tree edge with at
// least |E|/3 incident edges on each side, or a sink node whose bag holds
// at least |E|/9 edges, or a two-part split of its branches with at least
// |E|/3 and 2|E|/9 incident edges.
struct BalancedSplit {
    enum Kind { TreeEdge, CoreNode, BranchSplit } kind = TreeEdge;
    int tree_edge = -1;
    int node = -1;
    std::vector<std::vector<int>> part_one;  // components of T - node, as node lists
    std::vector<std::vector<int>> part_two;
    long long incident_one = 0;  // edges incident with the A-side / part one
    long long incident_two = 0;
    long long core_edges = 0;
};
BalancedSplit balanced_split(const TreeCutDecomposition& d, int xi);

// Certificate file format: the decomposition block plus `zset t: ...`,
// `kt t: ...`, `uset t: ...` and `bounds eta xi` lines.
std::string format_certificate(const GlobalConclusionCertificate& cert);
GlobalConclusionCertificate parse_certificate(std::istream& in, const MultiGraph& g);
GlobalConclusionCertificate parse_certificate_string(const std::string& text, const MultiGraph& g);

}  // namespace tckit

#endif
