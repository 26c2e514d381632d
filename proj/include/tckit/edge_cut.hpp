#ifndef TCKIT_EDGE_CUT_HPP
#define TCKIT_EDGE_CUT_HPP

#include <optional>
#include <vector>

#include "tckit/multigraph.hpp"

namespace tckit {

// Ordered bipartition [A,B] of V(G) with the crossing non-loop edges.
// Loops never cross.
struct EdgeCut {
    VertexSet side_a = 0;
    VertexSet side_b = 0;
    std::vector<EdgeId> crossing;  // sorted
    int order() const { return static_cast<int>(crossing.size()); }

    bool operator==(const EdgeCut& o) const { return side_a == o.side_a && side_b == o.side_b; }
    bool operator<(const EdgeCut& o) const {
        return side_a != o.side_a ? side_a < o.side_a : side_b < o.side_b;
    }
};

// [A,B] from the A-side mask; B is the complement.
EdgeCut cut_from_mask(const MultiGraph& g, VertexSet side_a);

// Validates that the two sets partition V(G).
EdgeCut edge_cut_order(const MultiGraph& g, VertexSet side_a, VertexSet side_b);

// Vertex counts above this make 2^n cut scans infeasible.
inline constexpr int kCutEnumMaxVertices = 16;

// All ordered bipartitions of order <= max_order, in binary-counter order
// of the A-side over the canonical vertex ordering ([empty,V] first).
std::vector<EdgeCut> enumerate_edge_cuts(const MultiGraph& g, int max_order);

// Minimum-order cut [A,B] with every edge of y incident with A and every
// edge of z incident with B, if its order is below `bound`. Ties broken by
// the enumeration order of A.
std::optional<EdgeCut> min_cut_between_edge_sets(const MultiGraph& g,
                                                 const std::vector<EdgeId>& y,
                                                 const std::vector<EdgeId>& z, int bound);

// Corner cuts used by the uncrossing arguments.
EdgeCut cut_union(const MultiGraph& g, const EdgeCut& ab, const EdgeCut& cd);         // [A u C, B n D]
EdgeCut cut_intersection(const MultiGraph& g, const EdgeCut& ab, const EdgeCut& cd);  // [A n C, B u D]

}  // namespace tckit

#endif
