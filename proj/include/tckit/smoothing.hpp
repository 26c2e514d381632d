#ifndef TCKIT_SMOOTHING_HPP
#define TCKIT_SMOOTHING_HPP

#include <optional>
#include <vector>

#include "tckit/decomposition.hpp"

namespace tckit {

// Pseudo-k-cell: component of T after deleting tree edges whose adhesion
// set has fewer than k edges. A k-cell additionally has >= k torso edges;
// it is fat when the torso has >= 3k-2.
struct Cell {
    std::vector<int> nodes;  // sorted
    int k = 0;
    int torso_edge_count = 0;
    bool is_cell = false;
    bool is_fat = false;
};

std::vector<Cell> cells(const TreeCutDecomposition& d, int k);

// The theta-signature: rows a_i for i = theta..1, each row the counts
// a_{i,j} for j = |E(G)|..1 of i-cells with at least j torso edges.
// Compared lexicographically; graphs without edges get the empty
// signature, which is minimal.
struct Signature {
    int theta = 0;
    int edge_count = 0;
    std::vector<std::vector<int>> rows;

    int compare(const Signature& o) const;  // <0, 0, >0
    bool operator<(const Signature& o) const { return compare(o) < 0; }
    bool operator==(const Signature& o) const { return compare(o) == 0; }
    std::string to_string() const;
};

Signature signature(const TreeCutDecomposition& d, int theta);

// Witness that the decomposition is not theta-smooth: a node or theta-cell
// and a cut of order < theta with at least order+1 torso edges incident
// with each side.
struct SmoothnessViolation {
    std::vector<int> cell_nodes;
    bool cell_is_theta_cell = false;
    EdgeCut cut;
};

std::optional<SmoothnessViolation> is_theta_smooth(const TreeCutDecomposition& d, int theta);

struct RefineResult {
    TreeCutDecomposition decomposition;
    int iterations = 0;
    Signature final_signature;
};

// Repeats the signature-decreasing surgery until the decomposition is
// theta-smooth: pick a violating (cell, cut) maximizing the number of
// subtrees lying wholly inside one side, double the tree at the cell and
// split every bag by the cut. The signature strictly decreases each round.
RefineResult smooth_refine(const TreeCutDecomposition& d, int theta);

// Contracts every theta-cell into a single node (bag union); smoothness is
// preserved.
TreeCutDecomposition contract_theta_cells(const TreeCutDecomposition& d, int theta);

}  // namespace tckit

#endif
