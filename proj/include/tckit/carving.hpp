#ifndef TCKIT_CARVING_HPP
#define TCKIT_CARVING_HPP

#include <string>

#include "tckit/decomposition.hpp"

namespace tckit {

// Weak carving: singleton bags exactly at the leaves, empty bags elsewhere.
// A carving additionally has every tree node of degree 1 or 3.
struct Carving {
    TreeCutDecomposition decomposition;
    bool weak = false;  // true when the cubic-tree condition is waived
};

bool is_weak_carving(const TreeCutDecomposition& d);
bool is_carving(const TreeCutDecomposition& d);

inline constexpr int kCarvingMaxLeaves = 8;

// Exact minimum adhesion over all carvings, by recursive leaf insertion
// over cubic trees. Graphs on fewer than 3 vertices use the degenerate
// convention: a single vertex has carving-width 0, two vertices the order
// of the forced bipartition.
int carving_width(const MultiGraph& g);

// Leaf attachment, degree splitting and degree-2 contraction; the result
// is a carving of adhesion at most torso_width(d).
Carving torso_to_carving(const TreeCutDecomposition& d);

// For loopless graphs: tree-cut torso-width <= floor(3 * carving-width / 2).
struct BoundCheck {
    bool pass = false;
    int carving_width = 0;
    int tree_cut_torso_width = 0;
};
BoundCheck carving_torso_bound_check(const MultiGraph& g);

// The width-duality report: tctw vs carving-width vs maximum tangle order.
struct DualityReport {
    int tctw = 0;
    int cw = 0;
    int mu = 0;
    bool loopless = false;
    bool pass1 = false;  // cw <= tctw and mu <= tctw
    bool pass2 = false;  // loopless: tctw <= floor(3 cw / 2)
    bool pass3 = false;  // tctw <= 3 mu
    bool pass() const { return pass1 && (!loopless || pass2) && pass3; }
};

DualityReport verify_duality(const MultiGraph& g);

// Machine line: `canon-form tctw cw mu pass1 pass2 pass3` (pass2 is `-`
// for graphs with loops).
std::string duality_report_line(const MultiGraph& g, const DualityReport& r);

}  // namespace tckit

#endif
