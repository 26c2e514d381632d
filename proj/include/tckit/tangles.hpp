#ifndef TCKIT_TANGLES_HPP
#define TCKIT_TANGLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "tckit/smoothing.hpp"

namespace tckit {

// Explicit edge-tangle: the order theta plus the A-side masks of every
// member cut, one orientation per unordered bipartition of order < theta.
struct ExplicitTangle {
    int order = 0;
    std::vector<VertexSet> members;  // sorted A-side masks

    bool contains(VertexSet side_a) const;
    bool contains(const EdgeCut& cut) const { return contains(cut.side_a); }

    bool operator==(const ExplicitTangle& o) const {
        return order == o.order && members == o.members;
    }
    bool operator<(const ExplicitTangle& o) const {
        return order != o.order ? order < o.order : members < o.members;
    }
};

struct AxiomReport {
    std::vector<std::string> violations;  // tagged E1/E2/E3
    bool valid() const { return violations.empty(); }
};

// E1: every cut of order < theta appears in exactly one orientation.
// E2: the B-sides of any three members intersect.
// E3: every member has at least theta edges incident with its B-side.
AxiomReport check_axioms(const MultiGraph& g, const ExplicitTangle& t);

inline constexpr int kTangleMaxVertices = 12;

// All edge-tangles of the given order, by backtracking over orientation
// choices with E2/E3 pruning; deterministic order.
std::vector<ExplicitTangle> enumerate_tangles(const MultiGraph& g, int theta);

// Largest theta with a tangle of that order; 0 when none exists.
int max_tangle_order(const MultiGraph& g);

// One line per member: the sorted A-side vertex list, a colon, the order.
std::string dump_tangle(const MultiGraph& g, const ExplicitTangle& t);

// The tangle defined by a theta-fat theta-cell of a theta-smooth
// decomposition: cuts whose A-side meets at most order-many torso edges.
ExplicitTangle tangle_from_fat_cell(const TreeCutDecomposition& d, const Cell& cell, int theta);

// The unique theta-cell the tangle points at: contract pseudo-theta-cells,
// orient every tree edge by membership, return the sink.
Cell locate_cell(const MultiGraph& g, const ExplicitTangle& t, const TreeCutDecomposition& d);

// [A,B] lies in every tangle of `left` but not in `right`, and [B,A] in
// `right` but in none of `left`.
bool is_c_e_separator(const MultiGraph& g, const std::vector<ExplicitTangle>& left,
                      const ExplicitTangle& right, VertexSet side_a);

// Minimum (C, E)-separator: smallest order, then lowest A-side mask.
std::optional<EdgeCut> min_separator(const MultiGraph& g, const std::vector<ExplicitTangle>& left,
                                     const ExplicitTangle& right);
std::vector<EdgeCut> all_min_separators(const MultiGraph& g,
                                        const std::vector<ExplicitTangle>& left,
                                        const ExplicitTangle& right);

// Edge-cuts with pairwise disjoint A-sides.
struct CrossFreeFamily {
    std::vector<EdgeCut> cuts;
};
bool is_cross_free(const std::vector<EdgeCut>& cuts);

// Checks the segregator conditions; on failure returns the index of a
// tangle of `c_right` that is not served (or -1 for a bad member).
struct SegregatorCheck {
    bool ok = false;
    int failing_tangle = -2;
    std::string reason;
};
SegregatorCheck check_segregator(const MultiGraph& g, const std::vector<ExplicitTangle>& c_left,
                                 const std::vector<ExplicitTangle>& c_right,
                                 const std::vector<EdgeCut>& s);

// One uncrossing exchange on members i < j with overlapping A-sides:
// either both are replaced by [A u C, B n D] (when that stays minimum for
// one of them), or the second becomes [B n C, A u D]. The union of A-sides
// is preserved and the total A-size strictly drops.
std::vector<EdgeCut> exchange_crossing_pair(const MultiGraph& g, const std::vector<EdgeCut>& fam,
                                            size_t i, size_t j);

// Uncrossing: returns a cross-free (C,C')-segregator with the same union of
// A-sides. Local exchange loop with decreasing total A-size; falls back to
// exhaustive search over minimum separators if an exchange ever breaks the
// segregator conditions.
CrossFreeFamily uncross_segregator(const MultiGraph& g, const std::vector<ExplicitTangle>& c_left,
                                   const std::vector<ExplicitTangle>& c_right,
                                   const std::vector<EdgeCut>& s);

// f([A,B]) = [A n B*, B u A*] for every member, plus the cut itself; the
// flagged subset collects the members whose order may grow, and has size
// at most twice the order of the cut.
struct RestrictedFamily {
    CrossFreeFamily family;         // {[A*,B*]} followed by the images
    std::vector<int> flagged;       // indices into family.cuts
    std::vector<int> image_origin;  // family.cuts index -> input index, -1 for the cut
};
RestrictedFamily restrict_family(const MultiGraph& g, const CrossFreeFamily& d, const EdgeCut& cut);

// (D,C)-guard: a cross-free family whose every member is a minimum (C,E')-
// separator for some tangle E' of the same order with D not contained in E'.
bool is_guard(const MultiGraph& g, const CrossFreeFamily& s, const CrossFreeFamily& d,
              const std::vector<ExplicitTangle>& c);

// Tangle of order theta - |x| on G - x: inherited members of small order.
struct TangleMinusEdges {
    MultiGraph graph;   // G - x (edge ids renumbered)
    ExplicitTangle tangle;
};
TangleMinusEdges tangle_minus_edges(const MultiGraph& g, const ExplicitTangle& t,
                                    const std::vector<EdgeId>& x);

}  // namespace tckit

#endif
