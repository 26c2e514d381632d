#ifndef TCKIT_IMMERSION_HPP
#define TCKIT_IMMERSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "tckit/multigraph.hpp"

namespace tckit {

// Injection of V(H) plus edge-disjoint path/cycle images of E(H): a
// non-loop maps to a path between its mapped ends, a loop to a cycle
// through its mapped vertex.
struct ImmersionWitness {
    std::vector<VertexId> vmap;               // H vertex -> G vertex
    std::vector<std::vector<EdgeId>> emap;    // H edge -> G edge ids in traversal order
};

inline constexpr int kImmersionMaxPatternEdges = 10;

// Backtracking over vertex injections and edge-disjoint simple path/cycle
// routings; exhaustive within the documented bounds.
std::optional<ImmersionWitness> find_immersion(const MultiGraph& g, const MultiGraph& h);

bool verify_witness(const MultiGraph& g, const MultiGraph& h, const ImmersionWitness& w);

// For every k, G must have at least as many vertices of degree >= k as H.
bool degree_condition(const MultiGraph& g, const MultiGraph& h);
// Smallest k violating the count inequality, if any.
std::optional<int> degree_condition_violation(const MultiGraph& g, const MultiGraph& h);

// Exactly one vertex of degree at least two, and it carries a loop.
bool is_exceptional(const MultiGraph& h);

// H itself when non-exceptional; otherwise H with its first edge
// subdivided (a loop becomes a 2-cycle). Never exceptional.
MultiGraph make_h_prime(const MultiGraph& h);

// Witness lines: `v x->y` per vertex, `e i: id id ...` per edge.
std::string format_witness(const ImmersionWitness& w);

}  // namespace tckit

#endif
